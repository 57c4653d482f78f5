"""From a truncated Hamming code to a [[6,1,3;1]] entanglement-assisted code and its encoder."""

from __future__ import annotations

from sixqubit import (
    build_ea_code,
    css_generators,
    delete_column,
    distance,
    hamming_7_4,
    min_ebits_css,
    reduce_to_ebit,
    builtin_code,
    steane_equivalence_transform,
    synthesize_encoder,
)
from sixqubit.clifford import dumps_circuit

# %% dropping one Hamming column breaks self-orthogonality
h = delete_column(hamming_7_4(), 6)
gens = css_generators(h, h)
print(gens.to_strings())
print("ebits needed", min_ebits_css(h))

# %% one shared ebit restores commutation; column 1 is the receiver's
ea = build_ea_code(gens, name="ea")
print(ea.stabilizer.to_strings(), "sender-side distance", distance(ea))

# %% an encoder that never touches the receiver's qubit
enc = synthesize_encoder(builtin_code("ea_613"))
print(dumps_circuit(enc.circuit))
print("canonical", enc.canonical.to_strings())

# %% any qubit of a standard code can be handed to the receiver
for q in range(6):
    print(q + 1, reduce_to_ebit(builtin_code("six_qubit_degenerate"), q).stabilizer.to_strings())

# %% the listed relabelling lands on a Steane-type code, up to column order
print(steane_equivalence_transform(builtin_code("ea_613")).stabilizer.to_strings())
