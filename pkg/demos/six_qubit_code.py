"""The [[6,1,3]] degenerate code: validity, correction, codewords and a logical CNOT."""

from __future__ import annotations

import numpy as np

from sixqubit import builtin_code, distance, error_set_single_and_pairs, verify_correction
from sixqubit.clifford import compute_codewords, loads_circuit, verify_logical_circuit

# %% the code and its parameters
code = builtin_code("six_qubit_degenerate")
print(code.stabilizer.to_strings())
print("distance", distance(code))

# %% every single error and pairwise product is caught or harmless
report = verify_correction(code, error_set_single_and_pairs(6))
harmless = [str(e) for e, v in report.verdicts.items() if v.kind.value == "in_stabilizer"]
print("corrects", report.corrects, "harmless", harmless)  # Z4Z6 is a stabilizer element

# %% logical basis states (Y is the real matrix ZX)
zero, one = compute_codewords(code)
for label, v in (("|0>", zero), ("|1>", one)):
    terms = [f"{'+' if a > 0 else '-'}{b:06b}" for b, a in enumerate(v) if abs(a) > 1e-12]
    print(label, " ".join(terms), "amplitude", np.round(np.max(np.abs(v)), 4))

# the published states sit in the eigenspace where h1 and h2 read -1
signed = compute_codewords(code, signs=[-1, -1, 1, 1, 1])
print("signed |0> leading terms", [f"{b:06b}" for b in np.flatnonzero(np.abs(signed[0]) > 1e-12)][:4])

# %% a transversal-looking CNOT between two blocks
cnot = loads_circuit("CZ 2 7\nCZ 5 7\nCZ 6 7\nCNOT 1 9\nCNOT 3 9\nCNOT 4 9\nCNOT 2 11\nCNOT 4 11\nCNOT 5 11", 12)
print("logical CNOT", verify_logical_circuit(cnot, code, 2, {"XI": "XX", "IZ": "ZZ", "ZI": "ZI", "IX": "IX"}))
