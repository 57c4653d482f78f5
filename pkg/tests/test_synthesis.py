from __future__ import annotations

import pytest

from reference_data import MISPRINTED, SIX_ROW_CSS_DISPLAY, WALKTHROUGH_STEPS, load_walkthrough
from sixqubit.clifford import CNOT, H, conjugate_by_circuit
from sixqubit.errors import IndependenceError, UsageError
from sixqubit.stabilizer import BUILTIN_NAMES, builtin_code
from sixqubit.symplectic import CheckMatrix, group_equal, symplectic_product
from sixqubit.synthesis import (
    RowOp,
    canonical_target,
    dumps_script,
    loads_script,
    matrix_digest,
    replay,
    symplectic_gram_schmidt,
    synthesize_encoder,
    synthesize_from_generators,
)


@pytest.fixture(scope="module")
def walkthrough():
    return load_walkthrough()


def _replay_walkthrough(mats):
    """Apply each printed step to the previously computed matrix."""
    out = {1: mats[1]}
    for k, text in enumerate(WALKTHROUGH_STEPS, start=2):
        out[k] = replay(loads_script(text), out[k - 1])[-1]
    return out


def test_walkthrough_matches_printed_matrices(walkthrough):
    computed = _replay_walkthrough(walkthrough)
    mismatched = {k for k in computed if computed[k] != walkthrough[k]}
    assert mismatched == MISPRINTED
    assert computed[17] == walkthrough[17]


def test_walkthrough_misprints(walkthrough):
    """Two printed matrices differ only by row products; the third has a
    column swap applied inconsistently and the next matrix follows from
    the corrected one."""
    computed = _replay_walkthrough(walkthrough)
    assert group_equal(computed[5], walkthrough[5])
    assert group_equal(computed[6], walkthrough[6])
    assert not group_equal(computed[11], walkthrough[11])
    assert replay(loads_script(WALKTHROUGH_STEPS[10]), computed[11])[-1] == walkthrough[12]


def test_canonical_target_matches_walkthrough_endpoint(walkthrough):
    assert canonical_target(6, 1, 1, [0], [1, 2, 3, 4], [5]) == walkthrough[17]
    with pytest.raises(UsageError):
        canonical_target(6, 1, 1, [0], [1, 2, 3], [5])
    with pytest.raises(UsageError):
        canonical_target(6, 1, 2, [0], [1, 2, 3, 4], [5])


def test_gram_schmidt_on_six_row_display():
    res = symplectic_gram_schmidt(CheckMatrix.from_strings(SIX_ROW_CSS_DISPLAY))
    assert res.c == 1
    (a, b), = res.pairs
    assert symplectic_product(a, b) == 1
    assert len(res.isotropic) == 4
    with pytest.raises(IndependenceError):
        symplectic_gram_schmidt(CheckMatrix.from_strings(["XX", "XX"]))


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_synthesis_regenerates_the_code(name):
    code = builtin_code(name)
    res = synthesize_encoder(code)
    stab = CheckMatrix(code.n, tuple(conjugate_by_circuit(res.circuit, p) for p in res.canonical))
    assert group_equal(stab, code.stabilizer)
    assert res.ebits == code.c
    assert len(res.info_columns) == code.k
    for g in res.circuit.gates:
        assert not set(g.qubits) & code.bob_columns
    source = code.stabilizer + code.gauge if code.r else code.stabilizer
    assert group_equal(replay(res.reduction_script, source)[-1], res.canonical + (res.canonical_gauge or CheckMatrix(code.n, ())))
    for x, z in zip(res.logical_x, res.logical_z):
        assert symplectic_product(x, z) == 1
        assert all(symplectic_product(s, x) == symplectic_product(s, z) == 0 for s in code.stabilizer)


def test_synthesis_layouts():
    assert synthesize_encoder(builtin_code("six_qubit_degenerate")).ancilla_columns == [0, 1, 2, 3, 4]
    ea = synthesize_encoder(builtin_code("ea_613"))
    assert (ea.ebit_columns, ea.ancilla_columns, ea.info_columns) == ([1], [2, 3, 4, 5], [6])
    # receiver column 0 pairs with ebit column 1
    assert ea.canonical.to_strings() == [
        "ZZIIIII", "XXIIIII", "IIZIIII", "IIIZIII", "IIIIZII", "IIIIIZI",
    ]


def test_subsystem_synthesis_splits_gauge():
    res = synthesize_encoder(builtin_code("six_qubit_subsystem"))
    assert res.gauge_columns == [0]
    assert res.canonical_gauge.to_strings() == ["ZIIIII", "XIIIII"]
    assert res.ancilla_columns == [1, 2, 3, 4] and res.info_columns == [5]


def test_synthesis_from_non_commuting_generators():
    res = synthesize_from_generators(CheckMatrix.from_strings(SIX_ROW_CSS_DISPLAY))
    assert res.ebits == 1
    assert res.canonical == canonical_target(6, 1, 1, res.ebit_columns, res.ancilla_columns, res.info_columns)


def test_script_round_trip_and_digest_chain():
    script = [H(0), CNOT(0, 2), RowOp("ROWADD", 0, 1), RowOp("ROWSWAP", 1, 2)]
    text = dumps_script(script)
    assert text.splitlines()[2:] == ["ROWADD 1 2", "ROWSWAP 2 3"]
    assert loads_script(text + "# trailing comment\n") == script
    with pytest.raises(UsageError):
        loads_script("ROWADD 1")
    res = synthesize_encoder(builtin_code("six_qubit_degenerate"))
    mats = [builtin_code("six_qubit_degenerate").stabilizer] + replay(
        res.reduction_script, builtin_code("six_qubit_degenerate").stabilizer
    )
    prev = ""
    for m, d in zip(mats, res.digests):
        prev = matrix_digest(m, prev)
        assert prev == d
    assert len(res.digests) == len(mats)
