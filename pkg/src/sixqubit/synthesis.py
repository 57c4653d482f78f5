"""Encoder synthesis by reducing a generator matrix to canonical form.

The reduction walks columns left to right. Each step picks a pivot row
(rows that have an anticommuting partner go first, so ebit columns land
on the lowest indices), steers it to a single Z on the current column
with H, P, CNOT and SWAP gates, pairs it with an anticommuting partner
if one exists, and clears the column from the remaining rows with row
additions. Reversing the gate list gives the encoder.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Sequence, Union

from .clifford import CNOT, H, P, SWAP, CliffordCircuit, CliffordGate, conjugate_by_circuit, parse_gate
from .errors import IndependenceError, StructureError, UsageError
from .stabilizer import QuantumCode, symplectic_pairs
from .symplectic import CheckMatrix, PauliString, group_equal, parity, symplectic_product


@dataclass(frozen=True)
class RowOp:
    """``ROWADD i j`` multiplies row i into row j; ``ROWSWAP i j`` exchanges them (0-based)."""

    kind: str
    src: int
    dst: int

    def __str__(self) -> str:
        return f"{self.kind} {self.src + 1} {self.dst + 1}"


Step = Union[CliffordGate, RowOp]


class SynthesisError(StructureError):
    def __init__(self, message: str, script: Sequence[Step] = ()):
        super().__init__(message)
        self.script = list(script)


def parse_step(line: str) -> Step:
    parts = line.split()
    head = parts[0].upper()
    if head in ("ROWADD", "ROWSWAP"):
        if len(parts) != 3:
            raise UsageError(f"bad row operation {line!r}")
        return RowOp(head, int(parts[1]) - 1, int(parts[2]) - 1)
    return parse_gate(line)


def loads_script(text: str) -> list[Step]:
    steps = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            steps.append(parse_step(line))
    return steps


def dumps_script(script: Sequence[Step]) -> str:
    return "".join(f"{s}\n" for s in script)


def apply_step(step: Step, m: CheckMatrix) -> CheckMatrix:
    rows = list(m.rows)
    if isinstance(step, RowOp):
        if step.kind == "ROWADD":
            rows[step.dst] = rows[step.dst] * rows[step.src]
        else:
            rows[step.src], rows[step.dst] = rows[step.dst], rows[step.src]
        return CheckMatrix(m.n, tuple(rows))
    circ = CliffordCircuit(m.n, (step,))
    return CheckMatrix(m.n, tuple(conjugate_by_circuit(circ, p) for p in rows))


def replay(script: Sequence[Step], m: CheckMatrix) -> list[CheckMatrix]:
    """Matrices after each step (the input itself is not included)."""
    out = []
    for step in script:
        m = apply_step(step, m)
        out.append(m)
    return out


def matrix_digest(m: CheckMatrix, previous: str = "") -> str:
    text = previous + "|" + ";".join(m.to_strings())
    return hashlib.sha256(text.encode()).hexdigest()


# -- Gram-Schmidt and ebit counting ---------------------------------------------------


@dataclass(frozen=True)
class GramSchmidtResult:
    pairs: tuple[tuple[PauliString, PauliString], ...]
    isotropic: CheckMatrix

    @property
    def c(self) -> int:
        return len(self.pairs)


def symplectic_gram_schmidt(gens: CheckMatrix) -> GramSchmidtResult:
    """Split independent generators into anticommuting pairs and a commuting remainder."""
    if not gens.is_independent():
        raise IndependenceError("generators are not independent")
    n = gens.n
    pairs, iso = symplectic_pairs([g.zx() for g in gens], n)
    return GramSchmidtResult(
        tuple((PauliString.from_zx(a, n), PauliString.from_zx(b, n)) for a, b in pairs),
        CheckMatrix(n, tuple(PauliString.from_zx(v, n) for v in iso)),
    )


def canonical_target(
    n: int,
    k: int,
    c: int,
    ebit_columns: Sequence[int],
    ancilla_columns: Sequence[int],
    info_columns: Sequence[int],
) -> CheckMatrix:
    """Unencoded generators: (Z, X) on each ebit column, then Z on each ancilla."""
    cols = list(ebit_columns) + list(ancilla_columns) + list(info_columns)
    if sorted(cols) != list(range(n)):
        raise UsageError("ebit, ancilla and info columns must partition 0..n-1")
    if len(ebit_columns) != c or len(info_columns) != k:
        raise UsageError(f"need {c} ebit and {k} info columns")
    rows = []
    for q in ebit_columns:
        rows.append(PauliString(n, 0, 1 << q))
        rows.append(PauliString(n, 1 << q, 0))
    rows += [PauliString(n, 0, 1 << q) for q in ancilla_columns]
    return CheckMatrix(n, tuple(rows))


# -- reduction ----------------------------------------------------------------------


@dataclass
class SynthesisResult:
    circuit: CliffordCircuit
    reduction_script: list[Step]
    canonical: CheckMatrix
    ebits: int
    ebit_columns: list[int]
    ancilla_columns: list[int]
    info_columns: list[int]
    logical_x: list[PauliString] = field(default_factory=list)
    logical_z: list[PauliString] = field(default_factory=list)
    digests: list[str] = field(default_factory=list)
    gauge_columns: list[int] = field(default_factory=list)
    canonical_gauge: CheckMatrix | None = None

    def to_json(self) -> dict:
        return {
            "ebits": self.ebits,
            "ebit_columns": [q + 1 for q in self.ebit_columns],
            "ancilla_columns": [q + 1 for q in self.ancilla_columns],
            "info_columns": [q + 1 for q in self.info_columns],
            "gauge_columns": [q + 1 for q in self.gauge_columns],
            "reduction_script": [str(s) for s in self.reduction_script],
            "encoder": [str(g) for g in self.circuit.gates],
            "canonical": self.canonical.to_strings(),
            "logical_x": [str(p) for p in self.logical_x],
            "logical_z": [str(p) for p in self.logical_z],
            "digests": self.digests,
        }


class _Reducer:
    def __init__(self, rows: Sequence[PauliString], columns: Sequence[int]):
        self.n = rows[0].n if rows else 0
        self.rows = list(rows)
        self.columns = list(columns)
        self.mask = sum(1 << q for q in columns)
        self.script: list[Step] = []

    def gate(self, g: CliffordGate):
        self.script.append(g)
        circ = CliffordCircuit(self.n, (g,))
        self.rows = [conjugate_by_circuit(circ, p) for p in self.rows]

    def rowop(self, op: RowOp):
        self.script.append(op)
        m = apply_step(op, CheckMatrix(self.n, tuple(self.rows)))
        self.rows = list(m.rows)

    def sp(self, a: PauliString, b: PauliString) -> int:
        return parity(((a.x & b.z) ^ (a.z & b.x)) & self.mask)

    def letter(self, i: int, q: int) -> str:
        return self.rows[i].letter(q)

    def to_x(self, i: int, q: int):
        """Make row ``i`` read X (or I) on column ``q``."""
        a = self.letter(i, q)
        if a == "Z":
            self.gate(H(q))
        elif a == "Y":
            self.gate(P(q))

    def clear_tail(self, i: int, j: int, free: list[int]):
        """Leave row ``i`` with support only on ``j`` among ``free``."""
        for t in free:
            if t == j or self.letter(i, t) == "I":
                continue
            self.to_x(i, t)
            self.gate(CNOT(j, t))

    def run(self) -> tuple[list[int], list[int], list[int]]:
        free = list(self.columns)
        remaining = list(range(len(self.rows)))
        order: list[int] = []
        ebit_cols: list[int] = []
        anc_cols: list[int] = []
        while remaining:
            if not free:
                raise SynthesisError("ran out of columns; generators are dependent", self.script)
            pivot = next(
                (i for i in remaining if any(self.sp(self.rows[i], self.rows[j]) for j in remaining if j != i)),
                remaining[0],
            )
            j = free[0]
            support = self.rows[pivot].support & self.mask
            if not support:
                raise SynthesisError(f"row {pivot + 1} has no support left; generators are dependent", self.script)
            if not (support >> j) & 1:
                t = next(q for q in free if (support >> q) & 1)
                self.gate(SWAP(j, t))
            self.to_x(pivot, j)
            self.clear_tail(pivot, j, free)
            self.gate(H(j))
            others = [i for i in remaining if i != pivot]
            partner = next((i for i in others if self.sp(self.rows[pivot], self.rows[i])), None)
            if partner is not None:
                self.clear_tail(partner, j, free)
                if self.letter(partner, j) == "Y":
                    self.gate(P(j))
                for t in others:
                    if t == partner:
                        continue
                    if (self.rows[t].x >> j) & 1:
                        self.rowop(RowOp("ROWADD", partner, t))
                    if (self.rows[t].z >> j) & 1:
                        self.rowop(RowOp("ROWADD", pivot, t))
                order += [pivot, partner]
                remaining = [i for i in others if i != partner]
                ebit_cols.append(j)
            else:
                for t in others:
                    if (self.rows[t].z >> j) & 1:
                        self.rowop(RowOp("ROWADD", pivot, t))
                order.append(pivot)
                remaining = others
                anc_cols.append(j)
            free.pop(0)
        self._sort_rows(order)
        return ebit_cols, anc_cols, free

    def _sort_rows(self, order: list[int]):
        """ROWSWAPs so that row ``i`` holds the ``i``-th pivot."""
        where = list(range(len(self.rows)))  # where[orig] = current position
        at = list(range(len(self.rows)))  # at[pos] = orig row there
        for target, orig in enumerate(order):
            pos = where[orig]
            if pos != target:
                self.rowop(RowOp("ROWSWAP", target, pos))
                other = at[target]
                at[target], at[pos] = orig, other
                where[orig], where[other] = target, pos


def _align_bob(rows: list[PauliString], bob: Sequence[int]) -> tuple[list[PauliString], list[Step]]:
    """Row operations giving one row with Z and one with X on each receiver
    column (receiver part otherwise identity), moved to the top in that order."""
    n = rows[0].n
    script: list[Step] = []
    m = CheckMatrix(n, tuple(rows))
    chosen: list[int] = []
    bob_mask = sum(1 << q for q in bob)
    for q in sorted(bob):
        for kind in ("z", "x"):
            bit = 1 << q
            pick = next(
                (i for i, p in enumerate(m.rows) if i not in chosen and getattr(p, kind) & bit), None
            )
            if pick is None:
                raise SynthesisError(f"no generator carries {kind.upper()} on receiver column {q + 1}", script)
            chosen.append(pick)
            for i, p in enumerate(m.rows):
                if i != pick and getattr(p, kind) & bit:
                    op = RowOp("ROWADD", pick, i)
                    script.append(op)
                    m = apply_step(op, m)
    for i, p in enumerate(m.rows):
        if i not in chosen and p.support & bob_mask:
            raise SynthesisError(f"row {i + 1} keeps receiver support after alignment", script)
    order = chosen + [i for i in range(len(m.rows)) if i not in chosen]
    at = list(range(len(m.rows)))
    for target, orig in enumerate(order):
        pos = at.index(orig)
        if pos != target:
            op = RowOp("ROWSWAP", target, pos)
            script.append(op)
            m = apply_step(op, m)
            at[target], at[pos] = at[pos], at[target]
    return list(m.rows), script


def _reduce(rows: list[PauliString], columns: list[int], prefix: list[Step]):
    red = _Reducer(rows, columns)
    red.script = list(prefix)
    ebit_cols, anc_cols, info_cols = red.run()
    return red, ebit_cols, anc_cols, info_cols


def _finish(
    source: CheckMatrix, red: _Reducer, ebit_cols, anc_cols, info_cols, check_group: bool = True
) -> SynthesisResult:
    n = source.n
    canonical = CheckMatrix(n, tuple(red.rows))
    gates = [s for s in red.script if isinstance(s, CliffordGate)]
    encoder = CliffordCircuit(n, tuple(gates)).inverse()
    if check_group and not group_equal(
        CheckMatrix(n, tuple(conjugate_by_circuit(encoder, p) for p in canonical)), source
    ):
        raise SynthesisError("encoder does not reproduce the input group", red.script)
    lx = [conjugate_by_circuit(encoder, PauliString.single(n, q, "X")) for q in info_cols]
    lz = [conjugate_by_circuit(encoder, PauliString.single(n, q, "Z")) for q in info_cols]
    digests = []
    m = source
    prev = matrix_digest(m)
    digests.append(prev)
    for m in replay(red.script, source):
        prev = matrix_digest(m, prev)
        digests.append(prev)
    return SynthesisResult(
        encoder, red.script, canonical, len(ebit_cols), ebit_cols, anc_cols, info_cols, lx, lz, digests
    )


def synthesize_encoder(code: QuantumCode) -> SynthesisResult:
    """Encoder for ``code`` acting on its sender columns only.

    Conjugating ``result.canonical`` by ``result.circuit`` regenerates the
    stabilizer group; receiver columns are never touched by a gate.
    """
    rows = list(code.stabilizer)
    if not rows:
        raise UsageError("code has no stabilizer rows")
    if code.c and code.r:
        raise UsageError("synthesis of codes with both ebits and gauge qubits is not supported")
    if not code.stabilizer.is_independent():
        raise IndependenceError("stabilizer rows are not independent")
    if code.r:
        return _synthesize_subsystem(code)
    prefix: list[Step] = []
    if code.bob_columns:
        rows, prefix = _align_bob(rows, sorted(code.bob_columns))
    red, e, a, i = _reduce(rows, code.alice_columns, prefix)
    if len(e) != code.c:
        raise SynthesisError(f"found {len(e)} ebit pairs for a code declaring {code.c}", red.script)
    return _finish(code.stabilizer, red, e, a, i)


def _synthesize_subsystem(code: QuantumCode) -> SynthesisResult:
    """Gauge pairs are reduced alongside the stabilizer, so they land on
    (Z, X) pairs of their own columns and the stabilizer on Z ancillas."""
    gauge = list(code.gauge)
    source = code.stabilizer + CheckMatrix(code.n, tuple(gauge))
    red, g_cols, a, i = _reduce(list(source), list(range(code.n)), [])
    if len(g_cols) != code.r:
        raise SynthesisError(f"found {len(g_cols)} gauge pairs for a code declaring {code.r}", red.script)
    res = _finish(source, red, [], a, i)
    pair_rows = 2 * len(g_cols)
    res.ebits = 0
    res.gauge_columns = list(g_cols)
    res.canonical_gauge = CheckMatrix(code.n, res.canonical.rows[:pair_rows])
    res.canonical = CheckMatrix(code.n, res.canonical.rows[pair_rows:])
    stab = CheckMatrix(code.n, tuple(conjugate_by_circuit(res.circuit, p) for p in res.canonical))
    if not group_equal(stab, code.stabilizer):
        raise SynthesisError("ancilla rows do not map onto the stabilizer", red.script)
    return res


def synthesize_from_generators(gens: CheckMatrix) -> SynthesisResult:
    """Reduce a possibly non-commuting generator list; the pair count is the ebit count."""
    if not gens.is_independent():
        raise IndependenceError("generators are not independent")
    red, e, a, i = _reduce(list(gens), list(range(gens.n)), [])
    return _finish(gens, red, e, a, i)


def synthesis_report(result: SynthesisResult) -> str:
    return json.dumps(result.to_json(), indent=2)
