"""Codes built from classical parity checks: CSS generator sets,
entanglement-assisted assembly, ebit reduction and the Steane equivalence."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, IndependenceError, StructureError, UsageError
from .stabilizer import QuantumCode, derive_logicals, require_valid, symplectic_pairs
from .symplectic import BitMatrix, CheckMatrix, PauliString, gf2_rank, pauli_multiply


@dataclass(frozen=True)
class ClassicalParityCheck:
    H: BitMatrix

    @classmethod
    def from_strings(cls, rows) -> ClassicalParityCheck:
        return cls(BitMatrix.from_strings(rows))

    @property
    def length(self) -> int:
        return self.H.cols

    def corrects_single_error(self) -> bool:
        """All columns nonzero and pairwise distinct."""
        cols = [self.H.column(j) for j in range(self.H.cols)]
        return all(cols) and len(set(cols)) == len(cols)

    def rank(self) -> int:
        return gf2_rank(self.H)


def hamming_7_4() -> ClassicalParityCheck:
    return ClassicalParityCheck.from_strings(["1001011", "0101101", "0010111"])


def delete_column(h: ClassicalParityCheck, col: int) -> ClassicalParityCheck:
    """Drop 0-based column ``col``."""
    return ClassicalParityCheck(h.H.delete_column(col))


def loads_classical(text: str) -> ClassicalParityCheck:
    rows = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    return ClassicalParityCheck.from_strings([r for r in rows if r])


def dumps_classical(h: ClassicalParityCheck) -> str:
    return "\n".join(h.H.to_strings()) + "\n"


def css_generators(hx: ClassicalParityCheck, hz: ClassicalParityCheck | None) -> CheckMatrix:
    """Z-type rows from ``hz`` stacked over X-type rows from ``hx``.

    The rows need not commute.
    """
    m = hx.H.cols
    if hz is not None and hz.H.cols != m:
        raise DimensionError(f"column mismatch: Hx has {m}, Hz has {hz.H.cols}")
    z_rows = [PauliString(m, 0, r) for r in hz.H.rows] if hz is not None else []
    x_rows = [PauliString(m, r, 0) for r in hx.H.rows]
    return CheckMatrix(m, tuple(z_rows + x_rows))


def min_ebits_css(h: BitMatrix | ClassicalParityCheck) -> int:
    """Rank of ``H H^T`` over GF(2)."""
    if isinstance(h, ClassicalParityCheck):
        h = h.H
    return gf2_rank(h @ h.transpose())


def _prepend_columns(p: PauliString, c: int) -> PauliString:
    return PauliString(p.n + c, p.x << c, p.z << c)


def build_ea_code(gens: CheckMatrix, name: str = "") -> QuantumCode:
    """Make ``gens`` commute by adjoining one receiver column per anticommuting pair.

    Receiver columns are prepended. Within the ``i``-th pair found by
    symplectic Gram-Schmidt, the earlier row gets Z and the later row X
    on receiver column ``i``. Rows come out pairs first, then the
    isotropic remainder.
    """
    if not gens.is_independent():
        raise IndependenceError("generators are not independent")
    n = gens.n
    pairs, iso = symplectic_pairs([g.zx() for g in gens], n)
    c = len(pairs)
    rows = []
    for i, (a, b) in enumerate(pairs):
        pa = _prepend_columns(PauliString.from_zx(a, n), c)
        pb = _prepend_columns(PauliString.from_zx(b, n), c)
        rows.append(PauliString(n + c, pa.x, pa.z | (1 << i)))
        rows.append(PauliString(n + c, pb.x | (1 << i), pb.z))
    rows += [_prepend_columns(PauliString.from_zx(v, n), c) for v in iso]
    stab = CheckMatrix(n + c, tuple(rows))
    xs, zs = _alice_logicals(stab, frozenset(range(c)))
    code = QuantumCode(stab, tuple(xs), tuple(zs), bob_columns=frozenset(range(c)), name=name)
    require_valid(code)
    return code


def _clear_columns(p: PauliString, stab: CheckMatrix, columns) -> PauliString:
    """Multiply stabilizer rows into ``p`` until it is identity on ``columns``.

    Relies on each listed column carrying exactly one X row and one Z row.
    """
    for q in columns:
        bit = 1 << q
        x_row = next(s for s in stab if s.x & bit and not s.z & bit)
        z_row = next(s for s in stab if s.z & bit and not s.x & bit)
        if p.x & bit:
            p = p * x_row
        if p.z & bit:
            p = p * z_row
    return p


def _alice_logicals(stab: CheckMatrix, bob: frozenset[int]):
    xs, zs = derive_logicals(stab)
    if bob:
        xs = [_clear_columns(p, stab, sorted(bob)) for p in xs]
        zs = [_clear_columns(p, stab, sorted(bob)) for p in zs]
    return xs, zs


def reduce_to_ebit(code: QuantumCode, qubit: int) -> QuantumCode:
    """Recast a standard code as an EA code with 0-based ``qubit`` held by the receiver.

    Row operations leave exactly one generator with X and one with Z on
    that column: pivot per letter, eliminate duplicates, then absorb Y.
    """
    if code.c or code.r:
        raise UsageError("reduce_to_ebit needs a standard stabilizer code")
    if not 0 <= qubit < code.n:
        raise UsageError(f"qubit {qubit} outside 0..{code.n - 1}")
    require_valid(code)
    rows = list(code.stabilizer)
    letters = {rows[i].letter(qubit) for i in range(len(rows))} - {"I"}
    if len(letters) < 2:
        raise StructureError(
            f"column {qubit + 1} carries {sorted(letters) or 'no'} letters; need two distinct ones"
        )

    pivots: dict[str, int] = {}
    for letter in "XYZ":
        for i, r in enumerate(rows):
            if r.letter(qubit) != letter:
                continue
            if letter not in pivots:
                pivots[letter] = i
            else:
                rows[i] = pauli_multiply(r, rows[pivots[letter]])
    if "Y" in pivots:
        y = pivots.pop("Y")
        for letter in ("X", "Z"):
            if letter in pivots:
                rows[y] = pauli_multiply(rows[y], rows[pivots[letter]])
        # a lone partner turns Y into the missing letter
        if len(pivots) == 1:
            missing = "Z" if "X" in pivots else "X"
            pivots[missing] = y

    stab = CheckMatrix(code.n, tuple(rows))
    bob = frozenset({qubit})
    lx = tuple(_clear_columns(p, stab, [qubit]) for p in code.logical_x)
    lz = tuple(_clear_columns(p, stab, [qubit]) for p in code.logical_z)
    out = QuantumCode(stab, lx, lz, bob_columns=bob, name=f"{code.name}_ebit{qubit + 1}" if code.name else "")
    require_valid(out)
    return out


def _permute_columns(p: PauliString, perm: list[int]) -> PauliString:
    """``perm[old] = new`` (0-based)."""
    x = z = 0
    for old, new in enumerate(perm):
        x |= ((p.x >> old) & 1) << new
        z |= ((p.z >> old) & 1) << new
    return PauliString(p.n, x, z)


def steane_equivalence_transform(code: QuantumCode) -> QuantumCode:
    """Row products, swaps and column permutations taking the ``[[6,1,3;1]]``
    generator list (receiver column first) to the Steane code.
    """
    if code.n != 7 or len(code.stabilizer) != 6:
        raise UsageError("expects the receiver column plus six sender columns with six generators")
    g = list(code.stabilizer)
    g[0] = g[0] * g[1] * g[2]
    g[4] = g[4] * g[5]
    g[3], g[4] = g[4], g[3]

    # 1-based steps; each entry maps old position -> new position
    steps = [
        {2: 3, 3: 2},
        {1: 5, 5: 1},
        {p: (p - 2) % 7 + 1 for p in range(1, 8)},
        {p: 8 - p for p in range(1, 8)},
    ]
    perm = list(range(7))
    for step in steps:
        perm = [step.get(pos + 1, pos + 1) - 1 for pos in perm]
    stab = CheckMatrix(7, tuple(_permute_columns(p, perm) for p in g))
    lx = tuple(_permute_columns(p, perm) for p in code.logical_x)
    lz = tuple(_permute_columns(p, perm) for p in code.logical_z)
    return QuantumCode(stab, lx, lz, name="steane_from_ea")
