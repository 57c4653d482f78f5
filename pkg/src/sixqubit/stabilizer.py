"""Stabilizer, subsystem and entanglement-assisted code objects.

A :class:`QuantumCode` spans ``n`` columns in total. Columns listed in
``bob_columns`` belong to the receiver's halves of shared ebits; every
other column is a sender (Alice) qubit. Error sets and distances default
to Alice columns only.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionError, StructureError, UsageError
from .symplectic import (
    CheckMatrix,
    PauliString,
    nullspace,
    parity,
    reduce_against,
    span_basis,
    symplectic_product,
)

BUILTIN_NAMES = ("six_qubit_degenerate", "six_qubit_subsystem", "ea_613", "steane")


@dataclass(frozen=True)
class QuantumCode:
    """An ``[[n, k, d; c]]`` code with optional gauge generators.

    ``gauge`` holds ``2r`` rows stored as anticommuting pairs
    ``(g0, g1), (g2, g3), ...``; ``bob_columns`` are 0-based.
    """

    stabilizer: CheckMatrix
    logical_x: tuple[PauliString, ...] = ()
    logical_z: tuple[PauliString, ...] = ()
    gauge: CheckMatrix | None = None
    bob_columns: frozenset[int] = field(default_factory=frozenset)
    name: str = ""

    def __post_init__(self):
        if self.gauge is None:
            object.__setattr__(self, "gauge", CheckMatrix(self.stabilizer.n))
        object.__setattr__(self, "logical_x", tuple(self.logical_x))
        object.__setattr__(self, "logical_z", tuple(self.logical_z))
        object.__setattr__(self, "bob_columns", frozenset(self.bob_columns))

    @property
    def n(self) -> int:
        return self.stabilizer.n

    @property
    def k(self) -> int:
        return len(self.logical_x)

    @property
    def r(self) -> int:
        return len(self.gauge) // 2

    @property
    def c(self) -> int:
        return len(self.bob_columns)

    @property
    def alice_columns(self) -> list[int]:
        return [q for q in range(self.n) if q not in self.bob_columns]

    def gauge_group(self) -> CheckMatrix:
        """Stabilizer rows followed by gauge rows."""
        return self.stabilizer + self.gauge

    def params(self) -> str:
        alice = self.n - self.c
        tail = f";{self.c}" if self.c else ""
        gauge = f",r={self.r}" if self.r else ""
        return f"[[{alice},{self.k}{gauge}{tail}]]"


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    rows: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


def _first_dependent(rows: Sequence[PauliString], n: int) -> int | None:
    basis: list[int] = []
    for i, p in enumerate(rows):
        b, piv = span_basis(basis + [p.zx()], 2 * n)
        if len(b) == len(basis):
            return i
        basis = b
    return None


def validate_code(code: QuantumCode) -> Diagnostic | None:
    """Return the first violated structural invariant, or ``None``."""
    n = code.n
    stab = code.stabilizer.rows
    gauge = code.gauge.rows
    if code.gauge.n != n:
        return Diagnostic("width", (), f"gauge width {code.gauge.n} != {n}")
    for p in code.logical_x + code.logical_z:
        if p.n != n:
            return Diagnostic("width", (), f"logical {p} has width {p.n} != {n}")
    if len(code.logical_x) != len(code.logical_z):
        return Diagnostic("logicals", (), "logical X and Z lists differ in length")
    if len(gauge) % 2:
        return Diagnostic("gauge", (), "gauge rows must come in pairs")
    if any(not 0 <= q < n for q in code.bob_columns):
        return Diagnostic("width", (), "bob column outside the code")

    for i, j in itertools.combinations(range(len(stab)), 2):
        if symplectic_product(stab[i], stab[j]):
            return Diagnostic(
                "commutation", (i, j), f"stabilizer rows {i + 1} and {j + 1} anticommute"
            )
    i = _first_dependent(stab, n)
    if i is not None:
        return Diagnostic("independence", (i,), f"stabilizer row {i + 1} is dependent on earlier rows")
    for gi, g in enumerate(gauge):
        for si, s in enumerate(stab):
            if symplectic_product(g, s):
                return Diagnostic(
                    "gauge", (si, gi), f"gauge row {gi + 1} anticommutes with stabilizer row {si + 1}"
                )
    for a in range(0, len(gauge), 2):
        if not symplectic_product(gauge[a], gauge[a + 1]):
            return Diagnostic("gauge", (a, a + 1), f"gauge rows {a + 1} and {a + 2} do not anticommute")
    i = _first_dependent(stab + gauge, n)
    if i is not None:
        return Diagnostic("independence", (i,), f"gauge row {i - len(stab) + 1} lies in the span of earlier rows")
    if len(stab) + code.r + code.k != n:
        return Diagnostic(
            "count",
            (),
            f"{len(stab)} stabilizer rows + {code.r} gauge qubits + {code.k} logicals != {n} qubits",
        )

    for i, lx in enumerate(code.logical_x):
        for j, lz in enumerate(code.logical_z):
            if symplectic_product(lx, lz) != (i == j):
                return Diagnostic("logicals", (i, j), f"logical X{i + 1} / Z{j + 1} have wrong commutation")
    for kind, ops in (("X", code.logical_x), ("Z", code.logical_z)):
        for i, a in enumerate(ops):
            for j, b in enumerate(ops):
                if i < j and symplectic_product(a, b):
                    return Diagnostic("logicals", (i, j), f"logical {kind}{i + 1} and {kind}{j + 1} anticommute")
            for si, s in enumerate(stab + gauge):
                if symplectic_product(a, s):
                    what = "stabilizer" if si < len(stab) else "gauge"
                    idx = si if si < len(stab) else si - len(stab)
                    return Diagnostic(
                        "logicals", (i, si), f"logical {kind}{i + 1} anticommutes with {what} row {idx + 1}"
                    )

    for q in sorted(code.bob_columns):
        letters = [s.letter(q) for s in stab]
        if sorted(ch for ch in letters if ch != "I") != ["X", "Z"]:
            return Diagnostic(
                "ebit", (q,), f"bob column {q + 1} must carry exactly one X and one Z, found {''.join(letters)}"
            )
        for p in gauge + code.logical_x + code.logical_z:
            if p.letter(q) != "I":
                return Diagnostic("ebit", (q,), f"{p} acts on bob column {q + 1}")
    return None


def require_valid(code: QuantumCode) -> None:
    diag = validate_code(code)
    if diag is not None:
        raise StructureError(str(diag))


# -- error sets ---------------------------------------------------------------


def _columns(n: int, columns: Iterable[int] | None) -> list[int]:
    cols = list(range(n)) if columns is None else sorted(set(columns))
    if not cols:
        raise UsageError("empty column set")
    if any(not 0 <= q < n for q in cols):
        raise DimensionError(f"column outside 0..{n - 1}")
    return cols


def single_errors(n: int, columns: Iterable[int] | None = None) -> list[PauliString]:
    return [PauliString.single(n, q, a) for q in _columns(n, columns) for a in "XYZ"]


def pair_products(n: int, columns: Iterable[int] | None = None) -> list[PauliString]:
    """Products of every unordered pair of distinct errors from {I} and the singles.

    Not deduplicated: six qubits give C(19, 2) = 171 products.
    """
    errs = [PauliString.identity(n)] + single_errors(n, columns)
    return [a * b for a, b in itertools.combinations(errs, 2)]


def error_set_single_and_pairs(n: int, columns: Iterable[int] | None = None) -> list[PauliString]:
    """Deduplicated weight-one errors and pairwise products, singles first."""
    seen: dict[PauliString, None] = {}
    for p in single_errors(n, columns) + pair_products(n, columns):
        seen.setdefault(p, None)
    return list(seen)


# -- correction -----------------------------------------------------------------


class VerdictKind(enum.Enum):
    ANTICOMMUTES = "anticommutes"
    IN_STABILIZER = "in_stabilizer"
    IN_GAUGE = "in_gauge"
    FAIL = "fail"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    generator: int | None = None

    def __str__(self) -> str:
        if self.kind is VerdictKind.ANTICOMMUTES:
            return f"anticommutes with g{self.generator + 1}"
        return self.kind.value


@dataclass
class CorrectionReport:
    checked_pairs: int
    verdicts: dict[PauliString, Verdict]

    @property
    def corrects(self) -> bool:
        return not self.failures

    @property
    def failures(self) -> list[PauliString]:
        return [e for e, v in self.verdicts.items() if v.kind is VerdictKind.FAIL]

    def count(self, kind: VerdictKind) -> int:
        return sum(v.kind is kind for v in self.verdicts.values())


def verify_correction(code: QuantumCode, errors: Iterable[PauliString]) -> CorrectionReport:
    """Classify each error product against the correction conditions.

    A product is fine if some stabilizer generator anticommutes with it
    (the smallest such index is reported), or if it lies in the
    stabilizer, or, for subsystem codes, in the gauge group.
    """
    n = code.n
    stab = list(code.stabilizer)
    s_basis, s_piv = span_basis((s.zx() for s in stab), 2 * n)
    g_basis, g_piv = span_basis((s.zx() for s in code.gauge_group()), 2 * n)
    verdicts: dict[PauliString, Verdict] = {}
    count = 0
    for e in errors:
        if e.n != n:
            raise DimensionError(f"error {e} has width {e.n}, code has {n}")
        count += 1
        if e in verdicts:
            continue
        for i, s in enumerate(stab):
            if parity((e.x & s.z) ^ (e.z & s.x)):
                verdicts[e] = Verdict(VerdictKind.ANTICOMMUTES, i)
                break
        else:
            if reduce_against(e.zx(), s_basis, s_piv) == 0:
                verdicts[e] = Verdict(VerdictKind.IN_STABILIZER)
            elif len(code.gauge) and reduce_against(e.zx(), g_basis, g_piv) == 0:
                verdicts[e] = Verdict(VerdictKind.IN_GAUGE)
            else:
                verdicts[e] = Verdict(VerdictKind.FAIL)
    return CorrectionReport(count, verdicts)


def corrects_single_errors(code: QuantumCode, all_columns: bool = False) -> CorrectionReport:
    cols = None if all_columns else code.alice_columns
    return verify_correction(code, pair_products(code.n, cols))


# -- distance -------------------------------------------------------------------


def paulis_of_weight(n: int, w: int, columns: Sequence[int]) -> Iterable[PauliString]:
    """All Paulis of weight ``w`` on ``columns``, by support then letters."""
    for support in itertools.combinations(columns, w):
        for letters in itertools.product("XZY", repeat=w):
            x = z = 0
            for q, a in zip(support, letters):
                if a != "Z":
                    x |= 1 << q
                if a != "X":
                    z |= 1 << q
            yield PauliString(n, x, z)


def distance(code: QuantumCode, max_weight: int | None = None, all_columns: bool = False) -> int | None:
    """Smallest weight of a Pauli in the centralizer of the stabilizer but
    outside the group generated by stabilizer and gauge.

    Only Alice columns are searched unless ``all_columns``. Returns ``None``
    when nothing is found up to ``max_weight``.
    """
    n = code.n
    cols = list(range(n)) if all_columns else code.alice_columns
    if max_weight is None:
        max_weight = len(cols)
    if max_weight > n:
        raise UsageError(f"max_weight {max_weight} exceeds n = {n}")
    stab = [(s.x, s.z) for s in code.stabilizer]
    basis, piv = span_basis((s.zx() for s in code.gauge_group()), 2 * n)
    for w in range(1, max_weight + 1):
        for p in paulis_of_weight(n, w, cols):
            if any(parity((p.x & sz) ^ (p.z & sx)) for sx, sz in stab):
                continue
            if reduce_against(p.zx(), basis, piv):
                return w
    return None


# -- bounds and conversions -----------------------------------------------------


class Singleton(enum.Enum):
    SATURATED = "saturated"
    SATISFIED = "satisfied"
    VIOLATED = "violated"


def singleton_check(n: int, k: int, r: int, d: int) -> Singleton:
    """Compare ``n - k - r`` with ``2(d - 1)``."""
    if min(n, k, r, d) < 0:
        raise UsageError("parameters must be nonnegative")
    lhs, rhs = n - k - r, 2 * (d - 1)
    if lhs == rhs:
        return Singleton.SATURATED
    return Singleton.SATISFIED if lhs > rhs else Singleton.VIOLATED


def to_subsystem(code: QuantumCode, promote: int, partner: PauliString) -> QuantumCode:
    """Turn stabilizer row ``promote`` into a gauge qubit with ``partner``.

    The gauge pair is appended as ``(partner, row)``.
    """
    stab = list(code.stabilizer)
    if not 0 <= promote < len(stab):
        raise UsageError(f"row {promote} outside 0..{len(stab) - 1}")
    row = stab.pop(promote)
    if partner.n != code.n:
        raise DimensionError("partner width mismatch")
    if not symplectic_product(row, partner):
        raise StructureError(f"partner {partner} commutes with promoted row {row}")
    for s in stab + list(code.gauge) + list(code.logical_x + code.logical_z):
        if symplectic_product(s, partner):
            raise StructureError(f"partner {partner} anticommutes with {s}")
    return QuantumCode(
        CheckMatrix(code.n, tuple(stab)),
        code.logical_x,
        code.logical_z,
        code.gauge + CheckMatrix(code.n, (partner, row)),
        code.bob_columns,
        name=code.name + "_subsystem" if code.name else "",
    )


def symplectic_pairs(vectors: Sequence[int], n: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Greedy symplectic Gram-Schmidt on ``zx`` integers.

    Scans in order; each unpaired vector is paired with the first later
    vector it anticommutes with and the pair is cleaned out of the rest.
    """

    def sp(a: int, b: int) -> int:
        mask = (1 << n) - 1
        return parity(((a >> n) & b & mask) ^ (a & mask & (b >> n)))

    work = list(vectors)
    pairs: list[tuple[int, int]] = []
    iso: list[int] = []
    while work:
        a = work.pop(0)
        j = next((j for j, b in enumerate(work) if sp(a, b)), None)
        if j is None:
            iso.append(a)
            continue
        b = work.pop(j)
        pairs.append((a, b))
        cleaned = []
        for t in work:
            t2 = t
            if sp(t, b):
                t2 ^= a
            if sp(t, a):
                t2 ^= b
            cleaned.append(t2)
        work = cleaned
    return pairs, iso


def derive_logicals(stabilizer: CheckMatrix, gauge: CheckMatrix | None = None) -> tuple[list[PauliString], list[PauliString]]:
    """Logical X/Z pairs spanning the centralizer of stabilizer+gauge modulo the stabilizer.

    Deterministic: centralizer basis from the RREF nullspace, reduced
    against the stabilizer RREF, then paired greedily.
    """
    n = stabilizer.n
    gens = list(stabilizer) + (list(gauge) if gauge is not None else [])
    swapped = [g.x | (g.z << n) for g in gens]
    cent = nullspace(swapped, 2 * n)
    s_basis, s_piv = span_basis((s.zx() for s in stabilizer), 2 * n)
    reps: list[int] = []
    basis: list[int] = list(s_basis)
    for v in cent:
        v = reduce_against(v, s_basis, s_piv)
        b, _ = span_basis(basis + [v], 2 * n)
        if len(b) > len(basis):
            basis = b
            reps.append(v)
    pairs, iso = symplectic_pairs(reps, n)
    if iso:
        raise StructureError("centralizer quotient has an isotropic part; generators are inconsistent")
    xs = [PauliString.from_zx(a, n) for a, _ in pairs]
    zs = [PauliString.from_zx(b, n) for _, b in pairs]
    return xs, zs


def with_derived_logicals(code: QuantumCode) -> QuantumCode:
    xs, zs = derive_logicals(code.stabilizer, code.gauge)
    return QuantumCode(code.stabilizer, tuple(xs), tuple(zs), code.gauge, code.bob_columns, code.name)


def equivalent_mod_stabilizer(code: QuantumCode, a: PauliString, b: PauliString) -> bool:
    """True if ``a * b`` lies in the stabilizer group."""
    basis, piv = span_basis((s.zx() for s in code.stabilizer), 2 * code.n)
    return reduce_against((a * b).zx(), basis, piv) == 0


# -- builtin fixtures -----------------------------------------------------------


def _cm(rows: Sequence[str]) -> CheckMatrix:
    return CheckMatrix.from_strings(rows)


def _p(s: str) -> PauliString:
    return PauliString.from_str(s)


SIX_QUBIT_ROWS = ("YIZXXY", "ZXIIXZ", "IZXXXX", "IIIZIZ", "ZZZIZI")

EA_613_ROWS = (
    "IZIZZZI",
    "IZZIIZZ",
    "ZZIIZIZ",
    "IXXIIXX",
    "IIXXXIX",
    "XXIIXIX",
)


def builtin_code(name: str) -> QuantumCode:
    if name == "six_qubit_degenerate":
        return QuantumCode(_cm(SIX_QUBIT_ROWS), (_p("ZIXIXI"),), (_p("IZIIZZ"),), name=name)
    if name == "six_qubit_subsystem":
        rows = [r for i, r in enumerate(SIX_QUBIT_ROWS) if i != 3]
        return QuantumCode(
            _cm(rows), (_p("ZIXIXI"),), (_p("IZIIZZ"),), _cm(["IIIXII", "IIIZIZ"]), name=name
        )
    if name == "ea_613":
        return QuantumCode(
            _cm(EA_613_ROWS), (_p("IIIIXXX"),), (_p("IIZZIZI"),), bob_columns=frozenset({0}), name=name
        )
    if name == "steane":
        from .cssea import css_generators, hamming_7_4

        h = hamming_7_4()
        stab = css_generators(h, h)
        xs, zs = derive_logicals(stab)
        return QuantumCode(stab, tuple(xs), tuple(zs), name=name)
    raise UsageError(f"unknown builtin code {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


# -- text format ----------------------------------------------------------------

_SECTIONS = ("stabilizer", "gauge", "logical_x", "logical_z", "bob_columns")


def loads_code(text: str, name: str = "") -> QuantumCode:
    """Parse the sectioned code file format."""
    sections: dict[str, list[str]] = {s: [] for s in _SECTIONS}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current not in sections:
                raise UsageError(f"line {lineno}: unknown section [{current}]")
            continue
        if current is None:
            raise UsageError(f"line {lineno}: content before any section header")
        sections[current].append(line)
    if not sections["stabilizer"]:
        raise UsageError("code file has no [stabilizer] rows")
    stab = _cm(sections["stabilizer"])
    n = stab.n

    def rows(key: str) -> tuple[PauliString, ...]:
        out = tuple(_p(r) for r in sections[key])
        for p in out:
            if p.n != n:
                raise DimensionError(f"[{key}] row {p} has width {p.n}, expected {n}")
        return out

    try:
        bob = frozenset(int(v) - 1 for v in sections["bob_columns"])
    except ValueError as exc:
        raise UsageError(f"bad [bob_columns] entry: {exc}") from None
    return QuantumCode(
        stab, rows("logical_x"), rows("logical_z"), CheckMatrix(n, rows("gauge")), bob, name=name
    )


def dumps_code(code: QuantumCode) -> str:
    lines = []
    if code.name:
        lines.append(f"# {code.name} {code.params()}")
    lines.append("[stabilizer]")
    lines += code.stabilizer.to_strings()
    if len(code.gauge):
        lines.append("[gauge]")
        lines += code.gauge.to_strings()
    lines.append("[logical_x]")
    lines += [str(p) for p in code.logical_x]
    lines.append("[logical_z]")
    lines += [str(p) for p in code.logical_z]
    if code.bob_columns:
        lines.append("[bob_columns]")
        lines += [str(q + 1) for q in sorted(code.bob_columns)]
    return "\n".join(lines) + "\n"


def load_code(path) -> QuantumCode:
    with open(path) as fh:
        return loads_code(fh.read())


def save_code(code: QuantumCode, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_code(code))
