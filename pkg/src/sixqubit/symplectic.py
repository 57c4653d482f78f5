"""Phase-free Pauli algebra and GF(2) linear algebra on int bitsets.

Bit ``i`` of every bitset is column ``i`` counted from the left of the
printed form, so printed qubit ``q`` (1-based) lives at bit ``q - 1``.
The binary symplectic form of an ``n``-qubit Pauli places the Z block in
columns ``0..n-1`` and the X block in columns ``n..2n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, UsageError

_LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _LETTERS.items()}


def parity(v: int) -> int:
    return v.bit_count() & 1


def _bits_to_str(v: int, width: int) -> str:
    return "".join("1" if (v >> i) & 1 else "0" for i in range(width))


def _str_to_bits(s: str) -> int:
    v = 0
    for i, ch in enumerate(s):
        if ch == "1":
            v |= 1 << i
        elif ch != "0":
            raise UsageError(f"invalid bit character {ch!r} in {s!r}")
    return v


@dataclass(frozen=True)
class PauliString:
    """An ``n``-qubit Pauli operator up to global phase.

    ``x`` and ``z`` are bitsets; the letter on a column is I, X, Z or Y
    for (x, z) = (0, 0), (1, 0), (0, 1), (1, 1), with Y read as ZX.
    """

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError("a Pauli string needs at least one qubit")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise DimensionError(f"bits set beyond width {self.n}")

    @classmethod
    def from_str(cls, s: str) -> PauliString:
        s = s.strip()
        if not s:
            raise UsageError("empty Pauli string")
        x = z = 0
        for i, ch in enumerate(s.upper()):
            try:
                xb, zb = _BITS[ch]
            except KeyError:
                raise UsageError(f"invalid Pauli letter {ch!r} in {s!r}") from None
            x |= xb << i
            z |= zb << i
        return cls(len(s), x, z)

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> PauliString:
        """Weight-one Pauli ``letter`` on 0-based ``qubit``."""
        if not 0 <= qubit < n:
            raise DimensionError(f"qubit {qubit} outside 0..{n - 1}")
        xb, zb = _BITS[letter.upper()]
        return cls(n, xb << qubit, zb << qubit)

    @classmethod
    def from_zx(cls, v: int, n: int) -> PauliString:
        mask = (1 << n) - 1
        return cls(n, (v >> n) & mask, v & mask)

    def zx(self) -> int:
        """Binary symplectic form as one ``2n``-bit integer (Z block first)."""
        return self.z | (self.x << self.n)

    def letter(self, qubit: int) -> str:
        return _LETTERS[((self.x >> qubit) & 1, (self.z >> qubit) & 1)]

    @property
    def support(self) -> int:
        return self.x | self.z

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    def is_identity(self) -> bool:
        return not (self.x or self.z)

    def __mul__(self, other: PauliString) -> PauliString:
        return pauli_multiply(self, other)

    def __str__(self) -> str:
        return "".join(self.letter(i) for i in range(self.n))

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"


def _check_width(a: PauliString, b: PauliString):
    if a.n != b.n:
        raise DimensionError(f"width mismatch: {a.n} vs {b.n}")


def symplectic_product(a: PauliString, b: PauliString) -> int:
    """1 if ``a`` and ``b`` anticommute, 0 if they commute."""
    _check_width(a, b)
    return parity((a.x & b.z) ^ (a.z & b.x))


def pauli_multiply(a: PauliString, b: PauliString) -> PauliString:
    _check_width(a, b)
    return PauliString(a.n, a.x ^ b.x, a.z ^ b.z)


@dataclass(frozen=True)
class BitMatrix:
    """Dense GF(2) matrix stored as one int bitset per row."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        mask = (1 << self.cols) - 1
        if any(r & ~mask for r in self.rows):
            raise DimensionError(f"row has bits beyond {self.cols} columns")

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BitMatrix:
        rows = [r.strip() for r in rows if r.strip()]
        if not rows:
            raise UsageError("cannot infer width of an empty matrix; use BitMatrix((), cols)")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(tuple(_str_to_bits(r) for r in rows), width)

    @classmethod
    def zeros(cls, n_rows: int, cols: int) -> BitMatrix:
        return cls((0,) * n_rows, cols)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_strings(self) -> list[str]:
        return [_bits_to_str(r, self.cols) for r in self.rows]

    def transpose(self) -> BitMatrix:
        out = [0] * self.cols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    out[j] |= 1 << i
                r >>= 1
                j += 1
        return BitMatrix(tuple(out), len(self.rows))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.n_rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in self.rows:
            acc = 0
            for j in range(self.cols):
                if (r >> j) & 1:
                    acc ^= other.rows[j]
            out.append(acc)
        return BitMatrix(tuple(out), other.cols)

    def delete_column(self, col: int) -> BitMatrix:
        if not 0 <= col < self.cols:
            raise UsageError(f"column {col} outside 0..{self.cols - 1}")
        low = (1 << col) - 1
        rows = tuple((r & low) | ((r >> (col + 1)) << col) for r in self.rows)
        return BitMatrix(rows, self.cols - 1)

    def column(self, j: int) -> int:
        return sum(((r >> j) & 1) << i for i, r in enumerate(self.rows))

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def _rref_rows(rows: Iterable[int], cols: int) -> tuple[list[int], list[int]]:
    work = list(rows)
    pivots = []
    r = 0
    for col in range(cols):
        bit = 1 << col
        for i in range(r, len(work)):
            if work[i] & bit:
                break
        else:
            continue
        work[r], work[i] = work[i], work[r]
        for j in range(len(work)):
            if j != r and work[j] & bit:
                work[j] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work, pivots


def gf2_rref(m: BitMatrix) -> tuple[BitMatrix, list[int], int]:
    """Reduced row-echelon form, pivot columns and rank over GF(2).

    Zero rows are kept at the bottom so the shape is unchanged.
    """
    rows, pivots = _rref_rows(m.rows, m.cols)
    return BitMatrix(tuple(rows), m.cols), pivots, len(pivots)


def gf2_rank(m: BitMatrix | Sequence[int], cols: int | None = None) -> int:
    if isinstance(m, BitMatrix):
        rows, cols = m.rows, m.cols
    else:
        rows = m
        if cols is None:
            cols = max((r.bit_length() for r in rows), default=0)
    return len(_rref_rows(rows, cols)[1])


def reduce_against(v: int, basis: Sequence[int], pivots: Sequence[int]) -> int:
    """Residue of ``v`` after eliminating every pivot of an RREF basis."""
    for row, p in zip(basis, pivots):
        if (v >> p) & 1:
            v ^= row
    return v


def span_basis(rows: Iterable[int], cols: int) -> tuple[list[int], list[int]]:
    """Nonzero RREF rows and their pivots."""
    work, pivots = _rref_rows(rows, cols)
    return work[: len(pivots)], pivots


def nullspace(rows: Sequence[int], cols: int) -> list[int]:
    """Basis of ``{v : parity(v & r) == 0 for every r}``."""
    basis, pivots = span_basis(rows, cols)
    pivot_set = set(pivots)
    out = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(basis, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


@dataclass(frozen=True)
class CheckMatrix:
    """Ordered list of ``n``-qubit Pauli rows (a generator list)."""

    n: int
    rows: tuple[PauliString, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for p in self.rows:
            if p.n != self.n:
                raise DimensionError(f"row {p} has width {p.n}, expected {self.n}")

    @classmethod
    def from_strings(cls, rows: Sequence[str], n: int | None = None) -> CheckMatrix:
        paulis = [PauliString.from_str(r) for r in rows if r.strip()]
        if n is None:
            if not paulis:
                raise UsageError("cannot infer width of an empty generator list")
            n = paulis[0].n
        return cls(n, tuple(paulis))

    @classmethod
    def from_binary(cls, m: BitMatrix) -> CheckMatrix:
        if m.cols % 2:
            raise DimensionError("Z|X matrix needs an even column count")
        n = m.cols // 2
        return cls(n, tuple(PauliString.from_zx(r, n) for r in m.rows))

    def binary(self) -> BitMatrix:
        """The ``rows x 2n`` Z|X matrix."""
        return BitMatrix(tuple(p.zx() for p in self.rows), 2 * self.n)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[PauliString]:
        return iter(self.rows)

    def __getitem__(self, i: int) -> PauliString:
        return self.rows[i]

    def __add__(self, other: CheckMatrix) -> CheckMatrix:
        if other.n != self.n:
            raise DimensionError(f"width mismatch: {self.n} vs {other.n}")
        return CheckMatrix(self.n, self.rows + other.rows)

    def rank(self) -> int:
        return gf2_rank([p.zx() for p in self.rows], 2 * self.n)

    def is_independent(self) -> bool:
        return self.rank() == len(self.rows)

    def to_strings(self) -> list[str]:
        return [str(p) for p in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def group_contains(gens: CheckMatrix, p: PauliString) -> bool:
    """Phase-free membership of ``p`` in the group generated by ``gens``."""
    if gens.n != p.n:
        raise DimensionError(f"width mismatch: {gens.n} vs {p.n}")
    basis, pivots = span_basis((g.zx() for g in gens), 2 * gens.n)
    return reduce_against(p.zx(), basis, pivots) == 0


def group_equal(g1: CheckMatrix, g2: CheckMatrix) -> bool:
    if g1.n != g2.n:
        raise DimensionError(f"width mismatch: {g1.n} vs {g2.n}")
    cols = 2 * g1.n
    return span_basis((p.zx() for p in g1), cols)[0] == span_basis((p.zx() for p in g2), cols)[0]


def commutation_matrix(rows: Sequence[PauliString]) -> list[list[int]]:
    return [[symplectic_product(a, b) for b in rows] for a in rows]
