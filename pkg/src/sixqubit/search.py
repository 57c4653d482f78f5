"""Exhaustive search over CSS codes (optionally with one ebit).

X-type rows span a subspace A and Z-type rows a subspace B of GF(2)^m,
with m = n + c and the receiver column last. Commuting pairs are exactly
those with B inside the orthogonal complement of A, so B is enumerated
there directly. A pair survives when every sender-side X or Z error of
weight below ``d`` is either detected or a stabilizer element.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .errors import CapacityError, UsageError
from .symplectic import BitMatrix, CheckMatrix, PauliString, nullspace, parity, reduce_against, span_basis

MAX_COLUMNS = 8


def gaussian_binomial(m: int, d: int) -> int:
    """Number of ``d``-dimensional subspaces of GF(2)^m."""
    if d < 0 or d > m:
        return 0
    num = den = 1
    for i in range(d):
        num *= (1 << m) - (1 << i)
        den *= (1 << d) - (1 << i)
    return num // den


def enumerate_gf2_subspaces(m: int, dim: int) -> Iterator[BitMatrix]:
    """Every ``dim``-dimensional subspace of GF(2)^m once, as its RREF basis."""
    if dim < 0 or dim > m:
        raise UsageError(f"dimension {dim} outside 0..{m}")
    for pivots in combinations(range(m), dim):
        pset = set(pivots)
        free = [[j for j in range(p + 1, m) if j not in pset] for p in pivots]
        slots = [(i, j) for i, cols in enumerate(free) for j in cols]
        for bits in product((0, 1), repeat=len(slots)):
            rows = [1 << p for p in pivots]
            for (i, j), b in zip(slots, bits):
                if b:
                    rows[i] |= 1 << j
            yield BitMatrix(tuple(rows), m)


def dimension_feasibility(n: int, c: int) -> bool:
    """Non-degenerate packing condition (3n+1)*2 <= 2^(n+c)."""
    if n < 1 or c < 0:
        raise UsageError("need n >= 1 and c >= 0")
    return (3 * n + 1) * 2 <= 2 ** (n + c)


@dataclass(frozen=True)
class SearchSpec:
    n: int
    k: int
    d: int
    c: int = 0
    splits: tuple[tuple[int, int], ...] | None = None  # restrict to these (dx, dz)

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.d < 1:
            raise UsageError("need n, k, d >= 1")
        if self.c not in (0, 1):
            raise UsageError("ebits must be 0 or 1")
        if self.k > self.n:
            raise UsageError("k cannot exceed n")
        if self.n + self.c > MAX_COLUMNS:
            raise CapacityError(f"n + c = {self.n + self.c} exceeds the limit of {MAX_COLUMNS} columns")

    @property
    def m(self) -> int:
        return self.n + self.c

    @property
    def generators(self) -> int:
        return self.n + self.c - self.k

    def all_splits(self) -> list[tuple[int, int]]:
        s = self.generators
        full = [(dx, s - dx) for dx in range(s + 1) if dx <= self.m and s - dx <= self.m]
        if self.splits is None:
            return full
        bad = [sp for sp in self.splits if sp not in full]
        if bad:
            raise UsageError(f"splits {bad} do not sum to {s}")
        return [sp for sp in full if sp in self.splits]


@dataclass
class Census:
    enumerated: int = 0
    commuting: int = 0
    standard_form: int = 0
    passed_distance: int = 0

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SearchReport:
    spec: SearchSpec
    census: dict[tuple[int, int], Census]
    survivors: list[CheckMatrix] = field(default_factory=list)
    wall_time: float = 0.0

    def key(self):
        """Everything except timing, for serial/parallel comparison."""
        return (
            {sp: c.to_json() for sp, c in self.census.items()},
            [m.to_strings() for m in self.survivors],
        )

    def to_json(self) -> dict:
        s = self.spec
        return {
            "spec": {"n": s.n, "k": s.k, "d": s.d, "ebits": s.c},
            "census": [{"dx": dx, "dz": dz, **c.to_json()} for (dx, dz), c in self.census.items()],
            "survivors": [m.to_strings() for m in self.survivors],
            "survivor_count": len(self.survivors),
            "wall_time": self.wall_time,
        }


def _low_weight(n: int, d: int) -> list[int]:
    out = []
    for w in range(1, d):
        for cols in combinations(range(n), w):
            out.append(sum(1 << q for q in cols))
    return out


def _orthogonal(v: int, basis: Sequence[int]) -> bool:
    return not any(parity(v & b) for b in basis)


def _in_span(v: int, basis: Sequence[int], m: int) -> bool:
    rows, piv = span_basis(basis, m)
    return reduce_against(v, rows, piv) == 0


def css_passes(a_rows: Sequence[int], b_rows: Sequence[int], n: int, d: int, c: int) -> bool:
    """Distance test on sender columns for X rows ``a_rows`` and Z rows ``b_rows``."""
    m = n + c
    a_basis, a_piv = span_basis(a_rows, m)
    b_basis, b_piv = span_basis(b_rows, m)
    for w in _low_weight(n, d):
        if _orthogonal(w, b_basis) and reduce_against(w, a_basis, a_piv):
            return False
        if _orthogonal(w, a_basis) and reduce_against(w, b_basis, b_piv):
            return False
    return True


def _scan(task) -> tuple[list[tuple[int, int, int]], list[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Worker: census deltas and survivors for one chunk of X-subspaces."""
    n, c, d, dx, dz, a_list = task
    m = n + c
    bob = 1 << n if c else 0
    low = _low_weight(n, d)
    z_subs = [s.rows for s in enumerate_gf2_subspaces(m - dx, dz)]
    commuting = standard = passed = 0
    survivors = []
    for a in a_list:
        if bob and not any(r & bob for r in a):
            commuting += len(z_subs)
            continue
        a_basis, a_piv = span_basis(a, m)
        perp = nullspace(a, m)
        must_in_b = [w for w in low if _orthogonal(w, a)]
        outside_a = [w for w in low if reduce_against(w, a_basis, a_piv)]
        for coeffs in z_subs:
            commuting += 1
            b = []
            for r in coeffs:
                v = 0
                i = 0
                while r:
                    if r & 1:
                        v ^= perp[i]
                    r >>= 1
                    i += 1
                b.append(v)
            if bob and not any(v & bob for v in b):
                continue
            standard += 1
            ok = all(not _orthogonal(w, b) for w in outside_a)
            if ok and must_in_b:
                b_basis, b_piv = span_basis(b, m)
                ok = all(reduce_against(w, b_basis, b_piv) == 0 for w in must_in_b)
            if ok:
                passed += 1
                survivors.append((tuple(a), tuple(b)))
    return [(commuting, standard, passed)], survivors


def _one_carrier(rows: Sequence[int], bit: int) -> list[int]:
    """Row operations leaving a single row with ``bit`` set."""
    rows = list(rows)
    carrier = next((i for i, r in enumerate(rows) if r & bit), None)
    if carrier is not None:
        rows = [r ^ rows[carrier] if i != carrier and r & bit else r for i, r in enumerate(rows)]
    return rows


def _survivor_matrix(a: Sequence[int], b: Sequence[int], m: int, c: int) -> CheckMatrix:
    if c:
        a, b = _one_carrier(a, 1 << (m - 1)), _one_carrier(b, 1 << (m - 1))
    rows = [PauliString(m, 0, v) for v in b] + [PauliString(m, v, 0) for v in a]
    return CheckMatrix(m, tuple(rows))


def _chunks(items: list, parts: int) -> list[list]:
    if not items:
        return []
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def search_css(spec: SearchSpec, jobs: int = 1) -> SearchReport:
    """Census and survivors over every (dx, dz) split of ``spec``.

    ``jobs=1`` runs serially; larger values farm contiguous chunks of
    X-subspaces to worker processes and merge them in chunk order, so the
    report does not depend on ``jobs``.
    """
    if jobs < 1:
        raise UsageError("jobs must be >= 1")
    start = time.perf_counter()
    n, c, d, m = spec.n, spec.c, spec.d, spec.m
    tasks = []
    census: dict[tuple[int, int], Census] = {}
    for dx, dz in spec.all_splits():
        census[(dx, dz)] = Census(enumerated=gaussian_binomial(m, dx) * gaussian_binomial(m, dz))
        a_all = [s.rows for s in enumerate_gf2_subspaces(m, dx)]
        # fixed chunking keeps the merge independent of the worker count
        for chunk in _chunks(a_all, 16):
            tasks.append(((dx, dz), (n, c, d, dx, dz, chunk)))
    if jobs == 1:
        results = [_scan(t) for _, t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan, [t for _, t in tasks]))
    survivors = []
    for (split, _), (counts, surv) in zip(tasks, results):
        for comm, std, passed in counts:
            cen = census[split]
            cen.commuting += comm
            cen.standard_form += std
            cen.passed_distance += passed
        survivors += [_survivor_matrix(a, b, m, c) for a, b in surv]
    return SearchReport(spec, census, survivors, time.perf_counter() - start)


def default_jobs() -> int:
    env = os.environ.get("QEC_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"QEC_JOBS must be an integer, got {env!r}") from None
    return 1


def survivor_code(m: CheckMatrix, spec: SearchSpec):
    """A survivor as a validated code (receiver column last when ``c == 1``)."""
    from .cssea import _alice_logicals
    from .stabilizer import QuantumCode, require_valid

    bob = frozenset({spec.n}) if spec.c else frozenset()
    xs, zs = _alice_logicals(m, bob)
    code = QuantumCode(m, tuple(xs), tuple(zs), bob_columns=bob, name="survivor")
    require_valid(code)
    return code


def recheck_survivor(m: CheckMatrix, spec: SearchSpec) -> bool:
    """Independent confirmation with the generic correction checker."""
    from .stabilizer import distance, error_set_single_and_pairs, verify_correction

    code = survivor_code(m, spec)
    if spec.d == 3:
        return verify_correction(code, error_set_single_and_pairs(code.n, code.alice_columns)).corrects
    found = distance(code, max_weight=spec.d - 1)
    return found is None or found >= spec.d


def contains_code(report: SearchReport, m: CheckMatrix) -> bool:
    """Whether some survivor generates the same group as ``m``."""
    from .symplectic import group_equal

    return any(group_equal(s, m) for s in report.survivors)
