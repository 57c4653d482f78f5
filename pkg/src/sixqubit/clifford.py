"""Clifford gates acting on check matrices and on small state vectors.

State vectors are plain numpy arrays of length ``2**n`` with qubit 1 as
the most significant bit. The Pauli letter Y is realised as the real
matrix ZX, so every builtin code evaluates in real arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import CapacityError, DimensionError, StructureError, UsageError
from .stabilizer import QuantumCode, require_valid
from .symplectic import CheckMatrix, PauliString, group_contains, span_basis, reduce_against

MAX_STATEVECTOR_QUBITS = 14

GATE_ARITY = {"H": 1, "P": 1, "CNOT": 2, "CZ": 2, "SWAP": 2}


@dataclass(frozen=True)
class CliffordGate:
    """``kind`` on 0-based ``qubits``; CNOT is (control, target)."""

    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        kind = self.kind.upper()
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "qubits", tuple(self.qubits))
        if kind not in GATE_ARITY:
            raise UsageError(f"unknown gate {self.kind!r}")
        if len(self.qubits) != GATE_ARITY[kind]:
            raise UsageError(f"{kind} takes {GATE_ARITY[kind]} qubit(s), got {len(self.qubits)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise UsageError(f"{kind} needs distinct qubits")
        if any(q < 0 for q in self.qubits):
            raise DimensionError("negative qubit index")

    def __str__(self) -> str:
        return " ".join([self.kind] + [str(q + 1) for q in self.qubits])


def H(q: int) -> CliffordGate:
    return CliffordGate("H", (q,))


def P(q: int) -> CliffordGate:
    return CliffordGate("P", (q,))


def CNOT(c: int, t: int) -> CliffordGate:
    return CliffordGate("CNOT", (c, t))


def CZ(a: int, b: int) -> CliffordGate:
    return CliffordGate("CZ", (a, b))


def SWAP(a: int, b: int) -> CliffordGate:
    return CliffordGate("SWAP", (a, b))


@dataclass(frozen=True)
class CliffordCircuit:
    n: int
    gates: tuple[CliffordGate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if max(g.qubits) >= self.n:
                raise DimensionError(f"gate {g} exceeds {self.n} qubits")

    def inverse(self) -> CliffordCircuit:
        """Exact inverse; P is undone by three more P gates."""
        out = []
        for g in reversed(self.gates):
            out.extend([g] * (3 if g.kind == "P" else 1))
        return CliffordCircuit(self.n, tuple(out))

    def __add__(self, other: CliffordCircuit) -> CliffordCircuit:
        if other.n != self.n:
            raise DimensionError("circuit width mismatch")
        return CliffordCircuit(self.n, self.gates + other.gates)

    def __len__(self) -> int:
        return len(self.gates)


def parse_gate(line: str) -> CliffordGate:
    parts = line.split()
    try:
        qubits = tuple(int(v) - 1 for v in parts[1:])
    except ValueError:
        raise UsageError(f"bad gate line {line!r}") from None
    return CliffordGate(parts[0], qubits)


def loads_circuit(text: str, n: int | None = None) -> CliffordCircuit:
    gates = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            gates.append(parse_gate(line))
    if n is None:
        n = max((max(g.qubits) + 1 for g in gates), default=1)
    return CliffordCircuit(n, tuple(gates))


def dumps_circuit(circuit: CliffordCircuit) -> str:
    return f"# {circuit.n} qubits\n" + "".join(f"{g}\n" for g in circuit.gates)


# -- tableau layer ----------------------------------------------------------------


def _swap_bits(v: int, i: int, j: int) -> int:
    if ((v >> i) ^ (v >> j)) & 1:
        v ^= (1 << i) | (1 << j)
    return v


def _conjugate_bits(kind: str, qubits: tuple[int, ...], x: int, z: int) -> tuple[int, int]:
    if kind == "H":
        (i,) = qubits
        xi, zi = (x >> i) & 1, (z >> i) & 1
        x = (x & ~(1 << i)) | (zi << i)
        z = (z & ~(1 << i)) | (xi << i)
    elif kind == "P":
        (i,) = qubits
        z ^= ((x >> i) & 1) << i
    elif kind == "CNOT":
        i, j = qubits
        x ^= ((x >> i) & 1) << j
        z ^= ((z >> j) & 1) << i
    elif kind == "CZ":
        i, j = qubits
        xi, xj = (x >> i) & 1, (x >> j) & 1
        z ^= (xi << j) | (xj << i)
    elif kind == "SWAP":
        i, j = qubits
        x, z = _swap_bits(x, i, j), _swap_bits(z, i, j)
    return x, z


def conjugate_pauli(gate: CliffordGate, p: PauliString) -> PauliString:
    """``U p U^dagger`` up to phase, via column updates on the X and Z bits."""
    if max(gate.qubits) >= p.n:
        raise DimensionError(f"gate {gate} exceeds {p.n} qubits")
    x, z = _conjugate_bits(gate.kind, gate.qubits, p.x, p.z)
    return PauliString(p.n, x, z)


def conjugate_by_circuit(circuit: CliffordCircuit, p: PauliString) -> PauliString:
    if circuit.n != p.n:
        raise DimensionError(f"circuit has {circuit.n} qubits, Pauli has {p.n}")
    x, z = p.x, p.z
    for g in circuit.gates:
        x, z = _conjugate_bits(g.kind, g.qubits, x, z)
    return PauliString(p.n, x, z)


def conjugate_check_matrix(circuit: CliffordCircuit, m: CheckMatrix) -> CheckMatrix:
    if circuit.n != m.n:
        raise DimensionError(f"circuit has {circuit.n} qubits, matrix has {m.n}")
    return CheckMatrix(m.n, tuple(conjugate_by_circuit(circuit, p) for p in m))


# -- state-vector layer -------------------------------------------------------------

_SQ2 = 1 / np.sqrt(2)
_H = np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]])
_P = np.array([[1, 0], [0, 1j]])
_PAULI = {
    "I": np.eye(2),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]]),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]]),
    "Y": np.array([[0.0, 1.0], [-1.0, 0.0]]),  # ZX
}


def _num_qubits(state: np.ndarray) -> int:
    n = int(state.size).bit_length() - 1
    if state.ndim != 1 or 1 << n != state.size:
        raise DimensionError("state length must be a power of two")
    if n > MAX_STATEVECTOR_QUBITS:
        raise CapacityError(f"{n} qubits exceeds the {MAX_STATEVECTOR_QUBITS}-qubit state-vector cap")
    return n


def basis_state(bits: str) -> np.ndarray:
    """Computational basis state from a ket label such as ``"0110"``."""
    n = len(bits)
    if n > MAX_STATEVECTOR_QUBITS:
        raise CapacityError(f"{n} qubits exceeds the state-vector cap")
    v = np.zeros(1 << n)
    v[int(bits, 2)] = 1.0
    return v


def _apply_1q(t: np.ndarray, mat: np.ndarray, q: int) -> np.ndarray:
    t = np.tensordot(mat, t, axes=([1], [q]))
    return np.moveaxis(t, 0, q)


def apply_gate(gate: CliffordGate, state: np.ndarray) -> np.ndarray:
    n = _num_qubits(state)
    if max(gate.qubits) >= n:
        raise DimensionError(f"gate {gate} exceeds {n} qubits")
    t = state.reshape((2,) * n)
    if gate.kind == "H":
        t = _apply_1q(t, _H, gate.qubits[0])
    elif gate.kind == "P":
        t = _apply_1q(t.astype(complex), _P, gate.qubits[0])
    else:
        i, j = gate.qubits
        t = t.copy()
        if gate.kind == "CNOT":
            idx = [slice(None)] * n
            idx[i] = 1
            sub = t[tuple(idx)]
            tj = j - 1 if j > i else j
            t[tuple(idx)] = np.flip(sub, axis=tj)
        elif gate.kind == "CZ":
            idx = [slice(None)] * n
            idx[i] = 1
            idx[j] = 1
            t[tuple(idx)] *= -1
        elif gate.kind == "SWAP":
            t = np.swapaxes(t, i, j)
    return np.ascontiguousarray(t).reshape(-1)


def apply_circuit_statevector(circuit: CliffordCircuit, state: np.ndarray) -> np.ndarray:
    n = _num_qubits(state)
    if circuit.n != n:
        raise DimensionError(f"circuit has {circuit.n} qubits, state has {n}")
    for g in circuit.gates:
        state = apply_gate(g, state)
    return state


def pauli_statevector_action(p: PauliString, state: np.ndarray) -> np.ndarray:
    """Apply the tensor product of I, X, Z and ZX (for Y) column by column."""
    n = _num_qubits(state)
    if p.n != n:
        raise DimensionError(f"Pauli has {p.n} qubits, state has {n}")
    t = state.reshape((2,) * n)
    for q in range(n):
        letter = p.letter(q)
        if letter != "I":
            t = _apply_1q(t, _PAULI[letter], q)
    return np.ascontiguousarray(t).reshape(-1)


def pauli_matrix(p: PauliString) -> np.ndarray:
    if p.n > MAX_STATEVECTOR_QUBITS:
        raise CapacityError("too many qubits for a dense matrix")
    out = np.ones((1, 1))
    for q in range(p.n):
        out = np.kron(out, _PAULI[p.letter(q)])
    return out


def _involution_phase(p: PauliString) -> complex:
    """Factor making the real matrix of ``p`` square to +1.

    ZX squares to -1, so strings with an odd number of Y letters need -i;
    all others (every builtin generator among them) keep their real form.
    """
    return -1j if bin(p.x & p.z).count("1") % 2 else 1


def _project(state: np.ndarray, ops: Sequence[PauliString], signs: Sequence[int] | None = None) -> np.ndarray:
    signs = signs or [1] * len(ops)
    for h, sgn in zip(ops, signs):
        state = 0.5 * (state + sgn * _involution_phase(h) * pauli_statevector_action(h, state))
    return state


def _fix_phase(v: np.ndarray) -> np.ndarray:
    v = v / np.linalg.norm(v)
    nz = np.flatnonzero(np.abs(v) > 1e-12)
    lead = v[nz[0]]
    v = v * (abs(lead) / lead)
    if np.iscomplexobj(v) and np.allclose(v.imag, 0, atol=1e-14):
        v = v.real
    return v


def compute_codewords(
    code: QuantumCode, gauge_fix: Sequence[int] | None = None, signs: Sequence[int] | None = None
) -> list[np.ndarray]:
    """Logical basis states ordered by logical bit string (logical 1 most significant).

    ``|0...0>`` is the first nonzero projection of a basis state onto the
    +1 eigenspace of the stabilizer and all logical Z's; the others follow
    by applying logical X's. For subsystem codes the gauge rows listed in
    ``gauge_fix`` (default: the second row of every pair) are also fixed
    to +1.

    ``signs`` (one +1/-1 per stabilizer row) selects a different joint
    eigenspace; the default is all +1.
    """
    require_valid(code)
    n = code.n
    if n > MAX_STATEVECTOR_QUBITS:
        raise CapacityError(f"{n} qubits exceeds the state-vector cap")
    if gauge_fix is None:
        gauge_fix = range(1, len(code.gauge), 2)
    fixed = list(code.stabilizer) + [code.gauge[i] for i in gauge_fix]
    if len(CheckMatrix(n, tuple(fixed))) + code.k != n or not CheckMatrix(n, tuple(fixed)).is_independent():
        raise StructureError("fixed generators do not leave a 2^k-dimensional code space")
    if signs is None:
        signs = [1] * len(code.stabilizer)
    if len(signs) != len(code.stabilizer) or any(sg not in (1, -1) for sg in signs):
        raise UsageError("signs needs one +1 or -1 per stabilizer row")
    ops = fixed + list(code.logical_z)
    op_signs = list(signs) + [1] * (len(ops) - len(signs))
    zero = None
    for b in range(1 << n):
        e = np.zeros(1 << n)
        e[b] = 1.0
        v = _project(e, ops, op_signs)
        if np.linalg.norm(v) > 1e-9:
            zero = v / np.linalg.norm(v)
            break
    if zero is None:
        raise StructureError("projector onto the code space is zero")
    words = []
    for bits in itertools.product((0, 1), repeat=code.k):
        v = zero
        for i, b in enumerate(bits):
            if b:
                v = pauli_statevector_action(code.logical_x[i], v)
        words.append(_fix_phase(v))
    return words


def code_projector(code: QuantumCode) -> np.ndarray:
    """Dense projector ``prod (1 + s) / 2`` over the stabilizer rows."""
    n = code.n
    if n > MAX_STATEVECTOR_QUBITS:
        raise CapacityError("too many qubits for a dense projector")
    proj = np.eye(1 << n)
    for s in code.stabilizer:
        proj = proj @ (0.5 * (np.eye(1 << n) + _involution_phase(s) * pauli_matrix(s)))
    return proj


def knill_laflamme_check(code: QuantumCode, errors: Iterable[PauliString], tol: float = 1e-10) -> bool:
    """True iff ``P E P`` is proportional to ``P`` for every error product ``E``."""
    proj = code_projector(code)
    tr = np.trace(proj).real
    for e in errors:
        m = proj @ pauli_matrix(e) @ proj
        lam = np.trace(m) / tr
        if not np.allclose(m, lam * proj, atol=tol):
            return False
    return True


# -- logical circuits -------------------------------------------------------------


def block_code(code: QuantumCode, copies: int) -> QuantumCode:
    """``copies`` side-by-side instances of a stabilizer code."""
    n = code.n
    N = n * copies

    def shift(p: PauliString, b: int) -> PauliString:
        return PauliString(N, p.x << (b * n), p.z << (b * n))

    stab = tuple(shift(s, b) for b in range(copies) for s in code.stabilizer)
    lx = tuple(shift(p, b) for b in range(copies) for p in code.logical_x)
    lz = tuple(shift(p, b) for b in range(copies) for p in code.logical_z)
    return QuantumCode(CheckMatrix(N, stab), lx, lz)


def logical_operator(code: QuantumCode, label: str) -> PauliString:
    """Physical representative of a logical Pauli string such as ``"XZ"``."""
    if len(label) != code.k:
        raise DimensionError(f"label {label!r} needs {code.k} letters")
    p = PauliString.identity(code.n)
    for i, a in enumerate(label.upper()):
        if a in "XY":
            p = p * code.logical_x[i]
        if a in "ZY":
            p = p * code.logical_z[i]
        if a not in "IXYZ":
            raise UsageError(f"bad logical letter {a!r}")
    return p


def verify_logical_circuit(
    circuit: CliffordCircuit, code: QuantumCode, copies: int, expected: Mapping[str, str]
) -> bool:
    """Check that ``circuit`` preserves the ``copies``-fold stabilizer and
    maps each logical label in ``expected`` to its image modulo stabilizer."""
    big = block_code(code, copies)
    if circuit.n != big.n:
        raise DimensionError(f"circuit has {circuit.n} qubits, {copies} blocks need {big.n}")
    for s in big.stabilizer:
        if not group_contains(big.stabilizer, conjugate_by_circuit(circuit, s)):
            return False
    basis, piv = span_basis((s.zx() for s in big.stabilizer), 2 * big.n)
    for src, dst in expected.items():
        image = conjugate_by_circuit(circuit, logical_operator(big, src))
        target = logical_operator(big, dst)
        if reduce_against((image * target).zx(), basis, piv):
            return False
    return True
