"""Stabilizer, subsystem and entanglement-assisted codes on a handful of qubits."""

from __future__ import annotations

from .errors import CapacityError, DimensionError, IndependenceError, QECError, StructureError, UsageError
from .symplectic import (
    BitMatrix,
    CheckMatrix,
    PauliString,
    gf2_rank,
    gf2_rref,
    group_contains,
    group_equal,
    nullspace,
    pauli_multiply,
    symplectic_product,
)
from .stabilizer import (
    BUILTIN_NAMES,
    CorrectionReport,
    QuantumCode,
    Singleton,
    Verdict,
    VerdictKind,
    builtin_code,
    distance,
    dumps_code,
    error_set_single_and_pairs,
    load_code,
    loads_code,
    save_code,
    singleton_check,
    to_subsystem,
    validate_code,
    verify_correction,
)
from .clifford import (
    CliffordCircuit,
    CliffordGate,
    compute_codewords,
    conjugate_by_circuit,
    conjugate_check_matrix,
    conjugate_pauli,
    knill_laflamme_check,
    verify_logical_circuit,
)
from .cssea import (
    ClassicalParityCheck,
    build_ea_code,
    css_generators,
    delete_column,
    hamming_7_4,
    min_ebits_css,
    reduce_to_ebit,
    steane_equivalence_transform,
)
from .synthesis import SynthesisResult, canonical_target, replay, symplectic_gram_schmidt, synthesize_encoder
from .search import SearchReport, SearchSpec, dimension_feasibility, enumerate_gf2_subspaces, gaussian_binomial, search_css

__version__ = "0.1.0"
