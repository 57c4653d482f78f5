"""Reference fixtures used across the test suite."""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from sixqubit.symplectic import CheckMatrix, PauliString

DATA = Path(__file__).parent / "data"

# One entry per printed matrix after the first: the steps that lead to it.
WALKTHROUGH_STEPS = [
    "ROWSWAP 2 6",
    "H 1\nH 4\nH 6",
    "CNOT 1 4\nCNOT 1 6",
    "H 1",
    "H 4\nH 6",
    "CNOT 1 4\nCNOT 1 6",
    "H 2\nH 4\nH 5",
    "CNOT 2 4\nCNOT 2 5",
    "H 2",
    "SWAP 3 5",
    "H 3\nCNOT 3 6\nH 3",
    "ROWADD 4 5",
    "H 4\nCNOT 4 5\nCNOT 4 6",
    "H 4",
    "H 5\nH 6\nCNOT 5 6",
    "H 5",
]

# Printed matrices that disagree with the gate rules (see test_synthesis).
MISPRINTED = {5, 6, 11}

SIX_ROW_CSS_DISPLAY = ["ZIIZIZ", "IZIZZI", "IIZIZZ", "XIIXIX", "IXIXXI", "IIXIXX"]

TRUNCATED_HAMMING = ["100101", "010110", "001011"]

EA_613_LOGICAL_X = "IIIIXXX"
EA_613_LOGICAL_Z = "IIZZIZI"

SIX_QUBIT_ZERO = dict(
    zip(
        ["000000", "100111", "001111", "101000", "010010", "110101", "011101", "111010"],
        [1, -1, 1, -1, -1, 1, 1, -1],
    )
)
SIX_QUBIT_ONE = dict(
    zip(
        ["001010", "101101", "000101", "100010", "011000", "111111", "010111", "110000"],
        [1, 1, 1, 1, -1, -1, 1, 1],
    )
)

# Eigenvalues of h1..h5 on the printed codewords (Y read as ZX).
PRINTED_CODEWORD_SIGNS = [-1, -1, 1, 1, 1]

LOGICAL_CNOT = "CZ 2 7\nCZ 5 7\nCZ 6 7\nCNOT 1 9\nCNOT 3 9\nCNOT 4 9\nCNOT 2 11\nCNOT 4 11\nCNOT 5 11"
LOGICAL_CNOT_MAP = {"XI": "XX", "IZ": "ZZ", "ZI": "ZI", "IX": "IX"}


def ket(amplitudes: dict[str, int]) -> np.ndarray:
    n = len(next(iter(amplitudes)))
    v = np.zeros(1 << n)
    for bits, sign in amplitudes.items():
        v[int(bits, 2)] = sign
    return v / np.linalg.norm(v)


def _row(zbits: str, xbits: str) -> PauliString:
    z = sum(1 << i for i, ch in enumerate(zbits) if ch == "1")
    x = sum(1 << i for i, ch in enumerate(xbits) if ch == "1")
    return PauliString(len(zbits), x, z)


def load_walkthrough() -> dict[int, CheckMatrix]:
    mats: dict[int, list[PauliString]] = {}
    current = None
    for line in (DATA / "walkthrough.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("matrix"):
            current = int(line.split()[1])
            mats[current] = []
        else:
            mats[current].append(_row(*line.split()))
    return {k: CheckMatrix(6, tuple(v)) for k, v in mats.items()}


def parse_error(label: str, n: int = 6) -> PauliString:
    x = z = 0
    for letter, q in re.findall(r"([XYZ])(\d+)", label):
        bit = 1 << (int(q) - 1)
        if letter in "XY":
            x |= bit
        if letter in "ZY":
            z |= bit
    return PauliString(n, x, z)


def load_error_pairs() -> list[tuple[str, PauliString, int]]:
    """(label, error, 0-based generator) rows."""
    out = []
    for line in (DATA / "error_pairs.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        label, g = line.split()
        out.append((label, parse_error(label), int(g) - 1))
    return out
