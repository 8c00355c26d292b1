"""Exact evaluation and spectrum analysis of diagonal cost Hamiltonians.

Because every term is a product of Z operators, the Hamiltonian is
diagonal in the computational basis: each basis state is an eigenstate
and its energy is a signed sum over term parities.  The full spectrum is
therefore obtained by enumerating bitstrings, never by diagonalizing a
dense matrix.

``qubo_oracle`` evaluates the cycle penalty definition literally on the
full x[v, j] matrix (fixed first row/column included) and is kept
independent of the compiler so the two can cross-check each other.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, TooManyQubits
from .graph import Graph, qubit_index
from .qubo import IsingModel

SPECTRUM_QUBIT_CAP = 20


@dataclass(frozen=True)
class DiagonalHamiltonian:
    """Constant plus Z-product terms, each a (qubit bitmask, coefficient) pair.

    Bit k-1 of a mask refers to qubit k (leftmost assignment character).
    """

    num_qubits: int
    terms: tuple[tuple[int, float], ...]
    constant: float = 0.0

    @classmethod
    def from_ising(cls, m: IsingModel) -> "DiagonalHamiltonian":
        terms = []
        for k in sorted(m.linear):
            terms.append((1 << (k - 1), float(m.linear[k])))
        for j, k in sorted(m.quadratic):
            terms.append(((1 << (j - 1)) | (1 << (k - 1)), float(m.quadratic[(j, k)])))
        return cls(m.num_qubits, tuple(terms), float(m.constant))

    def energies(self) -> np.ndarray:
        """Energy of every basis state, indexed so bit k-1 of the index
        is the measured value of qubit k."""
        idx = np.arange(1 << self.num_qubits, dtype=np.uint64)
        out = np.full(idx.shape, self.constant)
        for mask, coeff in self.terms:
            parity = np.bitwise_count(idx & np.uint64(mask)) & 1
            out += coeff * (1.0 - 2.0 * parity)
        return out


def bits_to_index(bits: str) -> int:
    """Basis index of an assignment string (qubit k -> index bit k-1)."""
    return sum(1 << k for k, c in enumerate(bits) if c == "1")


def index_to_bits(index: int, num_qubits: int) -> str:
    return "".join("1" if (index >> k) & 1 else "0" for k in range(num_qubits))


def energy_of(h: DiagonalHamiltonian, bits: str) -> float:
    """Eigenvalue of the basis state given by an assignment string."""
    if len(bits) != h.num_qubits:
        raise LengthMismatch(f"expected {h.num_qubits} bits, got {len(bits)}")
    index = bits_to_index(bits)
    total = h.constant
    for mask, coeff in h.terms:
        total += coeff * (1.0 - 2.0 * ((index & mask).bit_count() & 1))
    return total


@dataclass(frozen=True)
class Spectrum:
    """All energy levels with their basis states, sorted by energy."""

    levels: tuple[tuple[float, tuple[str, ...]], ...]
    ground_energy: float
    ground_states: frozenset[str]
    gap: float

    @property
    def num_states(self) -> int:
        return sum(len(states) for _, states in self.levels)

    def mean_energy(self) -> float:
        return (
            sum(e * len(states) for e, states in self.levels) / self.num_states
        )


def full_spectrum(h: DiagonalHamiltonian, cap: int = SPECTRUM_QUBIT_CAP) -> Spectrum:
    """Exhaustively enumerate all 2^q basis energies, grouped by value.

    Energies are rounded to 9 decimals for grouping; exact-rational
    inputs at desk scale are unaffected.
    """
    if h.num_qubits > cap:
        raise TooManyQubits(f"{h.num_qubits} qubits exceeds spectrum cap {cap}")
    energies = np.round(h.energies(), 9)
    order = np.argsort(energies, kind="stable")
    levels: list[tuple[float, tuple[str, ...]]] = []
    current: list[str] = []
    current_e = None
    for idx in order:
        e = float(energies[idx])
        if current_e is None or e != current_e:
            if current:
                levels.append((current_e, tuple(current)))
            current_e, current = e, []
        current.append(index_to_bits(int(idx), h.num_qubits))
    if current:
        levels.append((current_e, tuple(current)))
    ground_energy, ground_states = levels[0]
    gap = levels[1][0] - ground_energy if len(levels) > 1 else 0.0
    return Spectrum(
        levels=tuple(levels),
        ground_energy=ground_energy,
        ground_states=frozenset(ground_states),
        gap=gap,
    )


def qubo_oracle(g: Graph, weight, bits: str):
    """Literal evaluation of the cycle penalty on one assignment.

    Builds the full n x n variable matrix with x[1,1] = 1 and the rest of
    the first row/column 0, then sums the three penalty classes directly,
    including the wrap-around product x[u, n] x[v, 1] for every ordered
    non-adjacent pair.  Bypasses the compiler entirely.
    """
    n = g.n
    if len(bits) != (n - 1) ** 2:
        raise LengthMismatch(f"expected {(n - 1) ** 2} bits, got {len(bits)}")
    x = [[0] * (n + 1) for _ in range(n + 1)]
    x[1][1] = 1
    for v in range(2, n + 1):
        for j in range(2, n + 1):
            x[v][j] = int(bits[qubit_index(v, j, n) - 1])

    h1 = sum((1 - sum(x[v][j] for j in range(1, n + 1))) ** 2 for v in range(1, n + 1))
    h2 = sum((1 - sum(x[v][j] for v in range(1, n + 1))) ** 2 for j in range(1, n + 1))
    h3 = 0
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u == v or g.has_edge(u, v):
                continue
            h3 += sum(x[u][j] * x[v][j + 1] for j in range(1, n))
            h3 += x[u][n] * x[v][1]
    return weight * (h1 + h2 + h3)
