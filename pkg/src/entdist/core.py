"""Minimal statevector machinery: tensor products, single-qubit projections,
and the pure-plus-white-noise mixture used to model imperfect entanglement.

Index convention: qubit 0 occupies the most significant bit of the basis
index.  The distance protocol puts its ancilla there, so amplitudes
[0 : 2^(m-1)] form the ancilla-|0> branch and the rest the |1> branch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .vectors import DimensionError, _is_power_of_two

__all__ = [
    "POST_STATE_MIN_PROBABILITY",
    "SingleQubitState",
    "StateVector",
    "MixedState",
    "tensor",
    "project_qubit",
    "projection_probability_mixed",
    "fidelity_with_pure",
]

# below this projection probability the post-measurement state is undefined
POST_STATE_MIN_PROBABILITY = 1e-15


@dataclass(frozen=True, eq=False)
class SingleQubitState:
    """a|0> + b|1> with real components and unit norm."""

    a: float
    b: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValueError("components must be finite")
        if abs(self.a * self.a + self.b * self.b - 1.0) > 1e-12:
            raise ValueError("single-qubit state must have unit norm")

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.b])


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit complex amplitudes over m >= 1 qubits."""

    amplitudes: np.ndarray

    def __post_init__(self):
        arr = np.array(self.amplitudes, dtype=complex)
        if arr.ndim != 1 or arr.size < 2 or not _is_power_of_two(arr.size):
            raise DimensionError("amplitude count must be 2^m with m >= 1")
        if abs(np.vdot(arr, arr).real - 1.0) > 1e-10:
            raise ValueError("statevector must be normalized")
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    @property
    def n_qubits(self) -> int:
        return int(self.amplitudes.size).bit_length() - 1


def tensor(left: StateVector, right: StateVector) -> StateVector:
    """Kronecker product; the left factor's qubits become the more significant."""
    return StateVector(np.kron(left.amplitudes, right.amplitudes))


def project_qubit(
    state: StateVector, qubit_index: int, onto: SingleQubitState
) -> tuple[float, StateVector | None]:
    """Project one qubit onto ``onto``; the other qubits are left untouched.

    Returns (probability, post_state) where the post state is the
    renormalized remainder with the measured qubit removed.  The post
    state is None when the probability falls below
    POST_STATE_MIN_PROBABILITY or when no qubit remains.
    """
    m = state.n_qubits
    if not 0 <= qubit_index < m:
        raise IndexError(f"qubit index {qubit_index} out of range for {m} qubits")
    grid = state.amplitudes.reshape([2] * m)
    # contracting the measured axis keeps the remaining axes in order
    reduced = np.tensordot(onto.as_array().conj(), grid, axes=([0], [qubit_index]))
    reduced = reduced.reshape(-1)
    probability = float(np.vdot(reduced, reduced).real)
    if probability <= POST_STATE_MIN_PROBABILITY or m == 1:
        return probability, None
    return probability, StateVector(reduced / np.sqrt(probability))


@dataclass(frozen=True, eq=False)
class MixedState:
    """w |psi><psi| + (1-w) I/2^m, stored as the weight and the pure state."""

    weight: float
    pure: StateVector

    def __post_init__(self):
        if not (np.isfinite(self.weight) and 0.0 <= self.weight <= 1.0):
            raise ValueError("pure-part weight must lie in [0, 1]")

    @property
    def n_qubits(self) -> int:
        return self.pure.n_qubits


def projection_probability_mixed(
    state: MixedState, qubit_index: int, onto: SingleQubitState
) -> float:
    """Single-qubit projection probability for the pure+white-noise mixture.

    The maximally mixed component contributes exactly 1/2 for any
    single-qubit projector, so the result is w*p_pure + (1-w)/2.
    """
    p_pure, _ = project_qubit(state.pure, qubit_index, onto)
    return state.weight * p_pure + (1.0 - state.weight) * 0.5


def fidelity_with_pure(state: MixedState, target: StateVector) -> float:
    """<target| rho |target> for the mixture: w |<t|psi>|^2 + (1-w)/2^m."""
    if target.n_qubits != state.n_qubits:
        raise DimensionError("fidelity requires matching qubit counts")
    overlap = np.vdot(target.amplitudes, state.pure.amplitudes)
    return state.weight * float(abs(overlap)) ** 2 + (1.0 - state.weight) / 2**state.n_qubits
