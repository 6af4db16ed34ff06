"""Dense statevector simulation.

Amplitudes live in a flat complex128 array of length 2**width; qubit q is
bit q of the array index (qubit 0 = least significant).  Gates are applied
by pairing indices that differ only in the target bit and mixing each pair
with the 2x2 gate matrix, the usual bit-masked update.  The kernels accept
any array whose last axis is the amplitude index, so a batch of states can
be advanced with one call.

No approximation anywhere: simulation is exact up to float round-off, and
widths are capped (default 24 qubits, env override DEPOLAB_MAX_QUBITS,
hard limit 26) rather than degraded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .circuits import Circuit, Gate, validate_circuit
from .errors import CapExceeded
from .tolerances import EXACT_TOL

DEFAULT_WIDTH_CAP = 24
HARD_WIDTH_CAP = 26

_SQRT_HALF = 1.0 / np.sqrt(2.0)

GATE_MATRICES = {
    "H": np.array([[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "T": np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=complex),
    "I1": np.eye(2, dtype=complex),
}


def width_cap() -> int:
    """Largest simulable width: DEPOLAB_MAX_QUBITS if set, else 24, never above 26."""
    raw = os.environ.get("DEPOLAB_MAX_QUBITS")
    if raw is None:
        return DEFAULT_WIDTH_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"DEPOLAB_MAX_QUBITS must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"DEPOLAB_MAX_QUBITS must be >= 1, got {value}")
    return min(value, HARD_WIDTH_CAP)


@dataclass(frozen=True)
class StateVector:
    """Unit-norm amplitudes over 2**width basis states.  Immutable: the
    array is copied in and marked read-only."""

    width: int
    amps: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amps, dtype=np.complex128)
        if amps.shape != (1 << self.width,):
            raise ValueError(
                f"expected {1 << self.width} amplitudes for width {self.width}, "
                f"got shape {amps.shape}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > EXACT_TOL:
            raise ValueError(f"state norm {norm!r} is not 1 within {EXACT_TOL}")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)


@dataclass(frozen=True)
class Distribution:
    """Probabilities over 2**width outcomes: nonnegative, summing to 1."""

    width: int
    probs: np.ndarray

    def __post_init__(self):
        probs = np.array(self.probs, dtype=np.float64)
        if probs.shape != (1 << self.width,):
            raise ValueError(
                f"expected {1 << self.width} probabilities for width {self.width}, "
                f"got shape {probs.shape}"
            )
        if np.any(probs < 0):
            raise ValueError("probabilities must be nonnegative")
        total = float(probs.sum())
        if abs(total - 1.0) > EXACT_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1 within {EXACT_TOL}")
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)


def _pairs_1q(width: int, qubit: int) -> tuple[np.ndarray, np.ndarray]:
    # All indices with the qubit bit clear, paired with the bit set.
    x = np.arange(1 << (width - 1))
    i0 = ((x >> qubit) << (qubit + 1)) | (x & ((1 << qubit) - 1))
    return i0, i0 | (1 << qubit)


def _pairs_cnot(width: int, control: int, target: int) -> tuple[np.ndarray, np.ndarray]:
    # All indices with control set and target clear, paired with target set.
    lo, hi = sorted((control, target))
    x = np.arange(1 << (width - 2))
    y = ((x >> lo) << (lo + 1)) | (x & ((1 << lo) - 1))
    z = ((y >> hi) << (hi + 1)) | (y & ((1 << hi) - 1))
    i0 = z | (1 << control)
    return i0, i0 | (1 << target)


def _apply_gate_inplace(amps: np.ndarray, gate: Gate, width: int) -> None:
    """Apply one gate to amps (last axis = amplitude index), in place."""
    if gate.kind == "CNOT":
        control, target = gate.targets
        i0, i1 = _pairs_cnot(width, control, target)
        a = amps[..., i0]
        amps[..., i0] = amps[..., i1]
        amps[..., i1] = a
        return
    u = GATE_MATRICES[gate.kind]
    (qubit,) = gate.targets
    i0, i1 = _pairs_1q(width, qubit)
    a = amps[..., i0]
    b = amps[..., i1]
    amps[..., i0] = u[0, 0] * a + u[0, 1] * b
    amps[..., i1] = u[1, 0] * a + u[1, 1] * b


def _check_runnable(circuit: Circuit) -> None:
    problems = validate_circuit(circuit)
    if problems:
        raise ValueError("invalid circuit: " + "; ".join(problems))
    cap = width_cap()
    if circuit.width > cap:
        raise CapExceeded(
            f"circuit width {circuit.width} exceeds the cap of {cap} qubits"
        )


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate and return the new state (the input is untouched)."""
    problems = validate_circuit(Circuit(state.width, (gate,)))
    if problems:
        raise ValueError("invalid gate: " + "; ".join(problems))
    amps = state.amps.copy()
    _apply_gate_inplace(amps, gate, state.width)
    return StateVector(state.width, amps)


def run(circuit: Circuit) -> StateVector:
    """Simulate the circuit from |0...0> and return the final state."""
    _check_runnable(circuit)
    amps = np.zeros(1 << circuit.width, dtype=np.complex128)
    amps[0] = 1.0
    for g in circuit.gates:
        _apply_gate_inplace(amps, g, circuit.width)
    return StateVector(circuit.width, amps)


def output_distribution(circuit: Circuit) -> Distribution:
    """Exact sampling distribution of the circuit: |amplitude|^2 per outcome."""
    state = run(circuit)
    return Distribution(circuit.width, np.abs(state.amps) ** 2)


def zero_overlap(circuit: Circuit) -> complex:
    """The amplitude <0...0|C|0...0> of returning to the all-zeros string."""
    return complex(run(circuit).amps[0])
