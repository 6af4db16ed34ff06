"""Randomized ancilla-flagged circuits and their acceptance thresholds.

Start from a w-qubit circuit V = g_m ... g_1 whose acceptance amplitude is
<0^w|V|0^w>.  Append m ancilla qubits, one per step.  Step j flips a fair
coin: on heads it applies the intended gate g_j, on tails it applies an
alternate single-step gate and flags the swap by flipping ancilla j.  The
ancilla register therefore records exactly which branch ran, and the final
state is an equal mixture over all 2**m branch strings alpha:

    P(y, alpha) = 2**-m * |<y| xi_m^(alpha_m) ... xi_1^(alpha_1) |0^w>|^2

where xi_j^0 = g_j and xi_j^1 is the alternate.  Reading the full outcome
(y, alpha), the all-zeros string keeps mass q / 2**m with
q = |<0^w|V|0^w>|^2: sampling this mixture concentrates a detectable spike
on 0^n exactly when V accepts.

Under global depolarization at fidelity F the spike becomes

    p'_acc = F * q / 2**m + (1 - F) / 2**n,      n = w + m.

With a sampler whose per-outcome relative error is eps, circuits promised
to accept with amplitude >= 1 - 2**-r keep

    yes_lower = (1 - eps) * F * 2**-m * (1 - 2**-r)**2

while circuits accepting with amplitude <= 2**-r stay below

    no_upper = 2**-m * (1 + eps) * F * (2**-2r + (1 - F) / (F * 2**w)).

A factor-2 separation (yes_lower >= 2 * no_upper) is the gap a
bounded-probability verifier needs, and it sets in once r and w are large
enough; sbp_thresholds reports both sides so the crossover is measurable
rather than asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .circuits import Circuit, Gate, validate_circuit
from .depol import check_fidelity, check_seed
from .errors import CapExceeded
from .statevector import _apply_gate_inplace, width_cap, zero_overlap, Distribution

# Exact branch enumeration walks all 2**m ancilla strings; past this it is
# no longer a desk-scale computation.
BRANCH_CAP = 20


def _check_step_gate(width: int, index: int, g: Gate, role: str) -> None:
    problems = validate_circuit(Circuit(width, (g,)))
    if problems:
        raise ValueError(f"step {index}: {role} gate invalid: " + "; ".join(problems))


@dataclass(frozen=True)
class RandomizedCircuit:
    """A per-step pair (intended gate, alternate gate) over the main register.

    The alternate is what a tails-coin step applies instead of the intended
    gate; it must genuinely act (I1 is not allowed, or the ancilla flag
    would mark a branch that did nothing different).  Ancilla j mirrors
    step j and lives at full-register qubit main_width + j.
    """

    main_width: int
    steps: tuple[tuple[Gate, Gate], ...]

    def __post_init__(self):
        if self.main_width < 1:
            raise ValueError(f"main width must be >= 1, got {self.main_width}")
        for j, (primary, alternate) in enumerate(self.steps):
            _check_step_gate(self.main_width, j, primary, "intended")
            _check_step_gate(self.main_width, j, alternate, "alternate")
            if alternate.kind == "I1":
                raise ValueError(f"step {j}: alternate gate must not be the identity")

    @property
    def ancilla_width(self) -> int:
        return len(self.steps)

    @property
    def total_width(self) -> int:
        return self.main_width + len(self.steps)

    def primary_circuit(self) -> Circuit:
        """The original circuit V (all coins heads)."""
        return Circuit(self.main_width, tuple(p for p, _ in self.steps))


def x_on_first_target(step: int, primary: Gate) -> Gate:
    """Default alternate policy: X on the intended gate's first target."""
    return Gate("X", (primary.targets[0],))


def build_randomized_circuit(
    circuit: Circuit,
    alt_policy: Callable[[int, Gate], Gate] = x_on_first_target,
) -> RandomizedCircuit:
    """Pair every gate of `circuit` with an alternate chosen by the policy.

    The policy gets (step index, intended gate) and must return a non-identity
    gate on the main register.
    """
    problems = validate_circuit(circuit)
    if problems:
        raise ValueError("invalid circuit: " + "; ".join(problems))
    steps = tuple(
        (g, alt_policy(j, g)) for j, g in enumerate(circuit.gates)
    )
    return RandomizedCircuit(circuit.width, steps)


def mixture_distribution(rc: RandomizedCircuit) -> Distribution:
    """Exact outcome distribution of the randomized circuit.

    Full-register outcome index: main-register bits are low, ancilla j is
    bit main_width + j.  Enumerates all 2**m branches by doubling a batch
    of statevectors once per step, so the work is one gate application per
    (step, branch-prefix) rather than a fresh simulation per branch.
    """
    w, m = rc.main_width, rc.ancilla_width
    if m > BRANCH_CAP:
        raise CapExceeded(f"{m} steps means 2**{m} branches; the cap is {BRANCH_CAP}")
    cap = width_cap()
    if w + m > cap:
        raise CapExceeded(
            f"total width {w + m} exceeds the cap of {cap} qubits"
        )
    states = np.zeros((1, 1 << w), dtype=np.complex128)
    states[0, 0] = 1.0
    for primary, alternate in rc.steps:
        heads = states.copy()
        _apply_gate_inplace(heads, primary, w)
        tails = states.copy()
        _apply_gate_inplace(tails, alternate, w)
        # Row index accumulates branch bits little-endian: the new bit is
        # the current step's coin, so tails rows land in the upper half.
        states = np.concatenate([heads, tails], axis=0)
    probs = (np.abs(states) ** 2).ravel() / (1 << m)
    return Distribution(w + m, probs)


def sample_branch(rc: RandomizedCircuit, seed: int) -> tuple[tuple[int, ...], Circuit]:
    """Draw one branch: fair coin per step, keyed Philox stream.

    Returns (branch bits, realized circuit).  The realized circuit acts on
    the full register: each step contributes its chosen main-register gate,
    plus an X on ancilla j when the coin came up tails.
    """
    check_seed(seed)
    rng = np.random.Generator(np.random.Philox(key=seed))
    bits = tuple(int(b) for b in rng.integers(0, 2, size=rc.ancilla_width))
    gates = []
    for j, ((primary, alternate), bit) in enumerate(zip(rc.steps, bits)):
        if bit:
            gates.append(alternate)
            gates.append(Gate("X", (rc.main_width + j,)))
        else:
            gates.append(primary)
    return bits, Circuit(rc.total_width, tuple(gates))


def depolarized_acceptance(rc: RandomizedCircuit, fidelity: float) -> float:
    """Mass on the all-zeros outcome after depolarization at fidelity F:

        F * q / 2**m + (1 - F) / 2**n,   q = |<0^w|V|0^w>|^2.

    Computed through the acceptance amplitude of V alone; no 2**n-sized
    object is built.
    """
    f = check_fidelity(fidelity)
    q = abs(zero_overlap(rc.primary_circuit())) ** 2
    m, n = rc.ancilla_width, rc.total_width
    return f * q / (1 << m) + (1.0 - f) / (1 << n)


@dataclass(frozen=True)
class ThresholdReport:
    """Both sides of the acceptance gap for given construction parameters."""

    r: int
    w: int
    m: int
    fidelity: float
    epsilon: float
    yes_lower: float
    no_upper: float
    ratio: float
    sbp_ok: bool


def sbp_thresholds(
    r: int, w: int, m: int, fidelity: float, epsilon: float
) -> ThresholdReport:
    """Evaluate the yes/no acceptance thresholds and whether they separate.

    r: promise-gap exponent (yes instances accept with amplitude
    >= 1 - 2**-r, no instances with amplitude <= 2**-r).  w, m: main and
    ancilla widths.  epsilon: the sampler's per-outcome relative error,
    in [0, 1).  fidelity must be positive: at F = 0 every signal is gone
    and no threshold statement is possible.
    """
    for name, value in (("r", r), ("w", w), ("m", m)):
        if int(value) != value or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")
    f = check_fidelity(fidelity)
    if f == 0.0:
        raise ValueError("fidelity must be positive; F = 0 erases the gap entirely")
    eps = float(epsilon)
    if not 0.0 <= eps < 1.0:
        raise ValueError(f"epsilon must lie in [0, 1), got {epsilon!r}")
    yes_lower = (1.0 - eps) * f * 2.0**-m * (1.0 - 2.0**-r) ** 2
    no_upper = 2.0**-m * (1.0 + eps) * f * (2.0 ** (-2 * r) + (1.0 - f) / (f * 2.0**w))
    ratio = yes_lower / no_upper
    return ThresholdReport(
        r=int(r),
        w=int(w),
        m=int(m),
        fidelity=f,
        epsilon=eps,
        yes_lower=yes_lower,
        no_upper=no_upper,
        ratio=ratio,
        sbp_ok=yes_lower >= 2.0 * no_upper,
    )


class HardnessGap(NamedTuple):
    """Depolarized acceptance rates for a promise pair and their gap."""

    yes_rate: float
    no_rate: float
    gap: float


def hardness_gap(
    yes_acceptance: float, no_acceptance: float, fidelity: float, width: int
) -> HardnessGap:
    """Depolarize a promise pair of acceptance probabilities a > b.

    Both rates shift the same way, so the gap is exactly F * (a - b);
    it is computed in that form (not as a difference of the two rounded
    rates) so the result is exact whenever F and a - b are.
    """
    a, b = float(yes_acceptance), float(no_acceptance)
    if not 0.0 <= b < a <= 1.0:
        raise ValueError(
            f"need 0 <= no_acceptance < yes_acceptance <= 1, got a={a!r} b={b!r}"
        )
    f = check_fidelity(fidelity)
    if int(width) != width or width < 1:
        raise ValueError(f"width must be a positive integer, got {width!r}")
    floor = (1.0 - f) / (1 << int(width))
    return HardnessGap(f * a + floor, f * b + floor, f * (a - b))
