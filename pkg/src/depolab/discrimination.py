"""How well k copies distinguish a depolarized state from pure noise.

The discrimination game: a referee hands over k copies of either
rho0 = I/2**n (pure noise) or rho1 = F*rho + (1-F)*I/2**n (the depolarized
state), each with probability 1/2.  The best possible guessing strategy is
a two-outcome measurement, and its success probability has the closed form

    p_correct = 1/2 + (1/4) * || rho0^(x)k - rho1^(x)k ||_1

achieved by guessing rho1 exactly on the positive eigenspace of the
difference.  Chaining three facts bounds this away from any useful value:

    || rho0^(x)k - rho1^(x)k ||_1  <=  k * || rho0 - rho1 ||_1
    || rho0 - rho1 ||_1            =   F * || rho - I/2**n ||_1
    || rho - I/2**n ||_1           <=  2

so p_correct <= 1/2 + k*F/2: with fidelity F, even k copies and the best
measurement only beat coin flipping by k*F/2.  bound_chain evaluates every
line of that chain numerically and reports both sides of each.

Trace norms are computed from eigendecompositions of Hermitian
differences, so tensor powers are capped at 12 total qubits (a 4096x4096
eigenproblem).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .depol import check_fidelity, check_seed
from .errors import CapExceeded
from .statevector import StateVector
from .tolerances import EIG_FLOOR, EXACT_TOL, ORACLE_TOL

# k copies of an n-qubit state live on k*n qubits; past 12 the
# eigendecompositions stop being interactive.
POWER_CAP = 12


@dataclass(frozen=True)
class DensityMatrix:
    """A validated density matrix: Hermitian, unit trace, PSD up to slack."""

    width: int
    mat: np.ndarray

    def __post_init__(self):
        d = 1 << self.width
        mat = np.array(self.mat, dtype=np.complex128)
        if mat.shape != (d, d):
            raise ValueError(f"expected a {d}x{d} matrix for width {self.width}, got {mat.shape}")
        if not np.allclose(mat, mat.conj().T, rtol=0.0, atol=EXACT_TOL):
            raise ValueError("matrix is not Hermitian")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > EXACT_TOL:
            raise ValueError(f"trace is {trace!r}, not 1 within {EXACT_TOL}")
        smallest = float(np.linalg.eigvalsh(mat).min())
        if smallest < EIG_FLOOR:
            raise ValueError(f"eigenvalue {smallest!r} below {EIG_FLOOR}")
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)


def density_from_pure(state: StateVector) -> DensityMatrix:
    """Rank-one density |psi><psi| of a statevector."""
    return DensityMatrix(state.width, np.outer(state.amps, state.amps.conj()))


def maximally_mixed(width: int) -> DensityMatrix:
    """I / 2**width."""
    d = 1 << width
    return DensityMatrix(width, np.eye(d) / d)


def depolarize_density(rho: DensityMatrix, fidelity: float) -> DensityMatrix:
    """F * rho + (1 - F) * I/2**n, the density-level depolarization."""
    f = check_fidelity(fidelity)
    d = 1 << rho.width
    return DensityMatrix(rho.width, f * rho.mat + (1.0 - f) * np.eye(d) / d)


def random_density_matrix(width: int, seed: int, rank: int | None = None) -> DensityMatrix:
    """Seeded random density: G G^dag / tr for a complex Gaussian G.

    rank=None draws full rank; rank=1 gives a Haar-random pure state.
    """
    check_seed(seed)
    d = 1 << width
    r = d if rank is None else int(rank)
    if not 1 <= r <= d:
        raise ValueError(f"rank must lie in [1, {d}], got {rank!r}")
    rng = np.random.Generator(np.random.Philox(key=seed))
    g = rng.standard_normal((d, r)) + 1j * rng.standard_normal((d, r))
    mat = g @ g.conj().T
    mat /= np.trace(mat).real
    # Symmetrize away the last-ulp Hermiticity loss from the matmul.
    mat = (mat + mat.conj().T) / 2.0
    return DensityMatrix(width, mat)


def _abs_eig_sum(diff: np.ndarray) -> float:
    return float(np.abs(np.linalg.eigvalsh(diff)).sum())


def trace_norm_diff(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """|| rho - sigma ||_1 = sum of |eigenvalues| of the difference."""
    if rho.width != sigma.width:
        raise ValueError(f"width mismatch: {rho.width} vs {sigma.width}")
    return _abs_eig_sum(rho.mat - sigma.mat)


def _tensor_power(mat: np.ndarray, k: int) -> np.ndarray:
    return reduce(np.kron, [mat] * k)


def _check_power_cap(width: int, k: int) -> None:
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if k * width > POWER_CAP:
        raise CapExceeded(
            f"{k} copies of {width} qubits is {k * width} qubits; the cap is {POWER_CAP}"
        )


def helstrom_correct(
    rho0: DensityMatrix,
    rho1: DensityMatrix,
    k: int,
    return_projector: bool = False,
):
    """Best achievable success probability for k-copy discrimination:

        1/2 + (1/4) * || rho0^(x)k - rho1^(x)k ||_1.

    With return_projector=True also returns the optimal guess-rho1
    projector (positive eigenspace of rho1^(x)k - rho0^(x)k); it is not
    materialized otherwise.
    """
    if rho0.width != rho1.width:
        raise ValueError(f"width mismatch: {rho0.width} vs {rho1.width}")
    _check_power_cap(rho0.width, k)
    diff = _tensor_power(rho1.mat, k) - _tensor_power(rho0.mat, k)
    if not return_projector:
        return 0.5 + 0.25 * _abs_eig_sum(diff)
    eigvals, eigvecs = np.linalg.eigh(diff)
    p_correct = 0.5 + 0.25 * float(np.abs(eigvals).sum())
    positive = eigvecs[:, eigvals > 0]
    return p_correct, positive @ positive.conj().T


@dataclass(frozen=True)
class ChainLink:
    """One line of the bound chain: lhs (= or <=) rhs."""

    name: str
    lhs: float
    rhs: float
    passed: bool


@dataclass(frozen=True)
class ChainReport:
    width: int
    k: int
    fidelity: float
    p_correct: float
    links: tuple[ChainLink, ...]

    @property
    def all_passed(self) -> bool:
        return all(link.passed for link in self.links)


def bound_chain(rho: DensityMatrix, fidelity: float, k: int) -> ChainReport:
    """Evaluate the whole discrimination bound chain for (rho, F, k).

    Links, in order (equalities checked within ORACLE_TOL, inequalities
    allowed the same slack):

    1. helstrom_value: success of the explicit optimal measurement equals
       1/2 + (1/4) * ||rho0^k - rho1^k||_1 (two independent routes).
    2. tensor_subadditivity: ||rho0^k - rho1^k||_1 <= k * ||rho0 - rho1||_1.
    3. noise_scaling: ||rho0 - rho1||_1 = F * ||rho - I/2**n||_1.
    4. distance_cap: ||rho - I/2**n||_1 <= 2.
    5. correctness_cap: p_correct <= 1/2 + k*F/2.
    """
    f = check_fidelity(fidelity)
    _check_power_cap(rho.width, k)
    d = 1 << rho.width
    mixed = np.eye(d) / d
    noisy = f * rho.mat + (1.0 - f) * mixed

    base_norm = _abs_eig_sum(rho.mat - mixed)
    single_norm = _abs_eig_sum(noisy - mixed)

    big0 = _tensor_power(mixed, k)
    big1 = _tensor_power(noisy, k)
    eigvals, eigvecs = np.linalg.eigh(big1 - big0)
    k_norm = float(np.abs(eigvals).sum())
    p_correct = 0.5 + 0.25 * k_norm

    # Independent route for link 1: actually measure with the optimal
    # projector and add up the success terms.
    positive = eigvecs[:, eigvals > 0]
    projector = positive @ positive.conj().T
    hit1 = float(np.trace(projector @ big1).real)
    hit0 = 1.0 - float(np.trace(projector @ big0).real)
    measured = 0.5 * (hit1 + hit0)

    links = (
        ChainLink("helstrom_value", measured, p_correct, abs(measured - p_correct) <= ORACLE_TOL),
        ChainLink("tensor_subadditivity", k_norm, k * single_norm, k_norm <= k * single_norm + ORACLE_TOL),
        ChainLink("noise_scaling", single_norm, f * base_norm, abs(single_norm - f * base_norm) <= ORACLE_TOL),
        ChainLink("distance_cap", base_norm, 2.0, base_norm <= 2.0 + ORACLE_TOL),
        ChainLink("correctness_cap", p_correct, 0.5 + k * f / 2.0, p_correct <= 0.5 + k * f / 2.0 + ORACLE_TOL),
    )
    return ChainReport(rho.width, int(k), f, p_correct, links)
