"""depolab: exact sampling, certification, and discrimination bounds for
globally depolarized quantum circuits.

The package simulates small circuits exactly, applies the global
depolarizing map to their output distributions, certifies how close the
result is to uniform (additively and per-outcome), builds the randomized
ancilla-flagged construction whose acceptance spike survives
depolarization, and evaluates how little k copies help in distinguishing
the depolarized state from pure noise.
"""

__version__ = "0.1.0"

from .circuits import (
    Circuit,
    Gate,
    gate,
    outcome_string,
    parse_circuit,
    random_circuit,
    serialize_circuit,
    validate_circuit,
)
from .construction import (
    HardnessGap,
    RandomizedCircuit,
    ThresholdReport,
    build_randomized_circuit,
    depolarized_acceptance,
    hardness_gap,
    mixture_distribution,
    sample_branch,
    sbp_thresholds,
    x_on_first_target,
)
from .depol import (
    CertificateReport,
    additive_certificate,
    check_fidelity,
    check_seed,
    depolarize,
    empirical_tv,
    multiplicative_certificate,
    sample,
)
from .discrimination import (
    ChainLink,
    ChainReport,
    DensityMatrix,
    bound_chain,
    density_from_pure,
    depolarize_density,
    helstrom_correct,
    maximally_mixed,
    random_density_matrix,
    trace_norm_diff,
)
from .errors import CapExceeded, CircuitParseError
from .statevector import (
    Distribution,
    StateVector,
    apply_gate,
    output_distribution,
    run,
    width_cap,
    zero_overlap,
)

__all__ = [
    "__version__",
    "CapExceeded",
    "CertificateReport",
    "ChainLink",
    "ChainReport",
    "Circuit",
    "CircuitParseError",
    "DensityMatrix",
    "Distribution",
    "Gate",
    "HardnessGap",
    "RandomizedCircuit",
    "StateVector",
    "ThresholdReport",
    "additive_certificate",
    "apply_gate",
    "bound_chain",
    "build_randomized_circuit",
    "check_fidelity",
    "check_seed",
    "density_from_pure",
    "depolarize",
    "depolarize_density",
    "depolarized_acceptance",
    "empirical_tv",
    "gate",
    "hardness_gap",
    "helstrom_correct",
    "maximally_mixed",
    "mixture_distribution",
    "multiplicative_certificate",
    "outcome_string",
    "output_distribution",
    "parse_circuit",
    "random_circuit",
    "random_density_matrix",
    "run",
    "sample",
    "sample_branch",
    "sbp_thresholds",
    "serialize_circuit",
    "trace_norm_diff",
    "validate_circuit",
    "width_cap",
    "x_on_first_target",
    "zero_overlap",
]
