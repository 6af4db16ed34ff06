"""Command-line experiment runner.

Subcommands map one-to-one onto the package's analyses:

* simulate      exact output distribution of a circuit file
* depolarize    depolarized distributions plus seeded tallies per fidelity
* certify       additive / multiplicative closeness-to-uniform certificates
* thm1          randomized ancilla construction: acceptance spike per fidelity
* sbp-gap       yes/no acceptance thresholds for given (r, w, m, F, eps)
* discriminate  k-copy discrimination bound chain

Every run emits a single JSON report (stdout, or --out PATH) that echoes
the full config and the package version; identical (config, version) gives
byte-identical reports.  Wall time goes to stderr so it never perturbs the
report bytes.

Exit codes: 0 every check in the report passed, 1 some check failed,
2 usage error, 3 I/O or circuit-file parse error, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import asdict, dataclass, replace

from . import __version__
from .circuits import outcome_string, parse_circuit
from .construction import (
    build_randomized_circuit,
    depolarized_acceptance,
    mixture_distribution,
    sbp_thresholds,
)
from .depol import (
    additive_certificate,
    check_fidelity,
    check_seed,
    depolarize,
    empirical_tv,
    multiplicative_certificate,
    sample,
)
from .discrimination import bound_chain, density_from_pure, random_density_matrix
from .errors import CapExceeded, CircuitParseError
from .reports import render_json
from .statevector import output_distribution, run, zero_overlap


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a run depends on.  Echoed verbatim into the report."""

    subcommand: str
    circuit_path: str | None = None
    fidelity_grid: tuple[float, ...] = (0.5,)
    seed: int = 0
    samples: int = 10000
    k: int = 1
    r: int = 3
    w: int = 10
    m: int = 4
    epsilon: float = 0.5
    out_path: str | None = None


def _load_circuit(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_circuit(handle.read())


def _certificate_dict(report) -> dict:
    out = {
        "theorem": report.kind,
        "bound": report.bound,
        "achieved": report.achieved,
        "witness": report.witness,
        "passed": report.passed,
    }
    if report.scaled_ideal_l1 is not None:
        out["scaled_ideal_l1"] = report.scaled_ideal_l1
    return out


def _run_simulate(config: ExperimentConfig) -> tuple[dict, bool]:
    circuit = _load_circuit(config.circuit_path)
    dist = output_distribution(circuit)
    amp = zero_overlap(circuit)
    results = {
        "width": circuit.width,
        "gate_count": circuit.m,
        "zero_amplitude": {"re": amp.real, "im": amp.imag},
        "zero_probability": abs(amp) ** 2,
        "probabilities": list(dist.probs),
    }
    return results, True


def _run_depolarize(config: ExperimentConfig) -> tuple[dict, bool]:
    circuit = _load_circuit(config.circuit_path)
    ideal = output_distribution(circuit)
    entries = []
    for f in config.fidelity_grid:
        noisy = depolarize(ideal, f)
        tally = sample(noisy, config.seed, config.samples)
        entries.append(
            {
                "fidelity": f,
                "probabilities": list(noisy.probs),
                "tally": {outcome_string(z, noisy.width): c for z, c in tally.items()},
                "empirical_tv": empirical_tv(tally, noisy),
            }
        )
    results = {"width": circuit.width, "per_fidelity": entries}
    return results, True


def _run_certify(config: ExperimentConfig) -> tuple[dict, bool]:
    circuit = _load_circuit(config.circuit_path)
    ideal = output_distribution(circuit)
    entries = []
    all_passed = True
    for f in config.fidelity_grid:
        additive = additive_certificate(ideal, f)
        entry = {"fidelity": f, "additive": _certificate_dict(additive)}
        all_passed = all_passed and additive.passed
        if f <= 0.5:
            multiplicative = multiplicative_certificate(ideal, f)
            entry["multiplicative"] = _certificate_dict(multiplicative)
            all_passed = all_passed and multiplicative.passed
        else:
            entry["multiplicative"] = {
                "skipped": "the multiplicative certificate requires fidelity <= 1/2"
            }
        entries.append(entry)
    results = {"width": circuit.width, "per_fidelity": entries}
    return results, all_passed


def _mixture_checksum(rc) -> str | None:
    try:
        mix = mixture_distribution(rc)
    except CapExceeded:
        return None
    payload = ",".join(format(p, ".17g") for p in mix.probs)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def _run_thm1(config: ExperimentConfig) -> tuple[dict, bool]:
    circuit = _load_circuit(config.circuit_path)
    rc = build_randomized_circuit(circuit)
    q = abs(zero_overlap(circuit)) ** 2
    spikes = [
        {"fidelity": f, "p_acc_prime": depolarized_acceptance(rc, f)}
        for f in config.fidelity_grid
    ]
    results = {
        "w": rc.main_width,
        "m": rc.ancilla_width,
        "n": rc.total_width,
        "q": q,
        "per_fidelity": spikes,
        "mixture_checksum": _mixture_checksum(rc),
    }
    return results, True


def _run_sbp_gap(config: ExperimentConfig) -> tuple[dict, bool]:
    entries = []
    all_ok = True
    for f in config.fidelity_grid:
        report = sbp_thresholds(config.r, config.w, config.m, f, config.epsilon)
        entries.append(
            {
                "r": report.r,
                "w": report.w,
                "m": report.m,
                "fidelity": report.fidelity,
                "epsilon": report.epsilon,
                "yes_lower": report.yes_lower,
                "no_upper": report.no_upper,
                "ratio": report.ratio,
                "sbp_ok": report.sbp_ok,
            }
        )
        all_ok = all_ok and report.sbp_ok
    return {"per_fidelity": entries}, all_ok


def _run_discriminate(config: ExperimentConfig) -> tuple[dict, bool]:
    if config.circuit_path is not None:
        circuit = _load_circuit(config.circuit_path)
        rho = density_from_pure(run(circuit))
        source = "circuit"
    else:
        rho = random_density_matrix(config.w, config.seed)
        source = "random"
    chains = []
    all_passed = True
    for f in config.fidelity_grid:
        report = bound_chain(rho, f, config.k)
        chains.append(
            {
                "fidelity": f,
                "p_correct": report.p_correct,
                "links": [
                    {"name": l.name, "lhs": l.lhs, "rhs": l.rhs, "passed": l.passed}
                    for l in report.links
                ],
            }
        )
        all_passed = all_passed and report.all_passed
    results = {"source": source, "width": rho.width, "k": config.k, "chains": chains}
    return results, all_passed


_RUNNERS = {
    "simulate": _run_simulate,
    "depolarize": _run_depolarize,
    "certify": _run_certify,
    "thm1": _run_thm1,
    "sbp-gap": _run_sbp_gap,
    "discriminate": _run_discriminate,
}


def run_experiment(config: ExperimentConfig) -> dict:
    """Execute one subcommand and assemble the full report document."""
    runner = _RUNNERS.get(config.subcommand)
    if runner is None:
        raise ValueError(f"unknown subcommand {config.subcommand!r}")
    check_seed(config.seed)
    for f in config.fidelity_grid:
        check_fidelity(f)
    results, passed = runner(config)
    echo = asdict(config)
    echo["fidelity_grid"] = list(config.fidelity_grid)
    return {
        "version": __version__,
        "config": echo,
        "passed": passed,
        "results": results,
    }


def _parse_fidelity_grid(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad fidelity list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("fidelity list must be non-empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="depolab",
        description="Exact sampling and verification for globally depolarized circuits",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, circuit_required=None):
        if circuit_required is not None:
            p.add_argument("--circuit", required=circuit_required, help="circuit file path")
        p.add_argument("--fidelity", type=_parse_fidelity_grid, default=(0.5,),
                       help="fidelity value or comma-separated grid (default 0.5)")
        p.add_argument("--seed", type=int, default=0, help="64-bit sampler seed (default 0)")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")

    p = sub.add_parser("simulate", help="exact output distribution of a circuit")
    common(p, circuit_required=True)

    p = sub.add_parser("depolarize", help="depolarized distributions and tallies")
    common(p, circuit_required=True)
    p.add_argument("--samples", type=int, default=10000, help="tally size (default 10000)")

    p = sub.add_parser("certify", help="closeness-to-uniform certificates")
    common(p, circuit_required=True)

    p = sub.add_parser("thm1", help="randomized ancilla construction acceptance")
    common(p, circuit_required=True)

    p = sub.add_parser("sbp-gap", help="yes/no acceptance thresholds")
    common(p)
    p.add_argument("--r", type=int, default=3, help="promise-gap exponent (default 3)")
    p.add_argument("--w", type=int, default=10, help="main register width (default 10)")
    p.add_argument("--m", type=int, default=4, help="step count (default 4)")
    p.add_argument("--epsilon", type=float, default=0.5,
                   help="sampler relative error in [0, 1) (default 0.5)")

    p = sub.add_parser("discriminate", help="k-copy discrimination bound chain")
    common(p, circuit_required=False)
    p.add_argument("--k", type=int, default=1, help="number of copies (default 1)")
    p.add_argument("--w", type=int, default=2,
                   help="width of the seeded random state when no --circuit (default 2)")

    return parser


def _config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    config = ExperimentConfig(subcommand=args.subcommand)
    overrides = {
        "circuit_path": getattr(args, "circuit", None),
        "fidelity_grid": args.fidelity,
        "seed": args.seed,
        "out_path": args.out,
    }
    for field in ("samples", "k", "r", "w", "m", "epsilon"):
        if hasattr(args, field):
            overrides[field] = getattr(args, field)
    return replace(config, **overrides)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    config = _config_from_args(args)
    started = time.perf_counter()
    try:
        report = run_experiment(config)
    except CircuitParseError as err:
        print(f"depolab: circuit file error: {err}", file=sys.stderr)
        return 3
    except CapExceeded as err:
        print(f"depolab: cap exceeded: {err}", file=sys.stderr)
        return 4
    except ValueError as err:
        print(f"depolab: usage error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"depolab: i/o error: {err}", file=sys.stderr)
        return 3
    elapsed = time.perf_counter() - started
    payload = render_json(report) + "\n"
    if config.out_path is not None:
        try:
            with open(config.out_path, "w", encoding="utf-8") as handle:
                handle.write(payload)
        except OSError as err:
            print(f"depolab: i/o error: {err}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(payload)
        sys.stdout.flush()
    print(f"# wall time: {elapsed:.3f} s", file=sys.stderr)
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
