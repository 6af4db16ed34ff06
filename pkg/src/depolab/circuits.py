"""Circuit model and the text format for circuit files.

A circuit is a width (number of qubits) plus an ordered gate list over the
fixed gate set H, X, S, T, CNOT, I1.  I1 is an explicit single-qubit
identity; it counts toward the gate count like any other gate, which keeps
"m gates" an honest measure of circuit length.

Text format::

    # comment to end of line
    qubits 3
    H 0
    CNOT 0 1      # control first, then target
    T 2

The first non-comment, non-blank line must be the ``qubits <n>`` header.
Qubit 0 is the least significant bit of an outcome index; rendered outcome
strings print qubit 0 leftmost.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CircuitParseError

GATE_ARITY = {"H": 1, "X": 1, "S": 1, "T": 1, "I1": 1, "CNOT": 2}

# Gates that act on one qubit and do something (everything except CNOT and I1).
ONE_QUBIT_GATES = ("H", "X", "S", "T")


@dataclass(frozen=True)
class Gate:
    """A named gate applied to specific qubits (CNOT: control first)."""

    kind: str
    targets: tuple[int, ...]

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.targets)])


@dataclass(frozen=True)
class Circuit:
    """Width plus ordered gates.  A plain record: build anything, then ask
    validate_circuit() whether it is legal."""

    width: int
    gates: tuple[Gate, ...]

    @property
    def m(self) -> int:
        """Gate count, identities included."""
        return len(self.gates)


def gate(kind: str, *targets: int) -> Gate:
    """Shorthand constructor: gate("CNOT", 0, 1)."""
    return Gate(kind, tuple(targets))


def validate_circuit(circuit: Circuit) -> list[str]:
    """Return every invariant violation, [] when the circuit is valid.

    Checks width >= 1, known gate kinds, arity, target range and target
    distinctness.  Positions in messages are 0-based gate indices.
    """
    problems = []
    if circuit.width < 1:
        problems.append(f"width must be >= 1, got {circuit.width}")
    for i, g in enumerate(circuit.gates):
        arity = GATE_ARITY.get(g.kind)
        if arity is None:
            problems.append(f"gate {i}: unknown gate kind {g.kind!r}")
            continue
        if len(g.targets) != arity:
            problems.append(
                f"gate {i}: {g.kind} takes {arity} target(s), got {len(g.targets)}"
            )
            continue
        for q in g.targets:
            if not 0 <= q < circuit.width:
                problems.append(
                    f"gate {i}: target {q} out of range for width {circuit.width}"
                )
        if len(set(g.targets)) != len(g.targets):
            problems.append(f"gate {i}: duplicate targets {g.targets}")
    return problems


def parse_circuit(text: str) -> Circuit:
    """Parse the text format into a Circuit.

    Raises CircuitParseError (with a 1-based line number) on the first
    problem found.  The result always passes validate_circuit().
    """
    width = None
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if width is None:
            if tokens[0] != "qubits" or len(tokens) != 2:
                raise CircuitParseError(
                    lineno, f"expected 'qubits <n>' header, got {line!r}"
                )
            try:
                width = int(tokens[1])
            except ValueError:
                raise CircuitParseError(
                    lineno, f"qubit count must be an integer, got {tokens[1]!r}"
                ) from None
            if width < 1:
                raise CircuitParseError(lineno, f"qubit count must be >= 1, got {width}")
            continue
        kind, args = tokens[0], tokens[1:]
        arity = GATE_ARITY.get(kind)
        if arity is None:
            raise CircuitParseError(lineno, f"unknown gate {kind!r}")
        if len(args) != arity:
            raise CircuitParseError(
                lineno, f"{kind} takes {arity} qubit(s), got {len(args)}"
            )
        targets = []
        for tok in args:
            try:
                q = int(tok)
            except ValueError:
                raise CircuitParseError(
                    lineno, f"invalid qubit index {tok!r}"
                ) from None
            if not 0 <= q < width:
                raise CircuitParseError(
                    lineno, f"qubit {q} out of range for width {width}"
                )
            targets.append(q)
        if len(set(targets)) != len(targets):
            raise CircuitParseError(lineno, f"duplicate targets on {kind}")
        gates.append(Gate(kind, tuple(targets)))
    if width is None:
        raise CircuitParseError(1, "missing 'qubits <n>' header")
    return Circuit(width, tuple(gates))


def serialize_circuit(circuit: Circuit) -> str:
    """Render a circuit in the text format.  parse_circuit inverts this."""
    lines = [f"qubits {circuit.width}"]
    lines.extend(str(g) for g in circuit.gates)
    return "\n".join(lines) + "\n"


def outcome_string(index: int, width: int) -> str:
    """Bitstring for an outcome index, qubit 0 printed leftmost."""
    if not 0 <= index < (1 << width):
        raise ValueError(f"outcome {index} out of range for width {width}")
    return "".join(str((index >> q) & 1) for q in range(width))


def random_circuit(width: int, gate_count: int, rng: np.random.Generator) -> Circuit:
    """Draw a random circuit: uniform gate kinds, uniform valid targets.

    CNOT is only drawn for width >= 2.  Used by the experiment scripts and
    the test corpus; not part of the simulation semantics.
    """
    kinds = list(ONE_QUBIT_GATES) + ["I1"]
    if width >= 2:
        kinds.append("CNOT")
    gates = []
    for _ in range(gate_count):
        kind = kinds[rng.integers(len(kinds))]
        if kind == "CNOT":
            control = int(rng.integers(width))
            target = int(rng.integers(width - 1))
            if target >= control:
                target += 1
            gates.append(Gate(kind, (control, target)))
        else:
            gates.append(Gate(kind, (int(rng.integers(width)),)))
    return Circuit(width, tuple(gates))
