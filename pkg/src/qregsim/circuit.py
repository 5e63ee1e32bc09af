"""Gate programs: a line-oriented text format and multi-shot execution.

Circuit file grammar (UTF-8, one instruction per line, ``#`` comments)::

    qubits 2
    h 1
    cnot 1 0
    measure all

Mnemonics are ``id``, ``x``, ``h``, ``phase``, ``cnot``, ``cphase``,
``swap``, ``toffoli``, ``fredkin``; operands are qubit indices with control
qubits first, and ``phase``/``cphase`` take a trailing angle in radians
(decimal literal).  ``measure`` names the terminally measured qubits (or
``all``) and, when present, must be the last instruction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import gates
from .gates import Gate, GateApplication
from .measurement import RandomSource, sample_counts
from .state import QuantumState, basis_state


class CircuitParseError(ValueError):
    """Parse failure with 1-based line number context."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


_FIXED_GATES = {
    "id": gates.IDENTITY,
    "x": gates.NOT,
    "h": gates.HADAMARD,
    "cnot": gates.CNOT,
    "swap": gates.EXCHANGE,
    "toffoli": gates.TOFFOLI,
    "fredkin": gates.FREDKIN,
}
_PHASE_GATES = {"phase": gates.phase_shift, "cphase": gates.controlled_phase}
_ARITY = {"id": 1, "x": 1, "h": 1, "phase": 1, "cnot": 2, "cphase": 2,
          "swap": 2, "toffoli": 3, "fredkin": 3}


@dataclass(frozen=True)
class Circuit:
    """An ordered gate program over a fixed register width.

    ``terminal_measure`` is the tuple of qubits measured at the end of every
    shot, or None meaning all of them.
    """

    num_qubits: int
    steps: tuple[GateApplication, ...] = ()
    terminal_measure: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError(f"num_qubits must be positive, got {self.num_qubits}")
        object.__setattr__(self, "steps", tuple(self.steps))
        for step in self.steps:
            if max(step.targets) >= self.num_qubits:
                raise ValueError(
                    f"step {step!r} targets a qubit outside the "
                    f"{self.num_qubits}-qubit register"
                )
        if self.terminal_measure is not None:
            measure = tuple(int(q) for q in self.terminal_measure)
            if len(set(measure)) != len(measure):
                raise ValueError(f"duplicate measured qubits in {measure}")
            for q in measure:
                if not 0 <= q < self.num_qubits:
                    raise ValueError(f"measured qubit {q} out of range")
            object.__setattr__(self, "terminal_measure", measure)

    @property
    def measured_qubits(self) -> tuple[int, ...]:
        """The measured qubits in ascending order (all of them by default)."""
        if self.terminal_measure is None:
            return tuple(range(self.num_qubits))
        return tuple(sorted(self.terminal_measure))

    def final_state(self) -> QuantumState:
        """Evolve |0...0> through every step (no measurement)."""
        state = basis_state(self.num_qubits, 0)
        for step in self.steps:
            state = gates.apply(state, step)
        return state


@dataclass(frozen=True)
class RunResult:
    """Shot counts per observed outcome, with seed provenance.

    Outcomes pack the measured qubits' bits with the highest qubit index as
    the most significant bit; ``num_bits`` is the packed width.
    """

    shots: int
    seed: int
    counts: dict[int, int] = field(compare=False)
    num_bits: int = 0

    def bitstring(self, outcome: int) -> str:
        return format(outcome, f"0{self.num_bits}b")


def _parse_int(token: str, line_number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise CircuitParseError(line_number, f"expected {what}, got {token!r}") from None


def parse(text: str) -> Circuit:
    """Parse the circuit grammar; raises CircuitParseError with line numbers."""
    num_qubits: int | None = None
    steps: list[GateApplication] = []
    terminal: tuple[int, ...] | None = None
    saw_measure = False

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        word, operands = tokens[0], tokens[1:]

        if num_qubits is None:
            if word != "qubits":
                raise CircuitParseError(line_number, "expected 'qubits N' header")
            if len(operands) != 1:
                raise CircuitParseError(line_number, "'qubits' takes exactly one count")
            num_qubits = _parse_int(operands[0], line_number, "a qubit count")
            if num_qubits < 1:
                raise CircuitParseError(line_number, f"qubit count must be positive, got {num_qubits}")
            continue

        if saw_measure:
            raise CircuitParseError(line_number, "no instructions allowed after 'measure'")

        if word == "qubits":
            raise CircuitParseError(line_number, "duplicate 'qubits' header")

        if word == "measure":
            if not operands:
                raise CircuitParseError(line_number, "'measure' needs 'all' or qubit indices")
            if operands == ["all"]:
                terminal = None
            else:
                qubit_list = []
                for tok in operands:
                    q = _parse_int(tok, line_number, "a qubit index")
                    if not 0 <= q < num_qubits:
                        raise CircuitParseError(line_number, f"qubit {q} out of range")
                    if q in qubit_list:
                        raise CircuitParseError(line_number, f"duplicate measured qubit {q}")
                    qubit_list.append(q)
                terminal = tuple(qubit_list)
            saw_measure = True
            continue

        if word not in _ARITY:
            raise CircuitParseError(line_number, f"unknown mnemonic {word!r}")
        arity = _ARITY[word]
        takes_phase = word in _PHASE_GATES
        expected = arity + (1 if takes_phase else 0)
        if len(operands) != expected:
            raise CircuitParseError(
                line_number,
                f"{word!r} takes {arity} qubit index(es)"
                + (" and an angle" if takes_phase else "")
                + f", got {len(operands)} operand(s)",
            )
        qubit_ops = []
        for tok in operands[:arity]:
            q = _parse_int(tok, line_number, "a qubit index")
            if not 0 <= q < num_qubits:
                raise CircuitParseError(line_number, f"qubit {q} out of range")
            qubit_ops.append(q)
        if takes_phase:
            try:
                phi = float(operands[arity])
            except ValueError:
                raise CircuitParseError(
                    line_number, f"expected an angle in radians, got {operands[arity]!r}"
                ) from None
            gate = _PHASE_GATES[word](phi)
        else:
            gate = _FIXED_GATES[word]
        try:
            steps.append(GateApplication(gate, qubit_ops))
        except ValueError as exc:
            raise CircuitParseError(line_number, str(exc)) from None

    if num_qubits is None:
        raise CircuitParseError(1, "missing 'qubits N' header")
    return Circuit(num_qubits, tuple(steps), terminal)


def _format_step(step: GateApplication) -> str:
    tokens = [step.gate.name]
    tokens += [str(q) for q in step.targets]
    if step.gate.phi is not None:
        tokens.append(repr(step.gate.phi))
    return " ".join(tokens)


def serialize(circuit: Circuit) -> str:
    """Render a circuit in the file grammar; parse(serialize(c)) == c.

    Phases are printed with full round-trip precision.  Custom gates have no
    mnemonic and cannot be serialized.
    """
    lines = [f"qubits {circuit.num_qubits}"]
    for step in circuit.steps:
        if step.gate.name == "custom":
            raise ValueError("custom gates have no text-format mnemonic")
        lines.append(_format_step(step))
    if circuit.terminal_measure is None:
        lines.append("measure all")
    else:
        lines.append("measure " + " ".join(str(q) for q in circuit.terminal_measure))
    return "\n".join(lines) + "\n"


def run(circuit: Circuit, shots: int, seed: int) -> RunResult:
    """Execute a circuit: evolve |0...0> once, then sample ``shots`` outcomes.

    Identical (circuit, shots, seed) produce identical counts.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    state = circuit.final_state()
    measured = circuit.measured_qubits
    counts = sample_counts(state, shots, RandomSource(seed), qubits=measured)
    return RunResult(shots=shots, seed=seed, counts=counts, num_bits=len(measured))
