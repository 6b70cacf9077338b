"""Clifford+T gate lists: representation, text format, T-count."""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class GateKind(Enum):
    INIT_Z = "init_z"
    INIT_X = "init_x"
    INIT_A = "init_a"
    MEASURE_Z = "measure_z"
    MEASURE_X = "measure_x"
    H = "h"
    S = "s"
    T = "t"
    CNOT = "cnot"

    @property
    def arity(self) -> int:
        return 2 if self is GateKind.CNOT else 1

    @property
    def consumes_t(self) -> bool:
        """True for kinds that use up one distilled T state."""
        return self in (GateKind.T, GateKind.INIT_A)


class GateListError(ValueError):
    """Raised on malformed gate list text or an invalid gate list."""

    def __init__(self, message: str, line: int | None = None, token: str | None = None):
        self.line = line
        self.token = token
        where = f"line {line}: " if line is not None else ""
        what = f" (token {token!r})" if token is not None else ""
        super().__init__(f"{where}{message}{what}")


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    operands: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(self.operands))
        if len(self.operands) != self.kind.arity:
            raise GateListError(
                f"{self.kind.value} takes {self.kind.arity} operand(s), got {len(self.operands)}"
            )
        if any(q < 0 for q in self.operands):
            raise GateListError("negative qubit index")
        if len(set(self.operands)) != len(self.operands):
            raise GateListError("repeated operand")

    @property
    def consumes_t(self) -> bool:
        return self.kind.consumes_t


@dataclass(frozen=True)
class GateList:
    num_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.num_qubits < 0:
            raise GateListError("negative qubit count")
        for g in self.gates:
            for q in g.operands:
                if q >= self.num_qubits:
                    raise GateListError(f"operand out of range: q{q} >= {self.num_qubits}")

    def __len__(self) -> int:
        return len(self.gates)

    def __add__(self, other: GateList) -> GateList:
        if other.num_qubits != self.num_qubits:
            raise GateListError("cannot concatenate gate lists on different qubit sets")
        return GateList(self.num_qubits, self.gates + other.gates)


def t_count(gl: GateList) -> int:
    """Number of T gates plus magic-state initialisations."""
    return sum(1 for g in gl.gates if g.consumes_t)


def gate_stats(gl: GateList) -> dict[str, int]:
    counts = {k.value: 0 for k in GateKind}
    for g in gl.gates:
        counts[g.kind.value] += 1
    counts["total"] = len(gl.gates)
    counts["t_count"] = t_count(gl)
    return counts


# text format ---------------------------------------------------------------

_QUBIT = re.compile(r"q(\d+)$")

_INIT_BASIS = {"Z": GateKind.INIT_Z, "X": GateKind.INIT_X, "A": GateKind.INIT_A}
_MEASURE_BASIS = {"Z": GateKind.MEASURE_Z, "X": GateKind.MEASURE_X}
_SIMPLE = {"h": GateKind.H, "s": GateKind.S, "t": GateKind.T}


def _qubit(token: str, lineno: int) -> int:
    m = _QUBIT.match(token.lower())
    if not m:
        raise GateListError("expected qubit name q<N>", lineno, token)
    return int(m.group(1))


def parse_gate_tokens(tokens: list[str], lineno: int) -> Gate:
    """Build one Gate from the whitespace-split tokens of a gate line."""
    op = tokens[0].lower()
    args = tokens[1:]

    def expect(n):
        if len(args) != n:
            raise GateListError(f"{op} expects {n} argument(s)", lineno, " ".join(tokens))

    if op in _SIMPLE:
        expect(1)
        return Gate(_SIMPLE[op], (_qubit(args[0], lineno),))
    if op == "cnot":
        expect(2)
        c, t = _qubit(args[0], lineno), _qubit(args[1], lineno)
        if c == t:
            raise GateListError("cnot control equals target", lineno, " ".join(tokens))
        return Gate(GateKind.CNOT, (c, t))
    if op in ("init", "measure"):
        expect(2)
        table = _INIT_BASIS if op == "init" else _MEASURE_BASIS
        basis = args[1].upper()
        if basis not in table:
            raise GateListError(f"bad {op} basis", lineno, args[1])
        return Gate(table[basis], (_qubit(args[0], lineno),))
    raise GateListError("unknown gate", lineno, tokens[0])


def iter_lines(text: str):
    """Yield (lineno, tokens) for every non-blank line with comments removed."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_header(tokens: list[str], lineno: int) -> int:
    if tokens[0].lower() != "qubits":
        raise GateListError("missing qubits header", lineno, tokens[0])
    if len(tokens) != 2 or not tokens[1].isdigit():
        raise GateListError("malformed qubits header", lineno, " ".join(tokens))
    return int(tokens[1])


def check_range(gate: Gate, num_qubits: int, lineno: int):
    for q in gate.operands:
        if q >= num_qubits:
            raise GateListError(f"operand out of range (qubits {num_qubits})", lineno, f"q{q}")


def parse(text: str) -> GateList:
    num_qubits = None
    gates = []
    for lineno, tokens in iter_lines(text):
        if num_qubits is None:
            num_qubits = parse_header(tokens, lineno)
            continue
        try:
            gate = parse_gate_tokens(tokens, lineno)
        except GateListError as e:
            if e.line is None:
                raise GateListError(str(e), lineno, " ".join(tokens)) from None
            raise
        check_range(gate, num_qubits, lineno)
        gates.append(gate)
    if num_qubits is None:
        raise GateListError("missing qubits header")
    return GateList(num_qubits, gates)


def format_gate(g: Gate) -> str:
    k = g.kind
    q = [f"q{i}" for i in g.operands]
    if k is GateKind.CNOT:
        return f"cnot {q[0]} {q[1]}"
    if k in (GateKind.INIT_Z, GateKind.INIT_X, GateKind.INIT_A):
        return f"init {q[0]} {k.value[-1].upper()}"
    if k in (GateKind.MEASURE_Z, GateKind.MEASURE_X):
        return f"measure {q[0]} {k.value[-1].upper()}"
    return f"{k.value} {q[0]}"


def serialize(gl: GateList) -> str:
    return "\n".join([f"qubits {gl.num_qubits}"] + [format_gate(g) for g in gl.gates])
