"""ASAP scheduling of gate lists and serialisation of T-consuming gates.

A ``Schedule`` keeps a reference to the GateList it was built from and stores
each step as a tuple of indices into ``source.gates``. Within a step the
indices are ordered by lowest operand qubit.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .gatelist import GateList, GateListError, format_gate, iter_lines, parse_gate_tokens, parse_header, check_range


@dataclass(frozen=True)
class Schedule:
    num_qubits: int
    steps: tuple[tuple[int, ...], ...]
    source: GateList = field(repr=False)
    t_serialized: bool = False

    def gates_at(self, step: int):
        return [self.source.gates[i] for i in self.steps[step]]

    def step_of(self) -> list[int]:
        """Step index of every source gate."""
        out = [-1] * len(self.source.gates)
        for t, idx in enumerate(self.steps):
            for i in idx:
                out[i] = t
        return out

    def t_demand(self) -> list[int]:
        gates = self.source.gates
        return [sum(1 for i in idx if gates[i].consumes_t) for idx in self.steps]


@dataclass(frozen=True)
class TDistribution:
    per_step: tuple[int, ...]

    @property
    def max_parallel(self) -> int:
        return max(self.per_step, default=0)

    def to_csv(self) -> str:
        rows = ["step,t_count"] + [f"{i},{c}" for i, c in enumerate(self.per_step)]
        return "\n".join(rows) + "\n"


def predecessors(gl: GateList) -> list[tuple[int, ...]]:
    """For each gate, the indices of the previous gate on each of its qubits."""
    last: dict[int, int] = {}
    preds = []
    for i, g in enumerate(gl.gates):
        preds.append(tuple(sorted({last[q] for q in g.operands if q in last})))
        for q in g.operands:
            last[q] = i
    return preds


def successors(gl: GateList) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in gl.gates]
    for i, ps in enumerate(predecessors(gl)):
        for p in ps:
            succ[p].append(i)
    return succ


def tail_lengths(gl: GateList) -> list[int]:
    """Longest chain of gates from each gate (inclusive) to the circuit end."""
    succ = successors(gl)
    tail = [1] * len(gl.gates)
    for i in range(len(gl.gates) - 1, -1, -1):
        if succ[i]:
            tail[i] = 1 + max(tail[s] for s in succ[i])
    return tail


def _from_assignment(gl: GateList, step_of: list[int], t_serialized: bool) -> Schedule:
    n_steps = max(step_of, default=-1) + 1
    buckets: list[list[int]] = [[] for _ in range(n_steps)]
    for i, t in enumerate(step_of):
        buckets[t].append(i)
    steps = tuple(
        tuple(sorted(b, key=lambda i: (min(gl.gates[i].operands), i))) for b in buckets
    )
    return Schedule(gl.num_qubits, steps, gl, t_serialized)


def schedule_asap(gl: GateList) -> Schedule:
    ready = [0] * gl.num_qubits
    step_of = []
    for g in gl.gates:
        t = max(ready[q] for q in g.operands)
        step_of.append(t)
        for q in g.operands:
            ready[q] = t + 1
    sched = _from_assignment(gl, step_of, False)
    if all(c <= 1 for c in sched.t_demand()):
        return Schedule(sched.num_qubits, sched.steps, gl, True)
    return sched


def serialize_t(s: Schedule) -> Schedule:
    """Spread T-consuming gates so that no step holds more than one.

    Steps are scanned in time order. In a step with several T-consuming gates
    the one with the longest remaining dependency chain stays (ties: lowest
    qubit); the others move one step later, and any successor whose qubit
    order would break is rippled forward.
    """
    gl = s.source
    gates = gl.gates
    step_of = s.step_of()
    preds = predecessors(gl)
    succ = successors(gl)
    tail = tail_lengths(gl)

    by_step: dict[int, set[int]] = {}
    for i, t in enumerate(step_of):
        if gates[i].consumes_t:
            by_step.setdefault(t, set()).add(i)

    last = max(step_of, default=-1)

    def move(i, t):
        nonlocal last
        last = max(last, t)
        by_t = by_step.get(step_of[i])
        if by_t is not None:
            by_t.discard(i)
        step_of[i] = t
        if gates[i].consumes_t:
            by_step.setdefault(t, set()).add(i)

    t = 0
    while t <= last:
        here = by_step.get(t, ())
        if len(here) > 1:
            ranked = sorted(here, key=lambda i: (-tail[i], min(gates[i].operands), i))
            for i in ranked[1:]:
                move(i, t + 1)
                work = list(succ[i])
                while work:
                    j = work.pop()
                    need = max(step_of[p] for p in preds[j]) + 1
                    if step_of[j] < need:
                        move(j, need)
                        work.extend(succ[j])
        t += 1
    return _from_assignment(gl, step_of, True)


def depth(s: Schedule) -> int:
    """Time extent of the schedule: last occupied step + 1."""
    for t in range(len(s.steps) - 1, -1, -1):
        if s.steps[t]:
            return t + 1
    return 0


def t_distribution(s: Schedule) -> TDistribution:
    return TDistribution(tuple(s.t_demand()[: depth(s)]))


# scheduled text format ------------------------------------------------------

def serialize_schedule(s: Schedule) -> str:
    lines = [f"qubits {s.num_qubits}"]
    for t, idx in enumerate(s.steps):
        for i in idx:
            lines.append(f"@{t} {format_gate(s.source.gates[i])}")
    return "\n".join(lines)


# distillery control marks written by the simulator; not gates
ANNOTATIONS = frozenset({"distillOn", "distillOff", "delay"})


def parse_schedule(text: str) -> Schedule:
    """Read the ``@<step> <gate>`` format back into a Schedule.

    Gates are re-ordered by step (stable within a step) to form the source
    GateList. Per-qubit conflicts within a step are rejected.
    """
    num_qubits = None
    entries = []
    for lineno, tokens in iter_lines(text):
        if num_qubits is None:
            num_qubits = parse_header(tokens, lineno)
            continue
        head = tokens[0]
        if not head.startswith("@") or not head[1:].isdigit():
            raise GateListError("expected @<step> prefix", lineno, head)
        if len(tokens) < 2:
            raise GateListError("missing gate after step prefix", lineno, head)
        if len(tokens) == 2 and tokens[1] in ANNOTATIONS:
            continue
        gate = parse_gate_tokens(tokens[1:], lineno)
        check_range(gate, num_qubits, lineno)
        entries.append((int(head[1:]), lineno, gate))
    if num_qubits is None:
        raise GateListError("missing qubits header")
    entries.sort(key=lambda e: e[0])
    busy: set[tuple[int, int]] = set()
    for t, lineno, g in entries:
        for q in g.operands:
            if (t, q) in busy:
                raise GateListError(f"qubit used twice in step {t}", lineno, f"q{q}")
            busy.add((t, q))
    gl = GateList(num_qubits, [g for _, _, g in entries])
    sched = _from_assignment(gl, [t for t, _, _ in entries], False)
    serial = all(c <= 1 for c in sched.t_demand())
    return Schedule(sched.num_qubits, sched.steps, gl, serial)
