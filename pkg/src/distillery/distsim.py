"""Step-by-step simulation of the distillery and the connection pool.

Timing convention (dist_t = 3 shown):

    step      0   1   2 | 3   4   5 | 6 ...
    distill   [ first   ] [ second  ]
    deposit           ^ end of step 2
    usable              from step 3

Within one step, T-consuming gates draw from the pool as it stood at the start
of the step; a distillation finishing in that step deposits at its end. When
the pool is Full after a deposit the distillery stops; it restarts (no
latency) in the step in which a connection is next taken. Once
``total_to_distill`` states have been produced it stops for good.

A step whose T demand cannot be met is a delay: the rest of the schedule
slides one step later, and the step is retried.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .scheduler import Schedule, depth
from .gatelist import t_count, format_gate


class PoolState(Enum):
    FULL = "full"
    EMPTY = "empty"
    ACCEPTING = "accepting"


class DistilleryState(Enum):
    WORKING = "working"
    DISTILLED = "distilled"
    STOPPED = "stopped"
    START = "start"
    STOP = "stop"


class EventKind(Enum):
    DISTILL_ON = "distillOn"
    DISTILL_OFF = "distillOff"
    DELAY = "delay"


def pool_state(occupancy: int, capacity: int | None) -> PoolState:
    if occupancy == 0:
        return PoolState.EMPTY
    if capacity is not None and occupancy >= capacity:
        return PoolState.FULL
    return PoolState.ACCEPTING


@dataclass(frozen=True)
class SimConfig:
    capacity: int | None = 7  # None: unbounded
    dist_t: int = 3
    total_to_distill: int | None = None  # None: T-count of the schedule

    def __post_init__(self):
        if self.dist_t < 1:
            raise ValueError("dist_t must be >= 1")
        if self.capacity is not None and self.capacity < 1:
            raise ValueError("capacity must be >= 1 or unbounded")
        if self.total_to_distill is not None and self.total_to_distill < 0:
            raise ValueError("total_to_distill must be >= 0")

    @property
    def controlled(self) -> bool:
        return self.capacity is not None


@dataclass(frozen=True)
class StepRecord:
    step: int
    occupancy: int
    produced: int
    consumed: int
    state: DistilleryState


@dataclass(frozen=True)
class Event:
    step: int
    kind: EventKind


@dataclass(frozen=True)
class SimTrace:
    records: tuple[StepRecord, ...]
    events: tuple[Event, ...]
    final_depth: int
    config: SimConfig
    total_to_distill: int
    # sim step at which each schedule step completed
    executed_at: tuple[int, ...] = field(repr=False)
    schedule: Schedule = field(repr=False, compare=False)

    @property
    def delays(self) -> int:
        return sum(1 for e in self.events if e.kind is EventKind.DELAY)

    def occupancy(self) -> list[int]:
        return [r.occupancy for r in self.records]

    def events_of(self, kind: EventKind) -> list[int]:
        return [e.step for e in self.events if e.kind is kind]

    def to_csv(self) -> str:
        rows = ["step,occupancy,produced,consumed,state"]
        rows += [
            f"{r.step},{r.occupancy},{r.produced},{r.consumed},{r.state.value}"
            for r in self.records
        ]
        return "\n".join(rows) + "\n"

    def events_csv(self) -> str:
        rows = ["step,event"] + [f"{e.step},{e.kind.value}" for e in self.events]
        return "\n".join(rows) + "\n"


def simulate(s: Schedule, cfg: SimConfig = SimConfig()) -> SimTrace:
    demand = s.t_demand()[: depth(s)]
    total = cfg.total_to_distill if cfg.total_to_distill is not None else t_count(s.source)
    cap, dist_t = cfg.capacity, cfg.dist_t

    occ = produced = consumed = 0
    working = total > 0
    progress = 0  # steps already spent on the current distillation
    records: list[StepRecord] = []
    events: list[Event] = []
    executed_at: list[int] = []

    step = 0
    p = 0
    remaining = demand[0] if demand else 0
    while p < len(demand):
        # consume
        take = min(remaining, occ)
        if take:
            occ -= take
            consumed += take
            remaining -= take
            if not working and produced < total:
                working = True
                progress = 0
                events.append(Event(step, EventKind.DISTILL_ON))
        if remaining:
            events.append(Event(step, EventKind.DELAY))
        else:
            executed_at.append(step)
            p += 1
            remaining = demand[p] if p < len(demand) else 0

        # produce
        if working:
            progress += 1
            if progress == dist_t:
                occ += 1
                produced += 1
                progress = 0
                if (cap is not None and occ >= cap) or produced >= total:
                    working = False
                    events.append(Event(step, EventKind.DISTILL_OFF))

        state = DistilleryState.WORKING if working else DistilleryState.STOPPED
        records.append(StepRecord(step, occ, produced, consumed, state))
        step += 1

    return SimTrace(tuple(records), tuple(events), step, cfg, total, tuple(executed_at), s)


def max_occupancy(trace: SimTrace) -> int:
    return max((r.occupancy for r in trace.records), default=0)


def peak_step(trace: SimTrace) -> int | None:
    """Last step at which the pool holds its maximum, i.e. where it stops growing."""
    m = max_occupancy(trace)
    if m == 0:
        return None
    return max(r.step for r in trace.records if r.occupancy == m)


def empty_step(trace: SimTrace) -> int | None:
    """First step after the peak at which the pool is drained."""
    peak = peak_step(trace)
    if peak is None:
        return None
    for r in trace.records[peak:]:
        if r.occupancy == 0:
            return r.step
    return None


class TraceMismatch(ValueError):
    pass


def annotate(s: Schedule, trace: SimTrace) -> str:
    """Executed gate list with ``@<step> distillOn/distillOff`` lines interleaved.

    Gate lines carry the step at which they actually ran, after delays.
    """
    if trace.schedule is not s and trace.schedule != s:
        raise TraceMismatch("trace was not produced from this schedule")
    if len(trace.executed_at) != depth(s):
        raise TraceMismatch("trace does not cover the schedule")

    marks: dict[int, list[str]] = {}
    for e in trace.events:
        if e.kind is not EventKind.DELAY:
            marks.setdefault(e.step, []).append(e.kind.value)

    lines = [f"qubits {s.num_qubits}"]
    gates = s.source.gates
    by_step: dict[int, list[str]] = {}
    for p, at in enumerate(trace.executed_at):
        by_step[at] = [format_gate(gates[i]) for i in s.steps[p]]
    for t in range(trace.final_depth):
        for g in by_step.get(t, ()):
            lines.append(f"@{t} {g}")
        for m in marks.get(t, ()):
            lines.append(f"@{t} {m}")
    return "\n".join(lines)
