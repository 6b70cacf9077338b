"""gate list -> schedule -> simulation -> layout report, for both control modes."""
from __future__ import annotations

from dataclasses import dataclass, replace

from .gatelist import GateList, t_count
from .scheduler import Schedule, schedule_asap, serialize_t
from .distsim import SimConfig, SimTrace, simulate, max_occupancy
from .layout import (LayoutParams, ResourceReport, layout_depth, layout_height,
                     layout_width, qubit_rows, bare_width, improvement)


@dataclass(frozen=True)
class Estimate:
    schedule: Schedule
    uncontrolled: ResourceReport
    controlled: ResourceReport
    uncontrolled_trace: SimTrace
    controlled_trace: SimTrace

    @property
    def improvement(self) -> float:
        return self.controlled.improvement

    def as_dict(self) -> dict:
        return {
            "uncontrolled": self.uncontrolled.as_dict(),
            "controlled": self.controlled.as_dict(),
            "improvement": self.improvement,
        }


def report(gl: GateList, trace: SimTrace, params: LayoutParams, n=None, bare=False) -> ResourceReport:
    cfg = trace.config
    tc = t_count(gl)
    peak = max_occupancy(trace)
    if bare and tc == 0:
        width, height = bare_width(params), qubit_rows(gl.num_qubits, params)
    else:
        width = layout_width(peak, cfg.controlled, params)
        height = layout_height(gl.num_qubits, params)
    return ResourceReport(
        depth=layout_depth(trace.final_depth, params),
        width=width,
        height=height,
        t_count=tc,
        mode="controlled" if cfg.controlled else "uncontrolled",
        capacity=cfg.capacity,
        max_pool=peak,
        delays=trace.delays,
        n=n,
    )


def estimate(gl: GateList, capacity: int | None = 7, params: LayoutParams = LayoutParams(),
             n: int | None = None, serialize: bool = True, bare: bool = False) -> Estimate:
    """Run the uncontrolled baseline and the capacity-controlled distillery."""
    sched = schedule_asap(gl)
    if serialize:
        sched = serialize_t(sched)
    u_trace = simulate(sched, SimConfig(capacity=None, dist_t=params.dist_t))
    c_trace = simulate(sched, SimConfig(capacity=capacity, dist_t=params.dist_t))
    base = report(gl, u_trace, params, n, bare)
    ctrl = report(gl, c_trace, params, n, bare)
    ctrl = replace(ctrl, improvement=improvement(base, ctrl))
    base = replace(base, improvement=1.0)
    return Estimate(sched, base, ctrl, u_trace, c_trace)
