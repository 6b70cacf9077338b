"""Bounding box of the distillery / pool / computation layout, in plumbing pieces.

The three partitions are stacked vertically: distillation boxes on top, one
row of pooled connections under them, and the computation's qubit rows at the
bottom. Depth runs along time.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class LayoutParams:
    box_depth: int = 6
    box_width: int = 16
    box_height: int = 10
    dist_t: int = 3
    qubits_per_row: int = 7
    pool_capacity_default: int = 7
    pieces_per_step: int = 2
    pool_row_height: int = 2

    def __post_init__(self):
        if self.box_depth != self.dist_t * self.pieces_per_step:
            raise ValueError(
                f"box_depth {self.box_depth} != dist_t {self.dist_t} * {self.pieces_per_step} pieces/step"
            )
        if 2 * (self.qubits_per_row + 1) > self.box_width:
            raise ValueError(f"{self.qubits_per_row} qubits per row do not fit under a {self.box_width}-wide box")

    @classmethod
    def with_dist_t(cls, dist_t, **kw):
        pps = kw.get("pieces_per_step", 2)
        return cls(box_depth=dist_t * pps, dist_t=dist_t, **kw)


def layout_depth(final_depth_steps: int, params: LayoutParams = LayoutParams()) -> int:
    return params.pieces_per_step * final_depth_steps


def qubit_rows(num_qubits: int, params: LayoutParams = LayoutParams()) -> int:
    return math.ceil(num_qubits / params.qubits_per_row)


def layout_height(num_qubits: int, params: LayoutParams = LayoutParams()) -> int:
    return params.box_height + params.pool_row_height + qubit_rows(num_qubits, params)


class LayoutError(ValueError):
    pass


def layout_width(max_pool: int, controlled: bool, params: LayoutParams = LayoutParams()) -> int:
    # a pooled connection is a line pair (width 2); overflow needs one extra routing column
    if controlled:
        if 2 * max_pool > params.box_width:
            raise LayoutError(
                f"pool of {max_pool} connections does not fit under a {params.box_width}-wide distillery"
            )
        return params.box_width
    return max(params.box_width, 2 * max_pool + 1)


def bare_width(params: LayoutParams = LayoutParams()) -> int:
    return 2 * params.qubits_per_row + 2


def min_execution_time(t_count: int, params: LayoutParams = LayoutParams()) -> int:
    return t_count * params.dist_t


REPORT_KEYS = ("n", "t_count", "mode", "capacity", "depth", "width", "height",
               "volume", "max_pool", "delays", "improvement")


@dataclass(frozen=True)
class ResourceReport:
    depth: int
    width: int
    height: int
    t_count: int
    mode: str  # "controlled" | "uncontrolled"
    capacity: int | None
    max_pool: int
    delays: int
    n: int | None = None
    improvement: float | None = None

    def __post_init__(self):
        if min(self.depth, self.width, self.height) < 0:
            raise ValueError("negative extent")
        if self.mode not in ("controlled", "uncontrolled"):
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def volume(self) -> int:
        return self.depth * self.width * self.height

    def as_dict(self) -> dict:
        d = asdict(self)
        d["volume"] = self.volume
        d["capacity"] = "unbounded" if self.capacity is None else self.capacity
        return {k: d[k] for k in REPORT_KEYS}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> ResourceReport:
        if set(d) != set(REPORT_KEYS):
            raise ValueError(f"report keys must be exactly {REPORT_KEYS}")
        cap = None if d["capacity"] == "unbounded" else int(d["capacity"])
        r = cls(d["depth"], d["width"], d["height"], d["t_count"], d["mode"], cap,
                d["max_pool"], d["delays"], d["n"], d["improvement"])
        if r.volume != d["volume"]:
            raise ValueError("volume does not match depth * width * height")
        return r


def improvement(baseline: ResourceReport, controlled: ResourceReport) -> float:
    if controlled.volume == 0:
        raise ZeroDivisionError("controlled layout has zero volume")
    return baseline.volume / controlled.volume
