"""Command-line front end: gen-adder, schedule, simulate, estimate, distribution."""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .addergen import AdderSpec, generate_adder
from .distsim import SimConfig, annotate, simulate
from .gatelist import GateListError, parse, serialize
from .layout import LayoutError, LayoutParams
from .pipeline import estimate
from .scheduler import parse_schedule, schedule_asap, serialize_schedule, serialize_t, t_distribution


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    input: Path | None
    adder: int | None
    capacity: int | None
    report: Path
    trace_dir: Path | None = None
    serialize: bool = True
    bare: bool = False

    def __post_init__(self):
        if (self.input is None) == (self.adder is None):
            raise UsageError("give exactly one of <in> or --adder")
        if self.input is not None and Path(self.input).resolve() == Path(self.report).resolve():
            raise UsageError("report path must differ from the input")


def capacity_arg(text: str) -> int | None:
    if text == "unbounded":
        return None
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"capacity must be a positive integer or 'unbounded', got {text!r}")
    if k < 1:
        raise argparse.ArgumentTypeError("capacity must be >= 1")
    return k


def write_all(files: dict[Path, str]):
    """Write every file or none: stage to temp files, then rename into place."""
    staged = []
    try:
        for path, text in files.items():
            path = Path(path)
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
            with os.fdopen(fd, "w") as fh:
                fh.write(text if text.endswith("\n") else text + "\n")
            staged.append((tmp, path))
    except BaseException:
        for tmp, _ in staged:
            os.unlink(tmp)
        raise
    for tmp, path in staged:
        os.replace(tmp, path)


def read(path) -> str:
    return Path(path).read_text()


def layout_params(args) -> LayoutParams:
    return LayoutParams.with_dist_t(
        args.dist_t,
        box_width=args.box_width,
        box_height=args.box_height,
        qubits_per_row=args.qubits_per_row,
        pool_capacity_default=7 if args.capacity is None else args.capacity,
    )


def cmd_gen_adder(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    write_all({args.out: serialize(generate_adder(AdderSpec(args.n)))})


def cmd_schedule(args):
    s = schedule_asap(parse(read(args.input)))
    if args.serialize_t:
        s = serialize_t(s)
    write_all({args.out: serialize_schedule(s)})


def cmd_simulate(args):
    s = parse_schedule(read(args.input))
    trace = simulate(s, SimConfig(capacity=args.capacity, dist_t=args.dist_t))
    out = {}
    if args.trace:
        out[args.trace] = trace.to_csv()
    if args.annotated:
        out[args.annotated] = annotate(s, trace)
    write_all(out)
    print(f"final_depth={trace.final_depth} delays={trace.delays} max_pool={max(trace.occupancy(), default=0)}")


def cmd_estimate(args):
    cfg = RunConfig(args.input, args.adder, args.capacity, args.report, args.trace_dir,
                    not args.no_serialize, args.bare)
    if cfg.adder is not None:
        gl = generate_adder(AdderSpec(cfg.adder))
    else:
        gl = parse(read(cfg.input))
    params = layout_params(args)
    est = estimate(gl, cfg.capacity, params, n=cfg.adder, serialize=cfg.serialize, bare=cfg.bare)
    out = {cfg.report: json.dumps(est.as_dict(), indent=2)}
    if cfg.trace_dir is not None:
        d = Path(cfg.trace_dir)
        out[d / "uncontrolled_trace.csv"] = est.uncontrolled_trace.to_csv()
        out[d / "controlled_trace.csv"] = est.controlled_trace.to_csv()
        out[d / "uncontrolled_events.csv"] = est.uncontrolled_trace.events_csv()
        out[d / "controlled_events.csv"] = est.controlled_trace.events_csv()
        out[d / "uncontrolled_annotated.txt"] = annotate(est.schedule, est.uncontrolled_trace)
        out[d / "controlled_annotated.txt"] = annotate(est.schedule, est.controlled_trace)
        out[d / "distribution.csv"] = t_distribution(est.schedule).to_csv()
    write_all(out)
    c = est.controlled
    print(f"t_count={c.t_count} depth={c.depth} width={est.uncontrolled.width}->{c.width} "
          f"height={c.height} improvement={est.improvement:.2f}")


def cmd_distribution(args):
    s = parse_schedule(read(args.input))
    write_all({args.out: t_distribution(s).to_csv()})


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="distillery", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-adder", help="write an n-bit adder gate list")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--out", type=Path, required=True)
    g.set_defaults(func=cmd_gen_adder)

    s = sub.add_parser("schedule", help="ASAP-schedule a gate list")
    s.add_argument("input", type=Path)
    s.add_argument("--serialize-t", action="store_true")
    s.add_argument("--out", type=Path, required=True)
    s.set_defaults(func=cmd_schedule)

    m = sub.add_parser("simulate", help="run the distillery/pool simulation on a schedule")
    m.add_argument("input", type=Path)
    m.add_argument("--capacity", type=capacity_arg, required=True)
    m.add_argument("--dist-t", type=int, default=3)
    m.add_argument("--trace", type=Path)
    m.add_argument("--annotated", type=Path)
    m.set_defaults(func=cmd_simulate)

    e = sub.add_parser("estimate", help="bounding-box report, controlled vs uncontrolled")
    e.add_argument("input", type=Path, nargs="?")
    e.add_argument("--adder", type=int)
    e.add_argument("--capacity", type=capacity_arg, default=7)
    e.add_argument("--report", type=Path, required=True)
    e.add_argument("--trace-dir", type=Path)
    e.add_argument("--bare", action="store_true", help="drop distillery and pool partitions for Clifford-only input")
    e.add_argument("--no-serialize", action="store_true", help="keep the ASAP schedule")
    e.add_argument("--dist-t", type=int, default=3)
    e.add_argument("--box-width", type=int, default=16)
    e.add_argument("--box-height", type=int, default=10)
    e.add_argument("--qubits-per-row", type=int, default=7)
    e.set_defaults(func=cmd_estimate)

    d = sub.add_parser("distribution", help="T-consuming gates per step, as CSV")
    d.add_argument("input", type=Path)
    d.add_argument("--out", type=Path, required=True)
    d.set_defaults(func=cmd_distribution)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except (GateListError, LayoutError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
