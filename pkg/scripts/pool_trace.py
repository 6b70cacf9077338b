"""Pool occupancy traces for one adder, both control modes, written as CSV."""
import argparse
from pathlib import Path

from distillery.addergen import generate_adder
from distillery.distsim import SimConfig, empty_step, max_occupancy, peak_step, simulate
from distillery.scheduler import schedule_asap, serialize_t


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=128)
    ap.add_argument("--capacity", type=int, default=7)
    ap.add_argument("--out-dir", type=Path, default=Path("traces"))
    args = ap.parse_args()

    s = serialize_t(schedule_asap(generate_adder(args.n)))
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for label, cap in (("uncontrolled", None), ("controlled", args.capacity)):
        tr = simulate(s, SimConfig(capacity=cap))
        path = args.out_dir / f"adder{args.n}_{label}.csv"
        path.write_text(tr.to_csv())
        print(f"{label:>12}: max pool {max_occupancy(tr)} at step {peak_step(tr)}, "
              f"empty at {empty_step(tr)}, depth {tr.final_depth}, delays {tr.delays} -> {path}")


if __name__ == "__main__":
    main()
