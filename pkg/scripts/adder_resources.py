"""Adder resource table: controlled vs uncontrolled bounding boxes."""
import argparse

from distillery.addergen import generate_adder
from distillery.pipeline import estimate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512])
    ap.add_argument("--capacity", type=int, default=7)
    args = ap.parse_args()

    print(f"{'n':>5} {'Tc':>6} {'d':>7} {'w_unc':>6} {'w_ctl':>6} {'h':>5} {'improv':>7} {'delays':>6}")
    for n in args.sizes:
        est = estimate(generate_adder(n), capacity=args.capacity, n=n)
        u, c = est.uncontrolled, est.controlled
        print(f"{n:>5} {c.t_count:>6} {c.depth:>7} {u.width:>6} {c.width:>6} {c.height:>5} "
              f"{est.improvement:>7.2f} {c.delays:>6}")


if __name__ == "__main__":
    main()
