"""Final depth and delays as the pool capacity shrinks, for ASAP and serialized schedules."""
import argparse

from distillery.addergen import generate_adder
from distillery.distsim import SimConfig, simulate
from distillery.scheduler import schedule_asap, serialize_t


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=64)
    ap.add_argument("--dist-t", type=int, nargs="+", default=[3, 4, 5])
    args = ap.parse_args()

    asap = schedule_asap(generate_adder(args.n))
    variants = {"asap": asap, "serial": serialize_t(asap)}
    print("dist_t capacity schedule depth delays")
    for dt in args.dist_t:
        for cap in (1, 2, 3, 7, None):
            for name, s in variants.items():
                tr = simulate(s, SimConfig(capacity=cap, dist_t=dt))
                print(f"{dt:>6} {str(cap or 'inf'):>8} {name:>8} {tr.final_depth:>5} {tr.delays:>6}")


if __name__ == "__main__":
    main()
