"""Build each unbounded-class witness on a 3 x 3 wall and check its class."""

from mimkit.generators import WITNESS_FORBIDDEN, verify_witness, witness


def main(k=3):
    for family in sorted(WITNESS_FORBIDDEN):
        G = witness(family, k)
        fails = verify_witness(G, family)
        print(f"{family:<12} n={G.n:<4} m={G.m:<5}", "ok" if not fails else fails[0])


if __name__ == "__main__":
    main()
