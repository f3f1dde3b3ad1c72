"""Classify a few (H1, H2) pairs and summarise all pairs up to eight vertices."""

import sys
from collections import Counter

from mimkit.catalog import graph
from mimkit.classifier import classify_pair, pairs_up_to

PAIRS = [("P4", "K5"), ("2P2", "C4"), ("net", "2P2"), ("K1,3", "hammer"), ("C3", "P8")]


def main(max_n=8):
    for a, b in PAIRS:
        print(f"{a:>6} {b:<7}", classify_pair(graph(a), graph(b)).line())
    counts = Counter(classify_pair(a, b).verdict for a, b in pairs_up_to(max_n))
    print(f"pairs with at most {max_n} vertices in total:", dict(counts))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
