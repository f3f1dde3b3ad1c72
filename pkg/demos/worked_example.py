"""Exact mim-width of the six-vertex worked example, with two decompositions."""

from mimkit.decomposition import exact_mimw, from_tree, mimw_of_decomposition, solve_mimw
from mimkit.fileio import write_bdecomp
from mimkit.graph import Graph

EDGES = [(0, 1), (1, 2), (0, 3), (0, 5), (1, 4), (3, 4), (4, 5)]


def tree(a, b, c):
    edges = [(6, 7), (6, 8), (6, 9)] + [(7, x) for x in a] + [(8, x) for x in b] + [(9, x) for x in c]
    return from_tree(edges, list(range(6)))


def main():
    G = Graph(6, EDGES)
    print("drawn decomposition:", mimw_of_decomposition(G, tree([5, 2], [1, 0], [3, 4])))
    print("better decomposition:", mimw_of_decomposition(G, tree([5, 3], [4, 0], [2, 1])))
    print("exact mim-width:", exact_mimw(G))
    best = solve_mimw(G)
    print(f"optimal decomposition (width {best.width}):")
    print(write_bdecomp(best.decomposition), end="")


if __name__ == "__main__":
    main()
