import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import from_nx, graphs, to_nx
from mimkit.catalog import complete_bipartite, cycle, graph, kmi, kmk, kmp, parse, path, subdivided_claw, sun
from mimkit.classes import (
    blocks,
    cut_vertices,
    in_class_N,
    in_class_S,
    is_bipartite,
    is_chordal,
    is_chordal_bipartite,
    is_cobipartite,
    is_linear_forest,
    is_split,
)
from mimkit.errors import ParameterError, ParseError
from mimkit.fileio import (
    read_edgelist,
    read_graph,
    read_graph6,
    read_meta,
    read_records,
    write_edgelist,
    write_graph6,
    write_meta,
    write_records,
)
from mimkit.generators import random_graph
from mimkit.graph import Graph, disjoint_union
from mimkit.iso import canonical_form, canonical_key, contains_induced, enumerate_graphs, find_induced, is_isomorphic


def iso(G, H):
    return nx.is_isomorphic(to_nx(G), to_nx(H))


# graph basics


@given(graphs())
def test_complement_is_involution(G):
    assert G.complement().complement() == G


@given(graphs())
def test_complement_edge_count(G):
    assert G.m + G.complement().m == G.n * (G.n - 1) // 2


@given(graphs(max_n=7))
def test_induced_matches_networkx(G):
    S = [v for v in range(G.n) if v % 2 == 0]
    H = G.induced(S)
    assert iso(H, from_nx(to_nx(G).subgraph(S)))


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(ParameterError):
        Graph(3, [(1, 1)])
    with pytest.raises(ParameterError):
        Graph(3, [(0, 3)])


def test_disjoint_union_shifts_labels():
    G = disjoint_union(path(2), path(3))
    assert G.n == 5 and sorted(G.edges()) == [(0, 1), (2, 3), (3, 4)]


# catalog


@pytest.mark.parametrize(
    "expr, n, m",
    [
        ("P4", 4, 3),
        ("C5", 5, 5),
        ("K5", 5, 10),
        ("K1,3", 4, 3),
        ("2P2", 4, 2),
        ("3P1+P2", 5, 1),
        ("co(P1+2P2)", 5, 8),
        ("S1,1,5", 8, 7),
        ("sun(3)", 6, 9),
        ("KmI(3)", 6, 6),
        ("KmK(4)", 8, 16),
        ("KmP(4)", 5, 7),
        ("bowtie", 5, 6),
        ("gem", 5, 7),
        ("hammer", 5, 5),
        ("net", 6, 6),
    ],
)
def test_catalog_sizes(expr, n, m):
    G = graph(expr)
    assert (G.n, G.m) == (n, m)


@pytest.mark.parametrize(
    "expr, reference",
    [
        ("P5", nx.path_graph(5)),
        ("C6", nx.cycle_graph(6)),
        ("K4", nx.complete_graph(4)),
        ("K2,3", nx.complete_bipartite_graph(2, 3)),
        ("co(C5)", nx.complement(nx.cycle_graph(5))),
        ("2P3", nx.disjoint_union(nx.path_graph(3), nx.path_graph(3))),
    ],
)
def test_catalog_against_networkx(expr, reference):
    assert iso(graph(expr), from_nx(reference))


def test_named_graph_structure():
    assert iso(graph("bowtie"), graph("co(C4+P1)"))
    assert iso(graph("diamond"), graph("co(2P1+P2)"))
    assert iso(graph("paw"), graph("co(P1+P3)"))
    assert iso(graph("net"), kmi(3))
    assert iso(graph("K1,3"), subdivided_claw(1, 1, 1))
    assert iso(kmp(2), path(3))
    assert iso(kmk(2), cycle(4))


def test_sun_degrees():
    G = sun(4)
    assert sorted(G.degrees()) == [2] * 4 + [5] * 4


@pytest.mark.parametrize("text", ["", "P", "P0", "C2", "K1,", "co(P4", "2", "sun(2)", "P4++P2", "Q3"])
def test_parse_errors(text):
    with pytest.raises((ParseError, ParameterError)):
        graph(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse("P4+X")
    assert err.value.position is not None


@pytest.mark.parametrize("expr", ["2P2+co(C4+P1)", "S1,2,3", "3P1+P2", "co(K1,3)"])
def test_realize_stable_up_to_isomorphism(expr):
    assert canonical_form(graph(expr)) == canonical_form(graph(str(parse(expr))))


# induced subgraphs and isomorphism


def naive_contains(G, H):
    for S in itertools.combinations(range(G.n), H.n):
        if iso(G.induced(S), H):
            return True
    return False


def test_contains_induced_exhaustive_small():
    patterns = [graph(e) for e in ("P3", "K3", "2P2", "P4", "C4", "K1,3", "paw", "diamond")]
    hosts = [G for n in range(1, 6) for G in enumerate_graphs(n)]
    for G in hosts:
        for H in patterns:
            assert contains_induced(G, H) == naive_contains(G, H)


@given(graphs(max_n=7), graphs(min_n=1, max_n=4))
def test_contains_induced_matches_vf2(G, H):
    expected = GraphMatcher(to_nx(G), to_nx(H)).subgraph_is_isomorphic()
    assert contains_induced(G, H) == expected


@given(graphs(max_n=8), graphs(min_n=1, max_n=4))
def test_find_induced_witness_is_induced_copy(G, H):
    hit = find_induced(G, H)
    if hit is not None:
        for i, j in itertools.combinations(range(H.n), 2):
            assert H.has_edge(i, j) == G.has_edge(hit[i], hit[j])


@given(graphs(max_n=8), st.integers(0, 10**6))
def test_canonical_key_invariant_under_relabelling(G, seed):
    perm = list(range(G.n))
    random.Random(seed).shuffle(perm)
    assert canonical_key(G) == canonical_key(G.relabel(perm))


REGULAR = [
    nx.petersen_graph(),
    nx.circular_ladder_graph(6),
    nx.complete_bipartite_graph(6, 6),
    nx.cycle_graph(12),
    nx.disjoint_union(nx.cycle_graph(6), nx.cycle_graph(6)),
    nx.random_regular_graph(3, 12, seed=1),
    nx.random_regular_graph(3, 12, seed=2),
    nx.random_regular_graph(4, 12, seed=3),
    nx.complete_graph(12),
    nx.empty_graph(12),
]


@pytest.mark.parametrize("i, j", [(i, j) for i in range(len(REGULAR)) for j in range(i, len(REGULAR))])
def test_canonical_key_on_regular_graphs(i, j):
    # colour refinement cannot split these, so the search has to branch
    G, H = from_nx(REGULAR[i]), from_nx(REGULAR[j])
    rng = random.Random(i * 31 + j)
    perm = list(range(H.n))
    rng.shuffle(perm)
    assert (canonical_key(G) == canonical_key(H.relabel(perm))) == nx.is_isomorphic(REGULAR[i], REGULAR[j])


@given(graphs(max_n=7), graphs(max_n=7))
def test_is_isomorphic_matches_networkx(G, H):
    assert is_isomorphic(G, H) == iso(G, H)


def _brute_counts(n):
    seen = []
    pairs = list(itertools.combinations(range(n), 2))
    buckets = {}
    for mask in range(1 << len(pairs)):
        H = nx.Graph()
        H.add_nodes_from(range(n))
        H.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        key = nx.weisfeiler_lehman_graph_hash(H)
        group = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(H, K) for K in group):
            group.append(H)
            seen.append(H)
    return len(seen)


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_counts_match_brute_force(n):
    assert len(enumerate_graphs(n)) == _brute_counts(n)


def test_enumerate_seven_vertices_count():
    # number of graphs on 7 unlabelled vertices
    assert len(enumerate_graphs(7)) == 1044


def test_enumerate_classes_are_distinct():
    for n in range(1, 6):
        keys = [canonical_key(G) for G in enumerate_graphs(n)]
        assert len(set(keys)) == len(keys)


def test_enumerate_limit():
    with pytest.raises(ParameterError):
        enumerate_graphs(8)


# class predicates


@given(graphs(max_n=9))
def test_blocks_match_networkx(G):
    H = to_nx(G)
    expected = {tuple(sorted(c)) for c in nx.biconnected_components(H)}
    expected |= {(v,) for v in H.nodes() if H.degree(v) == 0}
    assert set(blocks(G)) == expected
    assert set(cut_vertices(G)) == set(nx.articulation_points(H))


@given(graphs(max_n=9))
def test_bipartite_and_chordal_match_networkx(G):
    H = to_nx(G)
    assert is_bipartite(G) == nx.is_bipartite(H)
    assert is_chordal(G) == nx.is_chordal(H)
    assert is_cobipartite(G) == nx.is_bipartite(nx.complement(H))


def _has_long_induced_cycle(H, lo):
    for k in range(lo, H.number_of_nodes() + 1):
        for S in itertools.combinations(H.nodes(), k):
            sub = H.subgraph(S)
            if all(d == 2 for _, d in sub.degree()) and nx.is_connected(sub):
                return True
    return False


@given(graphs(max_n=8))
def test_chordal_bipartite_against_cycle_search(G):
    H = to_nx(G)
    expected = nx.is_bipartite(H) and not _has_long_induced_cycle(H, 6)
    assert is_chordal_bipartite(G) == expected


@given(graphs(max_n=8))
def test_split_against_definition(G):
    expected = any(
        G.is_clique(S) and G.is_independent([v for v in range(G.n) if v not in S])
        for k in range(G.n + 1)
        for S in itertools.combinations(range(G.n), k)
    )
    assert is_split(G) == expected


@given(graphs(max_n=9))
def test_linear_forest(G):
    H = to_nx(G)
    expected = G.n == 0 or (nx.is_forest(H) and max((d for _, d in H.degree()), default=0) <= 2)
    assert is_linear_forest(G) == expected


@given(graphs(max_n=9))
def test_class_S_necessary_conditions(G):
    if in_class_S(G):
        assert not contains_induced(G, graph("K3"))
        assert not contains_induced(G, graph("K1,4"))


def test_class_S_and_N_examples():
    assert in_class_S(graph("P5+S1,2,3"))
    assert not in_class_S(graph("C4"))
    assert not in_class_S(graph("S1,1,1+K1,4"))
    assert in_class_N(graph("C4"))
    assert in_class_N(graph("bowtie"))
    assert in_class_N(graph("2P1+C6"))
    assert not in_class_N(graph("paw"))
    assert not in_class_N(graph("P6"))


# file formats


@given(graphs(max_n=20))
def test_edgelist_roundtrip(G):
    assert read_edgelist(write_edgelist(G)) == G


def test_edgelist_is_sorted():
    G = Graph(4, [(3, 2), (1, 0), (2, 0)])
    assert write_edgelist(G) == "4 3\n0 1\n0 2\n2 3\n"


def test_graph6_bit_exact_with_networkx():
    rng = random.Random(3)
    for _ in range(200):
        G = random_graph(rng.randint(0, 70), rng.choice([0.1, 0.5, 0.9]), rng)
        assert write_graph6(G) == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
        assert read_graph6(write_graph6(G)) == G


def test_graph6_header_and_sniffing():
    G = graph("C5")
    assert read_graph(">>graph6<<" + write_graph6(G)) == G
    assert read_graph(write_edgelist(G)) == G


@pytest.mark.parametrize(
    "text",
    ["", "3", "3 1\n0 3\n", "3 2\n0 1\n", "3 1\n1 1\n", "2 1\n0 x\n", "3 2\n0 1\n0 1\n"],
)
def test_edgelist_malformed(text):
    with pytest.raises(ParseError):
        read_edgelist(text)


def test_records_roundtrip():
    pairs = [("a", 1), ("b", [1, 2, 3]), ("c", "x y")]
    assert read_records(write_records(pairs)) == [("a", "1"), ("b", "1 2 3"), ("c", "x y")]


def test_meta_roundtrip():
    G = Graph(3, [(0, 1)], {"partition": {"A": [0, 1], "B": [2]}, "coords": {0: (1, 2, "L")}, "family": "x"})
    meta = read_meta(write_meta(G))
    assert meta["partition"] == {"A": [0, 1], "B": [2]}
    assert meta["coords"] == {0: (1, 2, "L")}
    assert meta["family"] == "x"
