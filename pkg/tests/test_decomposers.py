import random

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import graphs, net_example, to_nx
from mimkit.catalog import cycle, graph, kmi, kmk, kmp, path
from mimkit.decomposers import (
    CutBound,
    certify_cut_bound,
    decompose_2p1p2_bowtie,
    decompose_2p2_k13,
    decompose_blocks,
    decompose_multijoin,
    kk_linear_order,
    multijoin_bound,
)
from mimkit.decomposition import arbitrary_decomposition, cutmim, exact_mimw, mimw_of_decomposition
from mimkit.errors import ClassViolationError, ParameterError, PreconditionError, SizeLimitError
from mimkit.generators import random_free_graph
from mimkit.graph import Graph, disjoint_union
from mimkit.iso import contains_induced, enumerate_graphs
from mimkit.ramsey import evaluate_bound, ramsey_upper


def free_of(G, exprs):
    return not any(contains_induced(G, graph(e)) for e in exprs)


def check(G, cert):
    cert.decomposition.validate(G)
    assert cert.width == mimw_of_decomposition(G, cert.decomposition)
    assert cert.width <= cert.bound_value


# blocks


@given(graphs(min_n=1, max_n=9))
def test_blocks_width_is_max_block_width(G):
    cert = decompose_blocks(G)
    check(G, cert)
    H = to_nx(G)
    block_widths = [exact_mimw(G.induced(sorted(b))) for b in nx.biconnected_components(H)]
    assert cert.width == max(block_widths, default=0)
    assert cert.width == exact_mimw(G)


def test_blocks_on_large_tree_of_cycles():
    # cycles of length 6 glued in a chain at single vertices: 31 vertices, width 2
    edges, start = [], 0
    for _ in range(6):
        cyc = list(range(start, start + 6))
        edges += list(zip(cyc, cyc[1:] + cyc[:1]))
        start += 5
    G = Graph(start + 1, edges)
    cert = decompose_blocks(G)
    check(G, cert)
    assert cert.width == 2 and cert.claimed_bound == 2


def test_blocks_custom_decomposer_is_used():
    G = graph("bowtie")
    cert = decompose_blocks(G, per_block_decomposer=arbitrary_decomposition)
    check(G, cert)


# multi-join


def test_multijoin_bound_formula():
    assert multijoin_bound(2, 1, 1) == 2
    assert multijoin_bound(4, 2, 0) == 8
    assert multijoin_bound(3, 1, 5) == 7


@given(graphs(min_n=2, max_n=10), st.integers(0, 10**6), st.integers(2, 4))
def test_multijoin_certificate(G, seed, p):
    assume(G.n >= p)
    rng = random.Random(seed)
    order = list(range(G.n))
    rng.shuffle(order)
    cuts = sorted(rng.sample(range(1, G.n), p - 1))
    parts = [order[a:b] for a, b in zip([0] + cuts, cuts + [G.n])]
    cert = decompose_multijoin(G, parts)
    check(G, cert)
    assert cert.width >= exact_mimw(G)


def test_multijoin_complete_multipartite():
    G = graph("co(3P2+P3)")
    parts = [[0, 1], [2, 3], [4, 5], [6, 7, 8]]
    cert = decompose_multijoin(G, parts)
    check(G, cert)
    assert cert.bound_value == multijoin_bound(4, 1, 0)


def test_multijoin_preconditions():
    G = cycle(6)
    with pytest.raises(PreconditionError):
        decompose_multijoin(G, [[0, 1, 2, 3, 4, 5]])
    with pytest.raises(PreconditionError):
        decompose_multijoin(G, [[0, 1], [2, 3]])
    with pytest.raises(PreconditionError) as err:
        decompose_multijoin(G, [[0, 2, 4], [1, 3, 5]], c=1)
    assert err.value.detail == (0, 1)


# (2P2, K1,3)-free graphs


def test_net_example_width_one():
    G = net_example()
    assert free_of(G, ["2P2", "K1,3"]) and contains_induced(G, graph("net"))
    cert = decompose_2p2_k13(G)
    check(G, cert)
    assert cert.width == 1 and cert.provenance == "2p2-k13:net"


def test_2p2_k13_exhaustive_small():
    for n in range(1, 8):
        for G in enumerate_graphs(n):
            if not free_of(G, ["2P2", "K1,3"]):
                continue
            cert = decompose_2p2_k13(G)
            check(G, cert)
            if contains_induced(G, graph("net")):
                assert cert.width == 1
            assert cert.width >= exact_mimw(G)


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.integers(6, 16))
def test_2p2_k13_random(seed, n):
    G = random_free_graph(n, ["2P2", "K1,3"], random.Random(seed), p=0.9)
    cert = decompose_2p2_k13(G)
    check(G, cert)


def test_2p2_k13_rejects_outside_class():
    with pytest.raises(ClassViolationError) as err:
        decompose_2p2_k13(graph("K1,3"))
    assert err.value.forbidden == "K1,3" and len(err.value.witness) == 4
    with pytest.raises(ClassViolationError):
        decompose_2p2_k13(graph("2P2"))


def test_2p2_k13_disconnected_input():
    # only edgeless components can sit next to a component with an edge
    G = disjoint_union(net_example(), Graph(2))
    assert free_of(G, ["2P2", "K1,3"])
    cert = decompose_2p2_k13(G)
    check(G, cert)
    assert cert.width == 1


# (2P1+P2, bowtie)-free graphs


@pytest.mark.parametrize("r", [5, 6, 7])
def test_kk_width_two(r):
    G = kmk(r)
    cert = decompose_2p1p2_bowtie(G)
    check(G, cert)
    assert cert.width == 2 and cert.provenance == "2p1p2-bowtie:kk"


def test_kk_linear_order_interleaves():
    G = kmk(3)
    assert kk_linear_order(G, [0, 1, 2], [3, 4, 5]) == [0, 3, 1, 4, 2, 5]


def test_bowtie_exhaustive_small():
    for n in range(1, 8):
        for G in enumerate_graphs(n):
            if free_of(G, ["2P1+P2", "bowtie"]):
                cert = decompose_2p1p2_bowtie(G)
                check(G, cert)


@settings(max_examples=30)
@given(st.integers(0, 10**6), st.integers(8, 14))
def test_bowtie_random(seed, n):
    G = random_free_graph(n, ["2P1+P2", "bowtie"], random.Random(seed), p=0.95)
    check(G, decompose_2p1p2_bowtie(G))


def test_bowtie_rejects_outside_class():
    with pytest.raises(ClassViolationError):
        decompose_2p1p2_bowtie(graph("bowtie"))


# exhaustive cut bounds


@pytest.mark.parametrize(
    "bound, forbidden, value",
    [
        (CutBound("kmi", 3), ("KmI(3)", "2P2"), 6),
        (CutBound("kmi", 8), ("KmI(8)", "2P2"), 8),
        (CutBound("kmp", 3, 2), ("KmP(3)", "2P2"), 6),
        (CutBound("kmk", 3, 1), ("KmK(3)", "1P1+P2"), 3),
    ],
)
def test_cut_bound_metadata(bound, forbidden, value):
    assert bound.forbidden() == forbidden
    assert bound.value() == value


@pytest.mark.parametrize(
    "bound",
    [CutBound("kmi", 3), CutBound("kmp", 3, 2), CutBound("kmk", 3, 1)],
)
def test_certify_cut_bound_random_members(bound):
    rng = random.Random(7)
    for _ in range(8):
        G = random_free_graph(rng.randint(4, 12), list(bound.forbidden()), rng)
        rep = certify_cut_bound(G, bound)
        assert rep.ok and rep.subsets == 1 << G.n
        assert rep.max_cutmim < rep.strict_bound
        assert cutmim(G, [v for v in range(G.n) if rep.argmax >> v & 1]) == rep.max_cutmim


def test_certify_cut_bound_errors():
    with pytest.raises(ClassViolationError):
        certify_cut_bound(graph("2P2"), CutBound("kmi", 3))
    with pytest.raises(SizeLimitError):
        certify_cut_bound(path(17), CutBound("kmi", 3))
    with pytest.raises(PreconditionError):
        CutBound("zzz", 3).forbidden()


def test_named_family_graphs_in_their_classes():
    assert contains_induced(kmi(4), graph("net"))
    assert not contains_induced(kmp(4), graph("2P2"))


# Ramsey numbers


KNOWN_RAMSEY = {(3, 3): 6, (3, 4): 9, (3, 5): 14, (4, 4): 18, (3, 6): 18, (3, 7): 23, (4, 5): 25}


@pytest.mark.parametrize("a, b", sorted(KNOWN_RAMSEY))
def test_ramsey_upper_at_least_true_value(a, b):
    assert ramsey_upper(a, b) >= KNOWN_RAMSEY[(a, b)]
    assert ramsey_upper(a, b) == ramsey_upper(b, a)


def test_ramsey_exact_small_values():
    assert [ramsey_upper(3, b) for b in range(1, 6)] == [1, 3, 6, 9, 14]
    assert ramsey_upper(4, 4) == 18
    assert ramsey_upper(2, 9) == 9


def test_ramsey_bound_is_sound_on_small_graphs():
    # every graph on R(3,3) vertices has a triangle or an independent triple
    for G in enumerate_graphs(6):
        assert contains_induced(G, graph("K3")) or contains_induced(G, graph("3P1"))
    assert not contains_induced(cycle(5), graph("K3")) and not contains_induced(cycle(5), graph("3P1"))


@pytest.mark.parametrize(
    "expr, env, value",
    [
        ("max{6,r}", {"r": 4}, 6),
        ("max{6,r}", {"r": 9}, 9),
        ("max{6,r}-1", {"r": 3}, 5),
        ("R(14,3)-1", {}, ramsey_upper(14, 3) - 1),
        ("R(r,R(r,t))", {"r": 3, "t": 2}, 6),
        ("R(r,R(r,t))", {"r": 4, "t": 3}, ramsey_upper(4, ramsey_upper(4, 3))),
        ("R(R(r,s+1),s+1)", {"r": 3, "s": 1}, 3),
        ("R(R(r,s+1),s+1)", {"r": 3, "s": 2}, ramsey_upper(6, 3)),
        ("2*r+1", {"r": 4}, 9),
        (7, {}, 7),
    ],
)
def test_evaluate_bound(expr, env, value):
    assert evaluate_bound(expr, **env) == value


@pytest.mark.parametrize("expr", ["R(", "r", "r/2", "foo(1)", "R(0,2)"])
def test_evaluate_bound_errors(expr):
    with pytest.raises(ParameterError):
        evaluate_bound(expr)
