import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import graphs, to_nx
from mimkit.catalog import graph, path
from mimkit.errors import ParameterError, SizeLimitError
from mimkit.generators import (
    OBSTRUCTION_CORES,
    WITNESS_FORBIDDEN,
    Coloring,
    WallSpec,
    construct_gdoubleprime,
    construct_gprime,
    core_is_uncolourable,
    coloring3_violations,
    coloring4_violations,
    grid,
    net_wall,
    netwall_coloring3,
    netwall_coloring4,
    padded_wall_spec,
    random_free_graph,
    verify_witness,
    wall,
    witness,
    witness_size,
)
from mimkit.iso import contains_induced


def induced_copies(G, H):
    """Vertex sets of induced copies of ``H`` in ``G``, via VF2."""
    seen = set()
    for m in GraphMatcher(to_nx(G), to_nx(H)).subgraph_isomorphisms_iter():
        seen.add(frozenset(m))
    return seen


def nx_contains(G, H):
    return GraphMatcher(to_nx(G), to_nx(H)).subgraph_is_isomorphic()


# grids and walls


@pytest.mark.parametrize("h, w", [(1, 1), (2, 3), (4, 4), (3, 7)])
def test_grid_matches_networkx(h, w):
    assert nx.is_isomorphic(to_nx(grid(h, w)), nx.grid_2d_graph(h, w))


@pytest.mark.parametrize("n", range(2, 9))
def test_square_wall_shape(n):
    W = wall(n, n)
    H = to_nx(W)
    assert W.n == 2 * n * n - 2
    degs = {d for _, d in H.degree()}
    assert degs == ({2} if n == 2 else {2, 3})
    assert nx.is_connected(H) and nx.is_bipartite(H) and nx.is_planar(H)


@pytest.mark.parametrize("h, r", [(2, 2), (3, 4), (5, 3)])
def test_wall_girth_six(h, r):
    assert nx.girth(to_nx(wall(h, r))) == 6


def test_wall_subdivisions():
    spec = padded_wall_spec(3, 3)
    W = wall(spec)
    base = wall(3, 3)
    extra = sum(spec.subdivisions.values())
    assert (W.n, W.m) == (base.n + extra, base.m + extra)
    with pytest.raises(ParameterError):
        wall(WallSpec(3, 3, {((1, 1), (3, 3)): 1}))
    with pytest.raises(ParameterError):
        wall(1, 4)


@pytest.mark.parametrize("h, r", [(2, 2), (3, 3), (4, 5)])
def test_net_wall_is_clique_implant(h, r):
    W = wall(h, r)
    N = net_wall(h, r)
    deg3 = sum(1 for v in range(W.n) if W.degree(v) == 3)
    assert N.n == W.n + 2 * deg3
    assert N.m == W.m + 3 * deg3
    H = to_nx(N)
    assert max(d for _, d in H.degree()) == (3 if deg3 else 2)
    # every triangle is an implanted vertex
    assert sum(nx.triangles(H).values()) // 3 == deg3


# colourings


def valid4_oracle(N, col):
    sq = nx.power(to_nx(N), 2)
    return all(col[u] != col[v] for u, v in sq.edges())


def valid3_oracle(N, col):
    if any(col[u] == col[v] for u, v in N.edges()):
        return False
    for S in induced_copies(N, path(5)):
        if len({col[v] for v in S}) < 3:
            return False
    for S in induced_copies(N, graph("bull")):
        cs = [col[v] for v in S]
        if max(cs.count(c) for c in cs) > 2:
            return False
    return True


@pytest.mark.parametrize("h, r", [(h, r) for h in range(2, 7) for r in range(2, 7)])
def test_padded_colourings_valid(h, r):
    N = net_wall(padded_wall_spec(h, r))
    c4 = netwall_coloring4(N)
    c3 = netwall_coloring3(N)
    assert c4.k == 4 and c3.k == 3
    assert coloring4_violations(N, c4) == [] and coloring3_violations(N, c3) == []
    assert valid4_oracle(N, c4.class_of)


@pytest.mark.parametrize("h, r", [(2, 2), (3, 3), (4, 4)])
def test_padded_colouring3_against_vf2(h, r):
    N = net_wall(padded_wall_spec(h, r))
    assert valid3_oracle(N, netwall_coloring3(N).class_of)


def test_violation_checkers_catch_defects():
    N = net_wall(padded_wall_spec(3, 3))
    good = list(netwall_coloring4(N).class_of)
    u, v = N.edges()[0]
    bad = list(good)
    bad[u] = bad[v]
    assert coloring4_violations(N, Coloring(tuple(bad), 4))
    assert not valid4_oracle(N, bad)
    good3 = netwall_coloring3(N).class_of
    two = tuple(c % 2 for c in good3)
    assert coloring3_violations(N, Coloring(two, 3))


@pytest.mark.parametrize("k, h, r", sorted(OBSTRUCTION_CORES))
def test_obstruction_cores(k, h, r):
    N = net_wall(h, r)
    core = OBSTRUCTION_CORES[(k, h, r)]
    assert core_is_uncolourable(N, k, core)
    build = netwall_coloring4 if k == 4 else netwall_coloring3
    with pytest.raises(ParameterError):
        build(N)


def test_obstruction_cores_are_tight_for_four():
    # dropping any vertex of a 4-core makes it colourable
    for (k, h, r), core in OBSTRUCTION_CORES.items():
        if k != 4:
            continue
        N = net_wall(h, r)
        for i in range(len(core)):
            assert not core_is_uncolourable(N, k, core[:i] + core[i + 1 :])


def test_smallest_elementary_wall_colourable():
    N = net_wall(2, 2)
    assert valid4_oracle(N, netwall_coloring4(N).class_of)
    assert valid3_oracle(N, netwall_coloring3(N).class_of)


def test_colouring_needs_coordinates():
    with pytest.raises(ParameterError):
        netwall_coloring4(path(5))


# gadgets


@given(graphs(min_n=1, max_n=6))
def test_gprime_shape(G):
    Gp = construct_gprime(G)
    n, m = G.n, G.m
    assert (Gp.n, Gp.m) == (2 * n + 4 * m, n * n + 6 * m)
    H = to_nx(Gp)
    assert nx.is_bipartite(H)
    part = Gp.meta["partition"]
    assert sorted(sum(part.values(), [])) == list(range(Gp.n))


@given(graphs(min_n=1, max_n=6))
def test_gdoubleprime_shape(G):
    Gpp = construct_gdoubleprime(G)
    n, m = G.n, G.m
    assert (Gpp.n, Gpp.m) == (2 * n + 2 * m, n * n + 4 * m)
    part = Gpp.meta["partition"]
    for name in "XYZ":
        assert Gpp.is_independent(part[name])


@settings(max_examples=25)
@given(graphs(min_n=1, max_n=4))
def test_gprime_chordal_bipartite_oracle(G):
    H = to_nx(construct_gprime(G))
    for k in range(6, H.number_of_nodes() + 1, 2):
        cyc = nx.cycle_graph(k)
        assert not GraphMatcher(H, cyc).subgraph_is_isomorphic()


@settings(max_examples=25)
@given(graphs(min_n=1, max_n=4))
def test_gadgets_avoid_their_forbidden_graphs(G):
    Gp = construct_gprime(G)
    Gpp = construct_gdoubleprime(G)
    for expr in ("P8", "P3+P6", "S1,1,5"):
        assert not nx_contains(Gp, graph(expr))
    for expr in ("K4", "diamond", "P6", "P2+P4"):
        assert not nx_contains(Gpp, graph(expr))


# witnesses


@pytest.mark.parametrize("family", sorted(WITNESS_FORBIDDEN))
@pytest.mark.parametrize("k", [2, 3])
def test_witnesses_verify(family, k):
    G = witness(family, k)
    assert G.n == witness_size(family, k)
    assert verify_witness(G, family) == []
    assert G.meta["family"] == family


@pytest.mark.parametrize("family", ["split_i", "split_ii", "diamond_p6", "diamond_5p1"])
def test_witnesses_against_vf2(family):
    G = witness(family, 2)
    for expr in WITNESS_FORBIDDEN[family]:
        assert not nx_contains(G, graph(expr))


def test_witness_budget_and_errors():
    with pytest.raises(SizeLimitError):
        witness("cb_p8", 6)
    assert witness("cb_p8", 4, budget=212).n == 212
    with pytest.raises(ParameterError):
        witness("nope", 2)
    with pytest.raises(ParameterError):
        witness("cobip", 1)


def test_cobip_witness_sides_are_cliques():
    G = witness("cobip", 2)
    part = G.meta["partition"]
    assert G.is_clique(part["L"]) and G.is_clique(part["R"])
    assert nx.is_bipartite(nx.complement(to_nx(G)))


# random members of hereditary classes


@settings(max_examples=30)
@given(st.integers(0, 10**6), st.integers(1, 10))
def test_random_free_graph_membership(seed, n):
    rng = random.Random(seed)
    for forbidden in (["net", "2P2"], ["P4"], ["K3", "C4"], ["3P1"]):
        if n >= 3 and "3P1" in forbidden:
            with pytest.raises(ParameterError):
                random_free_graph(n, forbidden, rng)
            continue
        G = random_free_graph(n, forbidden, rng)
        assert G.n == n
        for expr in forbidden:
            assert not nx_contains(G, graph(expr))


def test_random_free_graph_reaches_maximal_members():
    rng = random.Random(1)
    G = random_free_graph(8, ["P4"], rng, p=1.0)
    for u, v in itertools.combinations(range(8), 2):
        if not G.has_edge(u, v):
            assert contains_induced(G.with_edges(add=[(u, v)]), path(4))
