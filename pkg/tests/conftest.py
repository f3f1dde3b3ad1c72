import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mimkit.graph import Graph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# the worked example: v1..v6 are vertices 0..5
FIG2_EDGES = [(0, 1), (1, 2), (0, 3), (0, 5), (1, 4), (3, 4), (4, 5)]


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_nx(H):
    nodes = sorted(H.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(idx[u], idx[v]) for u, v in H.edges()])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, c in zip(pairs, chosen) if c])


def net_example():
    """Six-clique with a pendant at each vertex plus two adjacent vertices
    complete to the clique, each seeing one pendant: ``(2P2, K_{1,3})``-free
    and containing a net."""
    A, B, x3, x4 = range(6), range(6, 12), 12, 13
    edges = [(a, b) for a in A for b in A if a < b] + [(a, a + 6) for a in A]
    edges += [(x3, x4), (x3, 8), (x4, 9)] + [(x, a) for x in (x3, x4) for a in A]
    return Graph(14, edges)


ACCEPTANCE_LINES = {}


def record_criterion(number, ok, detail):
    """Store the one-line verdict of an acceptance criterion for the summary."""
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
