"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one Python int per vertex, bit ``u`` of ``adj[v]``
set iff ``uv`` is an edge. Every search routine in the package works on
these bitmasks directly.
"""

from itertools import combinations

from .errors import ParameterError


def bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count("1")


def to_mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph.

    Parameters
    ----------
    n : int
        Number of vertices, labelled ``0..n-1``.
    edges : iterable of pairs, optional
        Edges ``(u, v)`` with ``u != v``. Duplicates are ignored.
    meta : dict, optional
        Free-form metadata (coordinates, named partitions). It travels with
        the graph but does not take part in equality.

    Examples
    --------
    >>> G = Graph(3, [(0, 1), (1, 2)])
    >>> G.m, G.degree(1)
    (2, 2)
    """

    __slots__ = ("n", "adj", "meta", "_hash")

    def __init__(self, n, edges=(), meta=None):
        if n < 0:
            raise ParameterError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.meta = dict(meta) if meta else {}
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj, meta=None):
        """Build from a sequence of neighbourhood bitmasks (trusted input)."""
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g.meta = dict(meta) if meta else {}
        g._hash = None
        return g

    # basic queries

    @property
    def m(self):
        return sum(popcount(a) for a in self.adj) // 2

    @property
    def all_mask(self):
        return (1 << self.n) - 1

    def vertices(self):
        return range(self.n)

    def edges(self):
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return list(bits(self.adj[v]))

    def degree(self, v):
        return popcount(self.adj[v])

    def degrees(self):
        return [popcount(a) for a in self.adj]

    def max_degree(self):
        return max(self.degrees(), default=0)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __add__(self, other):
        return disjoint_union(self, other)

    # derived graphs

    def induced(self, vertices):
        """Induced subgraph on ``vertices``, relabelled in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        if len(pos) != len(vs):
            raise ParameterError("repeated vertex in induced()")
        adj = []
        for v in vs:
            a = 0
            for u in bits(self.adj[v]):
                i = pos.get(u)
                if i is not None:
                    a |= 1 << i
            adj.append(a)
        return Graph.from_adjacency(adj)

    def induced_mask(self, mask):
        return self.induced(bits(mask))

    def delete_vertices(self, vertices):
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def complement(self):
        full = self.all_mask
        return Graph.from_adjacency([(full ^ a) & ~(1 << v) for v, a in enumerate(self.adj)])

    def relabel(self, perm):
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        adj = [0] * self.n
        for v in range(self.n):
            a = 0
            for u in bits(self.adj[v]):
                a |= 1 << perm[u]
            adj[perm[v]] = a
        return Graph.from_adjacency(adj)

    def with_edges(self, add=(), remove=()):
        adj = list(self.adj)
        for u, v in remove:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        for u, v in add:
            if u == v:
                raise ParameterError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph.from_adjacency(adj, self.meta)

    def with_meta(self, **items):
        meta = dict(self.meta)
        meta.update(items)
        return Graph.from_adjacency(self.adj, meta)

    # structure

    def components(self):
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(bits(comp)))
        return out

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def neighborhood_mask(self, mask):
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def is_clique(self, vertices):
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_independent(self, vertices):
        vs = list(vertices)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))


def disjoint_union(*graphs):
    """Disjoint union, vertices of later graphs shifted after earlier ones."""
    adj = []
    off = 0
    for g in graphs:
        adj.extend(a << off for a in g.adj)
        off += g.n
    return Graph.from_adjacency(adj)


def empty_graph(n):
    return Graph(n)
