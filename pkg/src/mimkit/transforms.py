"""Width-aware graph rewrites.

Every transform returns a :class:`Rewrite` pairing the new graph with a
:class:`WidthEffect`, the proven bracket on how mim-width can move. The
effect is metadata only; no transform computes a width.

Vertex ids of the input are preserved wherever possible: new vertices are
appended, deleted ones compact the ids above them. Named partitions in
``meta["partition"]`` and coordinates in ``meta["coords"]`` follow the
relabelling.
"""

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .errors import ParameterError, ParseError
from .graph import Graph


class WidthEffect(NamedTuple):
    """Bracket on ``mimw(new)`` in terms of ``mimw(old)``.

    ``lower_add``/``upper_add`` are additive offsets, ``lower_factor`` a
    multiplicative lower bound; ``None`` means no bound of that kind.
    """

    source: str
    lower_add: int = None
    upper_add: int = None
    lower_factor: Fraction = None

    def bracket(self, old):
        """``(lo, hi)`` for the new width given the old one (``None`` = unbounded)."""
        lo = None
        if self.lower_add is not None:
            lo = old + self.lower_add
        if self.lower_factor is not None:
            f = old * self.lower_factor
            lo = f if lo is None else max(lo, f)
        hi = None if self.upper_add is None else old + self.upper_add
        return lo, hi

    def holds(self, old, new):
        lo, hi = self.bracket(old)
        return (lo is None or new >= lo) and (hi is None or new <= hi)

    def then(self, other):
        """Effect of applying ``self`` and then ``other``.

        Additive offsets add up. A factor survives when every step bounds the
        width below by a factor, a step with ``lower_add == 0`` counting as
        factor one.
        """
        def add(x, y):
            return None if x is None or y is None else x + y

        def factor(e):
            if e.lower_factor is not None:
                return e.lower_factor
            return Fraction(1) if e.lower_add == 0 else None

        f1, f2 = factor(self), factor(other)
        f = None if f1 is None or f2 is None else f1 * f2
        lo = add(self.lower_add, other.lower_add)
        if f == 1 and lo is not None:
            f = None
        return WidthEffect(f"{self.source};{other.source}", lo, add(self.upper_add, other.upper_add), f)


IDENTITY = WidthEffect("identity", 0, 0)


class Rewrite(NamedTuple):
    graph: Graph
    effect: WidthEffect


def _remap_meta(meta, mapping):
    """Carry partitions and coordinates through a vertex map (``None`` drops)."""
    out = {k: v for k, v in meta.items() if k not in ("partition", "coords", "coloring")}
    if "partition" in meta:
        out["partition"] = {
            name: sorted(mapping[v] for v in members if mapping.get(v) is not None)
            for name, members in meta["partition"].items()
        }
    if "coords" in meta:
        out["coords"] = {mapping[v]: c for v, c in meta["coords"].items() if mapping.get(v) is not None}
    return out


def _check_vertex(G, v):
    if not (isinstance(v, int) and 0 <= v < G.n):
        raise ParameterError(f"vertex {v!r} not in graph with {G.n} vertices")


def delete_vertex(G, v):
    """Remove ``v``; the width drops by at most one and never grows.

    Examples
    --------
    >>> from mimkit.catalog import complete
    >>> delete_vertex(complete(3), 0).graph.m
    1
    """
    _check_vertex(G, v)
    keep = [u for u in range(G.n) if u != v]
    H = G.induced(keep)
    mapping = {u: i for i, u in enumerate(keep)}
    return Rewrite(Graph.from_adjacency(H.adj, _remap_meta(G.meta, mapping)), WidthEffect("delete-vertex", -1, 0))


def _subdivide(adj, u, v, k):
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    prev = u
    new = []
    for _ in range(k):
        w = len(adj)
        adj.append(0)
        adj[prev] |= 1 << w
        adj[w] |= 1 << prev
        new.append(w)
        prev = w
    adj[prev] |= 1 << v
    adj[v] |= 1 << prev
    return new


def subdivide_edge(G, e, k=1):
    """Replace edge ``e`` by a path through ``k`` new vertices (ids ``n..n+k-1``)."""
    u, v = e
    _check_vertex(G, u)
    _check_vertex(G, v)
    if not G.has_edge(u, v):
        raise ParameterError(f"({u}, {v}) is not an edge")
    if k < 1:
        raise ParameterError("subdivision count must be at least 1")
    adj = list(G.adj)
    _subdivide(adj, u, v, k)
    meta = _remap_meta(G.meta, {w: w for w in range(G.n)})
    return Rewrite(Graph.from_adjacency(adj, meta), WidthEffect("subdivide-edge", 0, k))


def subdivide_all(G, k=1):
    """``k``-subdivide every edge, in sorted edge order.

    The result records ``partition["A"]`` (original vertices) and
    ``partition["B"]`` (subdivision vertices).
    """
    if k < 1:
        raise ParameterError("subdivision count must be at least 1")
    adj = list(G.adj)
    for u, v in G.edges():
        _subdivide(adj, u, v, k)
    meta = _remap_meta(G.meta, {w: w for w in range(G.n)})
    meta["partition"] = {"A": list(range(G.n)), "B": list(range(G.n, len(adj)))}
    return Rewrite(Graph.from_adjacency(adj, meta), WidthEffect("subdivide-all", 0, k * G.m if G.m else 0))


def clique_implant(G, v):
    """Replace ``v`` by a clique with one pendant edge per former neighbour.

    The clique vertex paired with the ``i``-th neighbour (ascending id) is
    ``v`` itself for ``i = 0`` and ``n + i - 1`` otherwise. A vertex of
    degree at most one is returned unchanged.

    Examples
    --------
    >>> from mimkit.catalog import complete_bipartite
    >>> clique_implant(complete_bipartite(1, 3), 0).graph.m
    6
    """
    _check_vertex(G, v)
    nbrs = G.neighbors(v)
    d = len(nbrs)
    effect = WidthEffect("clique-implant", 0, d)
    if d <= 1:
        return Rewrite(G, effect)
    adj = list(G.adj) + [0] * (d - 1)
    for u in nbrs:
        adj[u] &= ~(1 << v)
    adj[v] = 0
    slots = [v] + list(range(G.n, G.n + d - 1))
    for s, u in zip(slots, nbrs):
        adj[s] |= 1 << u
        adj[u] |= 1 << s
    for a, b in combinations(slots, 2):
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    meta = _remap_meta(G.meta, {w: w for w in range(G.n)})
    return Rewrite(Graph.from_adjacency(adj, meta), effect)


def make_clique(G, S):
    """Add every missing edge inside ``S``; the width grows by at most one."""
    S = sorted(set(S))
    for v in S:
        _check_vertex(G, v)
    add = [(a, b) for a, b in combinations(S, 2)]
    return Rewrite(G.with_edges(add=add), WidthEffect("make-clique", None, 1))


def cliqueify_partition(G, classes):
    """Turn each class of a partition of ``V(G)`` into a clique.

    If the classes are independent (so ``G`` is ``k``-partite with them),
    the new width is at least ``1/k`` of the old one. Classes that are not
    independent are accepted, but the effect then carries no bound.
    """
    classes = [sorted(set(c)) for c in classes]
    seen = [v for c in classes for v in c]
    if sorted(seen) != list(range(G.n)):
        raise ParameterError("classes must partition the vertex set")
    add = [e for c in classes for e in combinations(c, 2)]
    k = sum(1 for c in classes if c)
    if all(G.is_independent(c) for c in classes) and k:
        effect = WidthEffect("cliqueify-partition", lower_factor=Fraction(1, k))
    else:
        effect = WidthEffect("cliqueify-partition")
    return Rewrite(G.with_edges(add=add), effect)


# pipelines


def _vertex_set(G, text):
    text = text.strip()
    part = G.meta.get("partition", {})
    if text in part:
        return list(part[text])
    if text == "all":
        return list(range(G.n))
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"unknown vertex set {text!r} (known classes: {sorted(part)})")


def _int(text, what):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}")


def _step(G, name, arg):
    if name == "delete-vertex":
        return delete_vertex(G, _int(arg, "vertex"))
    if name == "subdivide-edge":
        parts = arg.split(":")
        u, v = (_int(x, "vertex") for x in parts[0].split("-"))
        k = _int(parts[1], "count") if len(parts) > 1 else 1
        return subdivide_edge(G, (u, v), k)
    if name == "subdivide-all":
        return subdivide_all(G, _int(arg, "count") if arg else 1)
    if name == "clique-implant":
        if arg == "deg3":
            return implant_all(G, 3)
        return clique_implant(G, _int(arg, "vertex"))
    if name == "make-clique":
        return make_clique(G, _vertex_set(G, arg))
    if name == "cliqueify":
        part = G.meta.get("partition", {})
        names = [x.strip() for x in arg.split(",")] if arg else sorted(part)
        chosen = [_vertex_set(G, x) for x in names]
        used = {v for c in chosen for v in c}
        chosen += [[v] for v in range(G.n) if v not in used]
        return cliqueify_partition(G, chosen)
    if name == "complement":
        return Rewrite(Graph.from_adjacency(G.complement().adj, G.meta), WidthEffect("complement"))
    raise ParseError(f"unknown transform {name!r}")


def implant_all(G, degree=3):
    """Clique implant on every vertex of the given degree, in ascending id order."""
    targets = [v for v in range(G.n) if G.degree(v) == degree]
    effect = WidthEffect("clique-implant", 0, 0)
    for v in targets:
        G, e = clique_implant(G, v)
        effect = effect.then(e)
    return Rewrite(G, effect)


def parse_pipeline(text):
    """Split ``"name:arg; name:arg"`` into ``[(name, arg), ...]``."""
    steps = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, arg = chunk.partition(":")
        steps.append((name.strip().lower(), arg.strip()))
    if not steps:
        raise ParseError("empty pipeline", 0)
    return steps


def apply_pipeline(G, text):
    """Apply a pipeline left to right; the effect is the composition of the steps.

    Steps: ``delete-vertex:v``, ``subdivide-edge:u-v[:k]``,
    ``subdivide-all[:k]``, ``clique-implant:v|deg3``, ``make-clique:S``,
    ``cliqueify[:C1,C2,...]`` and ``complement``. A set ``S`` is a class name
    from ``meta["partition"]``, ``all`` or a comma-separated vertex list.

    Examples
    --------
    >>> from mimkit.catalog import cycle
    >>> apply_pipeline(cycle(4), "subdivide-all:1; make-clique:A").graph.m
    14
    """
    effect = IDENTITY
    for name, arg in parse_pipeline(text):
        G, e = _step(G, name, arg)
        effect = effect.then(e)
    return Rewrite(G, effect)

