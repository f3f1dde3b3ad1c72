"""Graph families: grids, walls, net-walls, their colourings, the G' and G''
gadgets and the witness graphs of the unbounded classes.

Wall vertices carry ``(row, column)`` coordinates in ``meta["coords"]``
(1-based, rows top to bottom). Net-wall vertices carry ``(row, column,
slot)`` where ``slot`` is the direction of the former neighbour a triangle
vertex points to (``L``, ``R``, ``U``, ``D``) or ``S`` for a wall vertex of
degree two that was kept as is.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .catalog import graph as named_graph
from .catalog import path
from .classes import bipartition, is_cobipartite, is_chordal_bipartite, is_split
from .errors import ParameterError, SizeLimitError
from .graph import Graph, bits
from .iso import find_induced, iter_induced
from .transforms import cliqueify_partition, subdivide_all


@dataclass(frozen=True)
class WallSpec:
    """Elementary ``h x r`` wall, optionally with per-edge subdivision counts.

    ``subdivisions`` maps a wall edge, given by its two coordinate pairs in
    either order, to the number of vertices inserted on it.
    """

    h: int
    r: int
    subdivisions: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.h < 2 or self.r < 2:
            raise ParameterError("walls need h >= 2 and r >= 2")


def grid(h, w):
    """``h x w`` grid with ``(row, column)`` coordinates, row-major ids."""
    if h < 1 or w < 1:
        raise ParameterError("grid needs h, w >= 1")
    vid = lambda i, j: (i - 1) * w + (j - 1)
    edges = []
    for i in range(1, h + 1):
        for j in range(1, w + 1):
            if j < w:
                edges.append((vid(i, j), vid(i, j + 1)))
            if i < h:
                edges.append((vid(i, j), vid(i + 1, j)))
    coords = {vid(i, j): (i, j) for i in range(1, h + 1) for j in range(1, w + 1)}
    return Graph(h * w, edges, {"coords": coords})


def _elementary_wall(h, r):
    w = 2 * r
    alive = {(i, j) for i in range(1, h + 1) for j in range(1, w + 1)}
    edges = set()
    for i in range(1, h + 1):
        for j in range(1, w):
            edges.add(((i, j), (i, j + 1)))
    for j in range(1, w + 1):
        for i in range(1, h):
            # odd columns lose even-indexed rungs, even columns the odd ones
            if (i - j) % 2 == 0:
                edges.add(((i, j), (i + 1, j)))
    deg = {p: 0 for p in alive}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    alive = {p for p in alive if deg[p] != 1}
    edges = {(a, b) for a, b in edges if a in alive and b in alive}
    return alive, edges


def wall(spec, r=None):
    """Elementary (or subdivided) wall.

    ``wall(WallSpec(h, r))`` or ``wall(h, r)``. Subdivision vertices get
    coordinates ``("sub", a, b, k)`` and are listed after the wall vertices.

    Examples
    --------
    >>> wall(4, 4).n
    30
    """
    if not isinstance(spec, WallSpec):
        spec = WallSpec(spec, r)
    alive, edges = _elementary_wall(spec.h, spec.r)
    pts = sorted(alive)
    vid = {p: k for k, p in enumerate(pts)}
    coords = {k: p for k, p in enumerate(pts)}
    out_edges = []
    nxt = len(pts)
    subs = {}
    for (a, b), k in spec.subdivisions.items():
        key = (min(a, b), max(a, b))
        subs[key] = k
    for a, b in sorted(edges):
        k = subs.pop((a, b), 0)
        if k < 0:
            raise ParameterError("subdivision counts must be non-negative")
        prev = vid[a]
        for t in range(k):
            coords[nxt] = ("sub", a, b, t + 1)
            out_edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        out_edges.append((prev, vid[b]))
    if subs:
        raise ParameterError(f"subdivision given for non-edges {sorted(subs)}")
    return Graph(nxt, out_edges, {"coords": coords, "wall": (spec.h, spec.r)})


def _direction(p, q):
    (i, j), (k, l) = p, q
    if k == i:
        return "L" if l < j else "R"
    return "U" if k < i else "D"


def padded_wall_spec(h, r, k=2):
    """Wall spec with every edge at a degree-2 vertex of the elementary wall ``k``-subdivided.

    The boundary of an elementary wall admits neither of the periodic
    colourings below (from ``h >= 4`` or ``r >= 4`` on); with ``k = 2`` both
    extend to the whole wall.
    """
    alive, edges = _elementary_wall(h, r)
    deg = {p: 0 for p in alive}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    subs = {(a, b): k for a, b in edges if deg[a] == 2 or deg[b] == 2}
    return WallSpec(h, r, subs)


def net_wall(spec, r=None):
    """Clique implant on every degree-3 vertex of a wall.

    Each triangle vertex is joined to the former neighbour it points to;
    the vertices of a triangle are listed in ascending order of that
    neighbour's id. Coordinates: ``(row, col, slot)`` for wall vertices,
    ``(row1, col1, row2, col2, t)`` for the ``t``-th subdivision vertex of
    the wall edge between the two positions.
    """
    if not isinstance(spec, WallSpec):
        spec = WallSpec(spec, r)
    W = wall(spec)
    pos = W.meta["coords"]

    def toward(v, u):
        p, q = pos[v], pos[u]
        if q[0] == "sub":
            q = q[2] if q[1] == p else q[1]
        return _direction(p, q)

    slot_of = {}
    coords = {}
    nxt = 0
    for v in range(W.n):
        if pos[v][0] == "sub":
            _, a, b, t = pos[v]
            for u in W.neighbors(v):
                slot_of[(v, u)] = nxt
            coords[nxt] = a + b + (t,)
            nxt += 1
        elif W.degree(v) == 3:
            for u in W.neighbors(v):
                slot_of[(v, u)] = nxt
                coords[nxt] = pos[v] + (toward(v, u),)
                nxt += 1
        else:
            for u in W.neighbors(v):
                slot_of[(v, u)] = nxt
            coords[nxt] = pos[v] + ("S",)
            nxt += 1
    edges = []
    for v in range(W.n):
        if W.degree(v) == 3:
            edges += combinations([slot_of[(v, u)] for u in W.neighbors(v)], 2)
    for u, v in W.edges():
        edges.append((slot_of[(u, v)], slot_of[(v, u)]))
    return Graph(nxt, edges, {"coords": coords, "wall": (spec.h, spec.r)})


# colourings


@dataclass(frozen=True)
class Coloring:
    """A vertex colouring with ``k`` declared classes, ``class_of[v]`` in ``0..k-1``."""

    class_of: tuple
    k: int

    def __post_init__(self):
        if any(not 0 <= c < self.k for c in self.class_of):
            raise ParameterError("colour index out of range")

    def classes(self):
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.class_of):
            out[c].append(v)
        return out


# Interior colours of the 4-colouring, keyed by (row mod 4, column mod 4) of
# the implanted wall vertex; characters give the slots L, R, U, D ("." where
# the triangle has no such slot). The pattern repeats along (2, 2).
_FOUR = {
    (0, 0): "10.3", (0, 1): "231.", (0, 2): "01.2", (0, 3): "320.",
    (1, 0): "102.", (1, 1): "32.1", (1, 2): "013.", (1, 3): "23.0",
    (2, 0): "01.2", (2, 1): "320.", (2, 2): "10.3", (2, 3): "231.",
    (3, 0): "013.", (3, 1): "23.0", (3, 2): "102.", (3, 3): "32.1",
}


def _interior4(i, j, slot):
    return int(_FOUR[(i % 4, j % 4)]["LRUD".index(slot)])


def _interior3(i, j, slot):
    # L is colour 2; the vertical slot is 1 pointing down and 0 pointing up;
    # R takes the remaining colour
    if slot == "L":
        return 2
    down = (i - j) % 2 == 0
    if slot in "UD":
        return 1 if down else 0
    return 0 if down else 1


def _require_coords(W):
    coords = W.meta.get("coords")
    if coords is None or len(coords) != W.n:
        raise ParameterError("net-wall colouring needs the coordinate metadata from net_wall()")
    return coords


def _distance2_conflicts(W):
    conf = [0] * W.n
    for v in range(W.n):
        conf[v] |= W.adj[v]
        for a, b in combinations(W.neighbors(v), 2):
            conf[a] |= 1 << b
            conf[b] |= 1 << a
    return conf


def _complete(W, col, k, conf, groups):
    """Extend the partial colouring ``col`` (``-1`` = free) by backtracking.

    Free vertices are visited in BFS order of the constraint graph so that
    every choice is checked against its neighbourhood early. ``groups[v]``
    lists ``(kind, S)`` with kind ``"p5"`` (S must use all ``k`` colours) or
    ``"bull"`` (no colour three times in S).
    """
    free = [v for v in range(W.n) if col[v] < 0]
    free_set = set(free)
    order, seen = [], set()
    for s in free:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for v in queue:
            order.append(v)
            near = set(bits(conf[v]))
            for _, S in groups[v]:
                near.update(S)
            for u in sorted(near):
                if u in free_set and u not in seen:
                    seen.add(u)
                    queue.append(u)

    def ok(v):
        c = col[v]
        if any(col[u] == c for u in bits(conf[v])):
            return False
        for kind, S in groups[v]:
            cs = [col[u] for u in S]
            if kind == "p5":
                if -1 not in cs and len(set(cs)) < k:
                    return False
            elif cs.count(c) > 2:
                return False
        return True

    i = 0
    nxt = [0] * len(order)
    while 0 <= i < len(order):
        v = order[i]
        placed = False
        while nxt[i] < k:
            col[v] = nxt[i]
            nxt[i] += 1
            if ok(v):
                placed = True
                break
        if placed:
            i += 1
        else:
            col[v] = -1
            nxt[i] = 0
            i -= 1
    return i == len(order)


def _fixed_part(W, interior):
    col = [-1] * W.n
    for v, c in _require_coords(W).items():
        if len(c) == 3 and c[2] != "S":
            col[v] = interior(*c)
    return col


def netwall_coloring4(W):
    """Four colour classes, each independent and without common neighbours.

    Triangle vertices follow a periodic table in the wall coordinates;
    the remaining vertices (degree-2 wall vertices and subdivision
    vertices) are filled in by an exact search. Elementary net-walls with
    ``h >= 4`` have no such colouring at all; use
    ``net_wall(padded_wall_spec(h, r))``.

    Raises
    ------
    ParameterError
        Missing coordinates, or no extension of the periodic part exists.
    """
    col = _fixed_part(W, _interior4)
    conf = _distance2_conflicts(W)
    if not _complete(W, col, 4, conf, [[] for _ in range(W.n)]):
        raise ParameterError("the periodic 4-colouring does not extend to this net-wall; pad it with padded_wall_spec")
    out = Coloring(tuple(col), 4)
    bad = coloring4_violations(W, out)
    if bad:
        raise AssertionError(f"4-colouring self-check failed: {bad[:3]}")
    return out


def netwall_coloring3(W):
    """Three colour classes: independent, no bichromatic induced ``P5``, bulls meet each class at most twice.

    Same scheme as :func:`netwall_coloring4`; elementary net-walls with
    ``r >= 4`` have no such colouring.
    """
    col = _fixed_part(W, _interior3)
    conf = [W.adj[v] for v in range(W.n)]
    groups = [[] for _ in range(W.n)]
    for kind, H in (("p5", path(5)), ("bull", named_graph("bull"))):
        for S in iter_induced(W, H):
            for v in S:
                groups[v].append((kind, S))
    if not _complete(W, col, 3, conf, groups):
        raise ParameterError("the periodic 3-colouring does not extend to this net-wall; pad it with padded_wall_spec")
    out = Coloring(tuple(col), 3)
    bad = coloring3_violations(W, out)
    if bad:
        raise AssertionError(f"3-colouring self-check failed: {bad[:3]}")
    return out


def coloring4_violations(W, coloring):
    """Pairs in one class that are adjacent or share a neighbour."""
    col = coloring.class_of
    bad = [("edge", u, v) for u, v in W.edges() if col[u] == col[v]]
    for w in range(W.n):
        for a, b in combinations(W.neighbors(w), 2):
            if col[a] == col[b]:
                bad.append(("common-neighbour", a, b, w))
    return bad


def coloring3_violations(W, coloring):
    """Monochromatic edges, bichromatic induced ``P5``s and bulls with three vertices in a class."""
    col = coloring.class_of
    bad = [("edge", u, v) for u, v in W.edges() if col[u] == col[v]]
    for S in iter_induced(W, path(5)):
        if len({col[v] for v in S}) <= 2:
            bad.append(("p5", S))
    for S in iter_induced(W, named_graph("bull")):
        cs = [col[v] for v in S]
        if max(cs.count(c) for c in set(cs)) > 2:
            bad.append(("bull", S))
    return bad


# obstruction cores: vertex sets of elementary net-walls on which the
# colouring constraints alone are unsatisfiable (found with a SAT solver,
# re-checked here by exhaustive search)

OBSTRUCTION_CORES = {
    (4, 4, 4): (
        (2, 4, "R"), (2, 4, "D"), (2, 5, "U"), (2, 5, "L"), (2, 5, "R"), (2, 6, "L"), (2, 6, "R"), (2, 6, "D"),
        (2, 7, "U"), (2, 7, "L"), (2, 7, "R"), (2, 8, "S"), (3, 4, "U"), (3, 4, "L"), (3, 4, "R"), (3, 5, "L"),
        (3, 5, "R"), (3, 5, "D"), (3, 6, "U"), (3, 6, "L"), (3, 6, "R"), (3, 7, "L"), (3, 7, "R"), (3, 7, "D"),
        (3, 8, "S"), (4, 5, "U"), (4, 5, "L"), (4, 5, "R"), (4, 6, "S"), (4, 7, "S"),
    ),
    (4, 5, 5): (
        (3, 5, "L"), (3, 5, "R"), (3, 5, "D"), (3, 6, "L"), (3, 6, "R"), (3, 7, "L"), (3, 7, "R"), (3, 7, "D"),
        (4, 4, "D"), (4, 5, "U"), (4, 5, "L"), (4, 5, "R"), (4, 6, "L"), (4, 6, "D"), (4, 7, "U"), (4, 7, "L"),
        (4, 7, "R"), (4, 8, "L"), (4, 8, "D"), (5, 4, "U"), (5, 4, "L"), (5, 4, "R"), (5, 5, "S"), (5, 6, "U"),
        (5, 6, "L"), (5, 6, "R"), (5, 7, "S"), (5, 8, "U"), (5, 8, "L"), (5, 8, "R"),
    ),
    (3, 4, 4): (
        (3, 3, "L"), (3, 3, "R"), (3, 3, "D"), (3, 4, "U"), (3, 4, "L"), (3, 4, "R"), (3, 5, "L"), (3, 5, "R"),
        (3, 5, "D"), (4, 3, "U"), (4, 3, "L"), (4, 3, "R"), (4, 4, "S"), (4, 5, "U"), (4, 5, "L"), (4, 5, "R"),
        (4, 6, "S"),
    ),
    (3, 5, 5): (
        (4, 6, "L"), (4, 6, "R"), (4, 6, "D"), (4, 7, "U"), (4, 7, "L"), (4, 7, "R"), (4, 8, "L"), (4, 8, "R"),
        (4, 8, "D"), (5, 6, "U"), (5, 6, "L"), (5, 6, "R"), (5, 7, "S"), (5, 8, "U"), (5, 8, "L"), (5, 8, "R"),
        (5, 9, "S"),
    ),
}
"""``(k, h, r)`` -> coordinates of an uncolourable vertex set of ``net_wall(h, r)``."""


def core_is_uncolourable(W, k, core):
    """Exhaustively confirm that no ``k``-colouring of ``W`` restricted to ``core`` meets the constraints.

    For ``k = 4`` two core vertices at distance at most two in ``W`` must
    differ; for ``k = 3`` core edges must be bichromatic, every induced
    ``P5`` inside the core must use all three colours and every induced bull
    inside the core may use a colour at most twice. An uncolourable core
    means ``W`` itself has no valid colouring.
    """
    coords = _require_coords(W)
    index = {c: v for v, c in coords.items()}
    try:
        vs = [index[tuple(c)] for c in core]
    except KeyError as exc:
        raise ParameterError(f"core coordinate {exc.args[0]} is not in the net-wall")
    mask = sum(1 << v for v in vs)
    if k == 4:
        conf = {v: _distance2_conflicts(W)[v] & mask for v in vs}
        groups = {v: [] for v in vs}
    elif k == 3:
        H = W.induced(vs)
        conf = {v: W.adj[v] & mask for v in vs}
        groups = {v: [] for v in vs}
        for kind, F in (("p5", path(5)), ("bull", named_graph("bull"))):
            for S in iter_induced(H, F):
                S = tuple(vs[i] for i in S)
                for v in S:
                    groups[v].append((kind, S))
    else:
        raise ParameterError("cores are defined for k = 3 and k = 4")
    col = {}

    def ok(v):
        if any(col.get(u) == col[v] for u in bits(conf[v])):
            return False
        for kind, S in groups[v]:
            cs = [col[u] for u in S if u in col]
            if kind == "p5" and len(cs) == len(S) and len(set(cs)) < k:
                return False
            if kind == "bull" and cs.count(col[v]) > 2:
                return False
        return True

    def rec(i, used):
        if i == len(vs):
            return True
        v = vs[i]
        # colours are interchangeable, so only one unused colour is tried
        for c in range(min(used + 1, k)):
            col[v] = c
            if ok(v) and rec(i + 1, max(used, c + 1)):
                return True
        del col[v]
        return False

    return not rec(0, 0)


# G' and G''


def _seed_edges(G):
    return G.edges()


def construct_gprime(G):
    """Chordal bipartite gadget on ``X + Y + Q + T``.

    ``X`` and ``Y`` are copies of ``V(G)`` (ids ``v`` and ``n + v``) joined
    completely; each edge ``uv`` (in sorted order) adds the paths
    ``x_u q t y_v`` and ``x_v q' t' y_u`` with ids ``q, t, q', t'``.

    Examples
    --------
    >>> from mimkit.catalog import path
    >>> Gp = construct_gprime(path(2))
    >>> Gp.n, Gp.m
    (8, 10)
    """
    n = G.n
    edges = [(x, n + y) for x in range(n) for y in range(n)]
    Q, T = [], []
    nxt = 2 * n
    for u, v in _seed_edges(G):
        for a, b in ((u, v), (v, u)):
            q, t = nxt, nxt + 1
            nxt += 2
            edges += [(a, q), (q, t), (t, n + b)]
            Q.append(q)
            T.append(t)
    part = {"X": list(range(n)), "Y": list(range(n, 2 * n)), "Q": Q, "T": T}
    return Graph(nxt, edges, {"partition": part})


def construct_gdoubleprime(G):
    """3-partite gadget on ``X + Y + Z``: each edge ``uv`` adds ``x_u z y_v`` and ``x_v z' y_u``.

    Examples
    --------
    >>> from mimkit.catalog import path
    >>> Gpp = construct_gdoubleprime(path(2))
    >>> Gpp.n, Gpp.m
    (6, 8)
    """
    n = G.n
    edges = [(x, n + y) for x in range(n) for y in range(n)]
    Z = []
    nxt = 2 * n
    for u, v in _seed_edges(G):
        for a, b in ((u, v), (v, u)):
            edges += [(a, nxt), (nxt, n + b)]
            Z.append(nxt)
            nxt += 1
    part = {"X": list(range(n)), "Y": list(range(n, 2 * n)), "Z": Z}
    return Graph(nxt, edges, {"partition": part})


# witnesses


WITNESS_FORBIDDEN = {
    "diamond_5p1": ("diamond", "5P1"),
    "k5minus_4p1": ("4P1", "co(3P1+P2)", "co(P1+2P2)"),
    "gem_4p1": ("4P1", "gem", "co(P1+2P2)"),
    "diamond_2p3": ("diamond", "2P3"),
    "diamond_p6": ("K4", "diamond", "P6", "P2+P4"),
    "cb_p8": ("P8", "P3+P6", "S1,1,5"),
    "split_i": ("2P2", "C4", "C5"),
    "split_ii": ("2P2", "C4", "C5"),
    "cobip": ("3P1", "C5"),
}
"""Forbidden induced subgraphs (named-graph expressions) each witness family avoids."""

WITNESS_BUDGET = 400
"""Largest witness (in vertices) :func:`witness` builds by default."""


def _classes_of(G, names):
    part = G.meta["partition"]
    return [part[x] for x in names]


def _cliqueify(G, classes, part, family):
    H = cliqueify_partition(G, classes).graph
    return Graph.from_adjacency(H.adj, {"partition": part, "family": family})


def _build(family, k):
    if family in ("diamond_5p1", "k5minus_4p1"):
        W = net_wall(padded_wall_spec(k, k))
        col = netwall_coloring4(W) if family == "diamond_5p1" else netwall_coloring3(W)
        classes = col.classes()
        part = {f"V{i + 1}": c for i, c in enumerate(classes)}
        return _cliqueify(W, classes, part, family)
    seed = wall(k, k)
    if family in ("gem_4p1", "diamond_2p3", "cb_p8", "cobip"):
        Gp = construct_gprime(seed)
        part = Gp.meta["partition"]
        if family == "cb_p8":
            return Gp.with_meta(family=family)
        if family == "gem_4p1":
            return _cliqueify(Gp, _classes_of(Gp, "XYQT"), part, family)
        if family == "diamond_2p3":
            rest = [[v] for v in part["Q"] + part["T"]]
            return _cliqueify(Gp, _classes_of(Gp, "XY") + rest, part, family)
        sides = [part["X"] + part["T"], part["Y"] + part["Q"]]
        return _cliqueify(Gp, sides, dict(part, L=sorted(sides[0]), R=sorted(sides[1])), family)
    if family == "diamond_p6":
        return construct_gdoubleprime(seed).with_meta(family=family)
    if family in ("split_i", "split_ii"):
        S = subdivide_all(seed, 1).graph
        part = S.meta["partition"]
        clique = part["A"] if family == "split_i" else part["B"]
        rest = [[v] for v in range(S.n) if v not in set(clique)]
        return _cliqueify(S, [clique] + rest, {"A": part["A"], "B": part["B"]}, family)
    raise ParameterError(f"unknown witness family {family!r}; known: {sorted(WITNESS_FORBIDDEN)}")


def witness_size(family, size_param):
    """Vertex count of ``witness(family, size_param)`` without building it."""
    k = size_param
    if family not in WITNESS_FORBIDDEN:
        raise ParameterError(f"unknown witness family {family!r}; known: {sorted(WITNESS_FORBIDDEN)}")
    if family in ("diamond_5p1", "k5minus_4p1"):
        return net_wall(padded_wall_spec(k, k)).n
    n = 2 * k * k - 2
    m = wall(k, k).m
    if family in ("diamond_p6",):
        return 2 * n + 2 * m
    if family in ("split_i", "split_ii"):
        return n + m
    return 2 * n + 4 * m


def witness(family, size_param, budget=WITNESS_BUDGET):
    """Member of an unbounded-width class, grown from a ``size_param x size_param`` wall.

    Families and their seeds:

    ``diamond_5p1``, ``k5minus_4p1``
        padded net-wall with its 4- (resp. 3-) colouring, classes made cliques.
    ``cb_p8``, ``gem_4p1``, ``diamond_2p3``, ``cobip``
        :func:`construct_gprime` of the wall; raw, all four classes made
        cliques, ``X`` and ``Y`` made cliques, or both sides of the
        bipartition ``(X + T, Y + Q)`` made cliques.
    ``diamond_p6``
        :func:`construct_gdoubleprime` of the wall.
    ``split_i``, ``split_ii``
        1-subdivided wall with the original (resp. subdivision) vertices
        made a clique.

    Only class membership is guaranteed (see :func:`verify_witness`).

    Raises
    ------
    SizeLimitError
        If the witness would exceed ``budget`` vertices.
    """
    if size_param < 2:
        raise ParameterError("witness size parameter must be at least 2")
    size = witness_size(family, size_param)
    if size > budget:
        raise SizeLimitError(f"{family}({size_param}) has {size} vertices, over the budget of {budget}")
    return _build(family, size_param)


def verify_witness(G, family):
    """Check the advertised class of a witness; returns a list of failure descriptions."""
    fails = []
    for expr in WITNESS_FORBIDDEN[family]:
        hit = find_induced(G, named_graph(expr))
        if hit is not None:
            fails.append(f"contains {expr} at {sorted(hit)}")
    part = G.meta.get("partition", {})
    if family == "cb_p8" and not is_chordal_bipartite(G):
        fails.append("not chordal bipartite")
    if family == "cobip" and not is_cobipartite(G):
        fails.append("not co-bipartite")
    if family in ("split_i", "split_ii"):
        if not is_split(G):
            fails.append("not split")
        C, I = (part["A"], part["B"]) if family == "split_i" else (part["B"], part["A"])
        Imask = sum(1 << v for v in I)
        if family == "split_i":
            if any(G.degree(v) != 2 for v in I):
                fails.append("an independent-side vertex has degree other than 2")
            if any(bin(G.adj[v] & Imask).count("1") > 3 for v in C):
                fails.append("a clique vertex has more than three independent neighbours")
        else:
            if any(G.degree(v) > 3 for v in I):
                fails.append("an independent-side vertex has degree above 3")
            if any(bin(G.adj[v] & Imask).count("1") != 2 for v in C):
                fails.append("a clique vertex does not have two independent neighbours")
    return fails


# seeded random graphs


def random_graph(n, p, rng):
    """Erdős–Rényi ``G(n, p)`` drawn from ``rng`` (a :class:`random.Random`)."""
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_free_graph(n, forbidden, rng, p=None):
    """Random member of the class free of the named graphs in ``forbidden``.

    Vertex pairs are visited in random order and each edge is kept when
    the graph stays free; the walk stops after a random fraction ``p`` of
    the pairs (uniform in ``[0, 1]`` if omitted), so both sparse and
    edge-maximal members occur.
    """
    Fs = [named_graph(e) if isinstance(e, str) else e for e in forbidden]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    stop = round(len(pairs) * (rng.random() if p is None else p))
    G = Graph(n)
    if any(find_induced(G, F) is not None for F in Fs):
        raise ParameterError(f"the edgeless graph on {n} vertices is not in the class")
    for e in pairs[:stop]:
        H = G.with_edges(add=[e])
        # adding an edge never creates an induced edgeless graph
        if all(F.m == 0 or find_induced(H, F) is None for F in Fs):
            G = H
    return G
