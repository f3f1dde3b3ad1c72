"""Constructive branch decompositions with checked width certificates.

Every builder returns a :class:`CertifiedDecomposition`; its width is
computed on emission and compared with the claimed bound, so a bug in a
construction surfaces as :class:`InternalConsistencyError` instead of a
wrong certificate.
"""

from dataclasses import dataclass
from typing import Union

from .catalog import graph as named_graph
from .catalog import kmi, kmk
from .classes import blocks
from .decomposition import (
    BranchDecomposition,
    arbitrary_decomposition,
    cut_value,
    cutmim,
    solve_mimw,
    linear_decomposition,
    mimw_of_decomposition,
    normalize,
    oracle_cap,
    trivial_decomposition,
)
from .errors import ClassViolationError, InternalConsistencyError, PreconditionError, SizeLimitError
from .graph import bits, to_mask
from .iso import find_induced
from .ramsey import evaluate_bound


@dataclass(frozen=True)
class CertifiedDecomposition:
    """A decomposition, its computed width and the bound it is certified against.

    ``claimed_bound`` is an integer or a symbolic expression understood by
    :func:`mimkit.ramsey.evaluate_bound`; ``bound_value`` is its numeric
    value and ``provenance`` names the construction.
    """

    decomposition: BranchDecomposition
    width: int
    claimed_bound: Union[int, str]
    bound_value: int
    provenance: str

    def certificate_line(self):
        return f"width {self.width} bound {self.claimed_bound}"


def _certify(G, D, bound, provenance, **env):
    D.validate(G)
    width = mimw_of_decomposition(G, D)
    value = evaluate_bound(bound, **env)
    if width > value:
        raise InternalConsistencyError(f"{provenance}: width {width} exceeds claimed bound {bound} = {value}")
    return CertifiedDecomposition(D, width, bound, value, provenance)


# tree assembly helpers


class _Tree:
    """Mutable tree under construction; leaves are graph vertices."""

    def __init__(self, n):
        self.n = n
        self.nodes = 0
        self.edges = []
        self.leaf_of = [None] * n

    def node(self):
        self.nodes += 1
        return self.nodes - 1

    def leaf(self, v):
        x = self.node()
        self.leaf_of[v] = x
        return x

    def graft(self, D, vertices):
        """Copy decomposition ``D`` of ``G[vertices]``; return the node map."""
        ids = [self.node() for _ in range(D.n_nodes)]
        self.edges += [(ids[a], ids[b]) for a, b in D.edges]
        for i, x in enumerate(D.leaf_of):
            self.leaf_of[vertices[i]] = ids[x]
        return ids

    def caterpillar(self, vertices):
        """Spine ``s_1..s_l`` with the ``i``-th vertex hanging off ``s_i``; returns ``s_1``."""
        spine = [self.node() for _ in vertices]
        for a, b in zip(spine, spine[1:]):
            self.edges.append((a, b))
        for s, v in zip(spine, vertices):
            self.edges.append((s, self.leaf(v)))
        return spine[0]

    def attach_point(self, ids, D):
        """A node of a grafted tree with a free slot (subdividing an edge if needed)."""
        if D.n_nodes == 1:
            return ids[0]
        a, b = ids[D.edges[0][0]], ids[D.edges[0][1]]
        self.edges.remove((a, b))
        s = self.node()
        self.edges += [(a, s), (s, b)]
        return s

    def finish(self):
        return normalize(self.nodes, self.edges, self.leaf_of)


def _spine_join(n, groups):
    """Join decompositions ``[(vertices, D), ...]`` along a path ``p_1..p_k``."""
    tree = _Tree(n)
    prev = None
    for vertices, D in groups:
        ids = tree.graft(D, vertices)
        p = tree.node()
        tree.edges.append((p, tree.attach_point(ids, D)))
        if prev is not None:
            tree.edges.append((prev, p))
        prev = p
    return tree.finish()


def _sub_decomposition(G, vertices, decomposer):
    H = G.induced(vertices)
    D = decomposer(H)
    D.validate(H)
    return D


def default_block_decomposer(H):
    """Optimal decomposition when ``H`` fits the exact oracle, the id-order caterpillar otherwise."""
    if H.n <= 2:
        return trivial_decomposition(H.n)
    if H.n <= oracle_cap():
        return solve_mimw(H).decomposition
    return arbitrary_decomposition(H)


def join_components(G, decomposer):
    """Decompose each component and join them along a spine (cuts between components are empty)."""
    comps = G.components()
    if len(comps) == 1:
        return _sub_decomposition(G, comps[0], decomposer)
    groups = [(c, _sub_decomposition(G, c, decomposer)) for c in comps]
    return _spine_join(G.n, groups)


# blocks


def _block_tree_decomposition(G, comp, decomposer):
    """Glue block decompositions of one connected component at cut vertices."""
    sub = G.induced(comp)
    bl = blocks(sub)
    if len(bl) == 1:
        D = decomposer(sub)
        D.validate(sub)
        return D, [mimw_of_decomposition(sub, D)]
    tree = _Tree(sub.n)
    widths = []
    placed = set()
    pending = list(bl)
    # process blocks in an order where each new block meets the placed ones
    first = pending.pop(0)
    order = [first]
    placed.update(first)
    while pending:
        for i, b in enumerate(pending):
            if placed.intersection(b):
                order.append(pending.pop(i))
                placed.update(b)
                break
        else:
            raise InternalConsistencyError("component is not connected through its blocks")
    placed = set()
    for b in order:
        H = sub.induced(b)
        D = decomposer(H)
        D.validate(H)
        widths.append(mimw_of_decomposition(H, D))
        shared = [v for v in b if v in placed]
        if not placed:
            tree.graft(D, list(b))
            placed.update(b)
            continue
        (v,) = shared
        old_leaf = tree.leaf_of[v]
        ids = [tree.node() for _ in range(D.n_nodes)]
        tree.edges += [(ids[a], ids[c]) for a, c in D.edges]
        new_leaf_for_v = None
        for i, x in enumerate(D.leaf_of):
            if b[i] == v:
                new_leaf_for_v = ids[x]
            else:
                tree.leaf_of[b[i]] = ids[x]
        # identify the two leaves of v and hang a fresh leaf for v there
        tree.edges = [
            (old_leaf if a == new_leaf_for_v else a, old_leaf if c == new_leaf_for_v else c) for a, c in tree.edges
        ]
        tree.edges.append((old_leaf, tree.leaf(v)))
        placed.update(b)
    used = sorted({x for e in tree.edges for x in e} | {x for x in tree.leaf_of})
    relabel = {x: i for i, x in enumerate(used)}
    D = normalize(len(used), [(relabel[a], relabel[c]) for a, c in tree.edges], [relabel[x] for x in tree.leaf_of])
    return D, widths


def decompose_blocks(G, per_block_decomposer=None):
    """Decomposition of width ``max`` over the blocks, glued at cut vertices.

    ``per_block_decomposer(H)`` returns a decomposition of the block ``H``
    (relabelled in ascending vertex order). The default uses the exact
    oracle when the block is small enough. The claimed bound is the
    largest width among the block decompositions.

    Examples
    --------
    >>> from mimkit.catalog import graph
    >>> decompose_blocks(graph("bowtie")).width
    1
    """
    decomposer = per_block_decomposer or default_block_decomposer
    if G.n <= 2:
        D = trivial_decomposition(G.n)
        return _certify(G, D, mimw_of_decomposition(G, D), "blocks")
    all_widths = []
    groups = []
    for comp in G.components():
        D, widths = _block_tree_decomposition(G, comp, decomposer)
        all_widths += widths
        groups.append((comp, D))
    D = groups[0][1] if len(groups) == 1 else _spine_join(G.n, groups)
    return _certify(G, D, max(all_widths, default=0), "blocks")


# multi-join


def multijoin_bound(p, c, part_width):
    return max(c * ((p * p) // 4), part_width + c * (p - 1))


def decompose_multijoin(G, parts, part_decomps=None, c=None):
    """Join decompositions of the parts of a partition at a central spine.

    With ``cutmim(X_i, X_j) <= c`` for all parts the width is at most
    ``max(c * floor(p^2 / 4), max part width + c (p - 1))``. If ``c`` is
    omitted it is taken as the largest pairwise value.

    Raises
    ------
    PreconditionError
        If the parts do not partition ``V(G)``, ``p < 2``, or some pair
        exceeds ``c`` (the offending pair is reported).
    """
    parts = [sorted(set(p)) for p in parts]
    if len(parts) < 2:
        raise PreconditionError("a multi-join needs at least two parts")
    if sorted(v for p in parts for v in p) != list(range(G.n)) or any(not p for p in parts):
        raise PreconditionError("parts must be non-empty and partition the vertex set")
    masks = [to_mask(p) for p in parts]
    worst, pair = 0, None
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            value = cutmim(G.induced_mask(masks[i] | masks[j]), _reindex(masks[i], masks[i] | masks[j]))
            if value > worst:
                worst, pair = value, (i, j)
    if c is None:
        c = worst
    elif worst > c:
        raise PreconditionError(f"cutmim between parts {pair} is {worst} > c = {c}", detail=pair)
    if part_decomps is None:
        part_decomps = [_sub_decomposition(G, p, default_block_decomposer) for p in parts]
    widths = []
    for p, D in zip(parts, part_decomps):
        D.validate(G.induced(p))
        widths.append(mimw_of_decomposition(G.induced(p), D))
    D = _spine_join(G.n, list(zip(parts, part_decomps)))
    bound = multijoin_bound(len(parts), c, max(widths))
    return _certify(G, D, bound, "multijoin")


def _reindex(sub_mask, host_mask):
    """Bitmask of ``sub_mask`` inside ``G.induced_mask(host_mask)``."""
    out = 0
    for i, v in enumerate(bits(host_mask)):
        if sub_mask >> v & 1:
            out |= 1 << i
    return out


# (2P2, K13)-free graphs


def _require_free(G, exprs):
    for expr in exprs:
        hit = find_induced(G, named_graph(expr))
        if hit is not None:
            raise ClassViolationError(f"input contains an induced {expr}", forbidden=expr, witness=sorted(hit))


def _grow(G, A, B, a_ok, b_ok):
    """Single ascending pass over the remaining edges extending the matched pair ``(A, B)``."""
    A, B = list(A), list(B)
    inside = set(A) | set(B)
    start = set(A) | set(B)
    for u, v in G.edges():
        if u in start and v in start:
            continue
        for a, b in ((u, v), (v, u)):
            if a in inside or b in inside:
                continue
            if a_ok(a, A, B) and b_ok(b, A, B):
                A.append(a)
                B.append(b)
                inside.update((a, b))
                break
    return A, B


def _complete(G, v, S):
    return all(G.has_edge(v, u) for u in S)


def _anticomplete(G, v, S):
    return not any(G.has_edge(v, u) for u in S)


def _net_tree(G, A, B):
    """Caterpillar-of-caterpillars tree around a maximal ``K_r - rP_1``."""
    X = set(A) | set(B)
    r = len(A)
    groups = {i: [] for i in range(r + 1)}
    for v in range(G.n):
        if v in X:
            continue
        nb = [i for i, b in enumerate(B) if G.has_edge(v, b)]
        if not any(G.has_edge(v, x) for x in X):
            raise InternalConsistencyError(f"vertex {v} has no neighbour in the maximal net structure")
        if len(nb) > 1:
            raise InternalConsistencyError(f"vertex {v} sees two pendant vertices")
        groups[nb[0] + 1 if nb else 0].append(v)
    tree = _Tree(G.n)
    path = []
    for i in range(r):
        t = tree.caterpillar([A[i], B[i]] + groups[i + 1])
        p = tree.node()
        tree.edges.append((p, t))
        if path:
            tree.edges.append((path[-1], p))
        path.append(p)
    if groups[0]:
        t0 = tree.caterpillar(groups[0])
        p = tree.node()
        tree.edges += [(path[-1], p), (p, t0)]
    return tree.finish()


def _decompose_component_2p2_k13(H):
    if H.n <= 2:
        return trivial_decomposition(H.n), 1 if H.m else 0
    hit = find_induced(H, kmi(3))
    if hit is None:
        return arbitrary_decomposition(H), 5
    A, B = _grow(
        H,
        hit[:3],
        hit[3:],
        lambda a, A, B: _complete(H, a, A) and _anticomplete(H, a, B),
        lambda b, A, B: _anticomplete(H, b, A + B),
    )
    return _net_tree(H, A, B), 1


def decompose_2p2_k13(G):
    """Decomposition of a ``(2P2, K_{1,3})``-free graph.

    Each component containing an induced net gets the width-1 tree built
    around a maximal ``K_r - rP_1``; net-free components get the id-order
    caterpillar, whose cuts all have induced matchings below six.

    Raises
    ------
    ClassViolationError
        If ``G`` contains an induced ``2P2`` or ``K_{1,3}``.
    """
    _require_free(G, ("2P2", "K1,3"))
    bounds = []

    def per_component(H):
        D, b = _decompose_component_2p2_k13(H)
        bounds.append(b)
        return D

    D = join_components(G, per_component) if G.n else trivial_decomposition(0)
    if 5 in bounds:
        return _certify(G, D, "max{6,r}-1", "2p2-k13:ramsey", r=3)
    return _certify(G, D, max(bounds, default=0), "2p2-k13:net")


# (2P1+P2, bowtie)-free graphs


def kk_linear_order(G, A, B):
    """Linear order ``A', a_1, b_1, .., a_r, b_r, B'`` around a maximal ``K_r - K_r``."""
    X = set(A) | set(B)
    A2, B2 = [], []
    for v in range(G.n):
        if v in X:
            continue
        ca, cb = _complete(G, v, A), _complete(G, v, B)
        if ca and _anticomplete(G, v, B):
            A2.append(v)
        elif cb and _anticomplete(G, v, A):
            B2.append(v)
        else:
            raise InternalConsistencyError(f"vertex {v} is neither of type A' nor B'")
    order = list(A2)
    for a, b in zip(A, B):
        order += [a, b]
    return order + B2


def _decompose_component_bowtie(H):
    if H.n <= 2:
        return trivial_decomposition(H.n), 1 if H.m else 0
    hit = find_induced(H, kmk(5))
    if hit is None:
        return arbitrary_decomposition(H), None
    A, B = _grow(
        H,
        hit[:5],
        hit[5:],
        lambda a, A, B: _complete(H, a, A) and _anticomplete(H, a, B),
        lambda b, A, B: _complete(H, b, B) and _anticomplete(H, b, A),
    )
    return linear_decomposition(H, kk_linear_order(H, A, B)), 2


def decompose_2p1p2_bowtie(G):
    """Decomposition of a ``(2P1+P2, bowtie)``-free graph.

    Components with an induced ``K_5 - K_5`` get the width-2 caterpillar
    around a maximal ``K_r - K_r``; the others get the id-order
    caterpillar, certified against ``R(14,3) - 1``.

    Raises
    ------
    ClassViolationError
        If ``G`` contains an induced ``2P1+P2`` or bowtie.
    """
    _require_free(G, ("2P1+P2", "bowtie"))
    bounds = []

    def per_component(H):
        D, b = _decompose_component_bowtie(H)
        bounds.append(b)
        return D

    D = join_components(G, per_component) if G.n else trivial_decomposition(0)
    if None in bounds:
        return _certify(G, D, "R(14,3)-1", "2p1p2-bowtie:ramsey")
    return _certify(G, D, max(bounds, default=0), "2p1p2-bowtie:kk")


# exhaustive cut checks


@dataclass(frozen=True)
class CutBound:
    """A cut bound: ``cutmim(X) < R`` for every ``X`` of a class member.

    ``family`` is ``"kmi"`` (``(K_r - rP_1, 2P_2)``-free, bound
    ``max{6,r}``), ``"kmp"`` (``(K_r - P_1, tP_2)``-free, bound
    ``R(r,R(r,t))``) or ``"kmk"`` (``(K_r - K_r, sP_1 + P_2)``-free,
    bound ``R(R(r,s+1),s+1)``); ``t`` holds ``t`` or ``s``.
    """

    family: str
    r: int
    t: int = 2

    def forbidden(self):
        r, t = self.r, self.t
        if self.family == "kmi":
            return (f"KmI({r})", "2P2")
        if self.family == "kmp":
            return (f"KmP({r})", f"{t}P2")
        if self.family == "kmk":
            return (f"KmK({r})", f"{t}P1+P2" if t else "P2")
        raise PreconditionError(f"unknown cut-bound family {self.family!r}")

    def expression(self):
        return {"kmi": "max{6,r}", "kmp": "R(r,R(r,t))", "kmk": "R(R(r,s+1),s+1)"}[self.family]

    def value(self):
        return evaluate_bound(self.expression(), r=self.r, t=self.t, s=self.t)


@dataclass(frozen=True)
class CutReport:
    n: int
    subsets: int
    max_cutmim: int
    argmax: int
    strict_bound: int
    violations: tuple

    @property
    def ok(self):
        return not self.violations


CUT_CHECK_LIMIT = 16


def certify_cut_bound(G, bound):
    """Check ``cutmim(X) < bound`` for every ``X`` subset of ``V(G)``.

    Raises
    ------
    SizeLimitError
        If ``G`` has more than :data:`CUT_CHECK_LIMIT` vertices.
    ClassViolationError
        If ``G`` is not in the class of the bound.
    """
    if G.n > CUT_CHECK_LIMIT:
        raise SizeLimitError(f"exhaustive cut check supports at most {CUT_CHECK_LIMIT} vertices")
    _require_free(G, bound.forbidden())
    limit = bound.value()
    full = G.all_mask
    best, arg = 0, 0
    bad = []
    for X in range(1 << G.n):
        value = cut_value(G.adj, X, full & ~X)
        if value > best:
            best, arg = value, X
        if value >= limit:
            bad.append((X, value))
    return CutReport(G.n, 1 << G.n, best, arg, limit, tuple(bad))

