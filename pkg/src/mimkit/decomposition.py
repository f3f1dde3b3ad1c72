"""Branch decompositions, cut induced matchings and an exact mim-width oracle.

A branch decomposition is a subcubic tree together with a bijection from
the graph's vertices to its leaves (nodes of degree at most one). Every
tree edge splits the vertices in two; the width of the decomposition is
the largest induced matching crossing one of those splits.
"""

import os
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DecompositionError, ParameterError, SizeLimitError
from .graph import bits, popcount, to_mask

ORACLE_HARD_CAP = 11


def oracle_cap():
    """Vertex limit of :func:`exact_mimw`; ``MIMKIT_ORACLE_CAP`` may lower it."""
    raw = os.environ.get("MIMKIT_ORACLE_CAP")
    if raw is None:
        return ORACLE_HARD_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"MIMKIT_ORACLE_CAP must be an integer, got {raw!r}")
    return max(0, min(value, ORACLE_HARD_CAP))


# cut induced matchings


def cut_value(adj, X, Y):
    """Maximum induced matching among the edges between disjoint masks ``X`` and ``Y``.

    Only ``X``-``Y`` adjacencies matter: two crossing edges conflict when
    they share an endpoint or a crossing edge joins their endpoints.
    """
    ends = []
    for u in bits(X):
        nb = adj[u] & Y
        for v in bits(nb):
            ends.append((u, v))
    k = len(ends)
    if k <= 1:
        return k
    by_x, by_y = {}, {}
    for i, (u, v) in enumerate(ends):
        by_x[u] = by_x.get(u, 0) | (1 << i)
        by_y[v] = by_y.get(v, 0) | (1 << i)
    conf = []
    for i, (u, v) in enumerate(ends):
        c = 0
        for v2 in bits(adj[u] & Y):
            c |= by_y[v2]
        for u2 in bits(adj[v] & X):
            c |= by_x[u2]
        conf.append(c & ~(1 << i))
    cap = min(len(by_x), len(by_y))
    return _max_independent(conf, (1 << k) - 1, cap)


def _max_independent(conf, P, cap):
    memo = {}
    best = 0

    def rec(P):
        if not P:
            return 0
        hit = memo.get(P)
        if hit is not None:
            return hit
        lo_v, lo_d, hi_v, hi_d = -1, 1 << 30, -1, -1
        for v in bits(P):
            d = popcount(conf[v] & P)
            if d < lo_d:
                lo_v, lo_d = v, d
            if d > hi_d:
                hi_v, hi_d = v, d
        if lo_d <= 1:
            res = 1 + rec(P & ~conf[lo_v] & ~(1 << lo_v))
        elif hi_d == 0:
            res = popcount(P)
        else:
            res = 1 + rec(P & ~conf[hi_v] & ~(1 << hi_v))
            if res < popcount(P) and res < cap:
                res = max(res, rec(P & ~(1 << hi_v)))
        memo[P] = res
        return res

    best = rec(P)
    return best


def _as_mask(G, X):
    if isinstance(X, int):
        mask = X
    else:
        mask = to_mask(X)
    if mask & ~G.all_mask:
        raise ParameterError("cut side contains vertices outside the graph")
    return mask


def cutmim(G, X):
    """Size of a maximum induced matching in the bipartite graph ``G[X, V - X]``.

    Parameters
    ----------
    G : Graph
    X : iterable of int or int bitmask

    Examples
    --------
    >>> from mimkit.catalog import cycle
    >>> cutmim(cycle(4), [0, 1])
    2
    """
    mask = _as_mask(G, X)
    return cut_value(G.adj, mask, G.all_mask & ~mask)


# branch decompositions


@dataclass(frozen=True)
class BranchDecomposition:
    """A tree on nodes ``0..n_nodes-1`` plus ``leaf_of[v]``, the leaf of vertex ``v``.

    Instances built by the constructors in this module are normalised:
    no internal node of degree two, leaves numbered by their vertex and
    internal nodes numbered in breadth-first order from the leaf of vertex 0.
    """

    n_nodes: int
    edges: tuple
    leaf_of: tuple

    @property
    def n_vertices(self):
        return len(self.leaf_of)

    def neighbours(self):
        nb = [[] for _ in range(self.n_nodes)]
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    def validate(self, G=None):
        """Raise :class:`DecompositionError` unless this is a valid decomposition (of ``G``)."""
        t = self.n_nodes
        n = len(self.leaf_of)
        if G is not None and G.n != n:
            raise DecompositionError(f"decomposition has {n} leaves but graph has {G.n} vertices")
        if n == 0:
            if t != 0 or self.edges:
                raise DecompositionError("empty graph needs the empty tree")
            return
        if len(self.edges) != t - 1:
            raise DecompositionError(f"tree on {t} nodes must have {t - 1} edges")
        nb = [[] for _ in range(t)]
        for a, b in self.edges:
            if not (0 <= a < t and 0 <= b < t) or a == b:
                raise DecompositionError(f"bad tree edge ({a}, {b})")
            nb[a].append(b)
            nb[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != t:
            raise DecompositionError("tree is not connected")
        if any(len(x) > 3 for x in nb):
            raise DecompositionError("tree is not subcubic")
        leaves = {x for x in range(t) if len(nb[x]) <= 1}
        if len(set(self.leaf_of)) != n or set(self.leaf_of) != leaves:
            raise DecompositionError("leaf map is not a bijection onto the leaves")

    def cut_masks(self):
        """Vertex bitmask on the far side of each tree edge, aligned with :attr:`edges`."""
        t = self.n_nodes
        if t <= 1:
            return []
        nb = self.neighbours()
        node_mask = [0] * t
        for v, x in enumerate(self.leaf_of):
            node_mask[x] |= 1 << v
        parent = [-1] * t
        order = [0]
        parent[0] = 0
        for x in order:
            for y in nb[x]:
                if parent[y] < 0:
                    parent[y] = x
                    order.append(y)
        sub = list(node_mask)
        for x in reversed(order[1:]):
            sub[parent[x]] |= sub[x]
        out = []
        for a, b in self.edges:
            out.append(sub[b] if parent[b] == a else sub[a])
        return out

    def normalized(self):
        return normalize(self.n_nodes, self.edges, self.leaf_of)


def normalize(n_nodes, edges, leaf_of):
    """Validate a subcubic tree, contract internal degree-2 nodes and relabel canonically."""
    raw = BranchDecomposition(n_nodes, tuple(tuple(e) for e in edges), tuple(leaf_of))
    raw.validate()
    n = len(leaf_of)
    if n == 0:
        return raw
    if n == 1:
        return BranchDecomposition(1, (), (0,))
    nb = [set() for _ in range(n_nodes)]
    for a, b in raw.edges:
        nb[a].add(b)
        nb[b].add(a)
    leafset = set(leaf_of)
    for x in range(n_nodes):
        if x not in leafset and len(nb[x]) == 2:
            a, b = nb[x]
            nb[a].discard(x)
            nb[b].discard(x)
            nb[a].add(b)
            nb[b].add(a)
            nb[x] = set()
    new_id = {leaf_of[v]: v for v in range(n)}
    nxt = n
    start = leaf_of[0]
    order = [start]
    seen = {start}
    for x in order:
        for y in sorted(nb[x], key=lambda z: (z not in new_id, new_id.get(z, 0), z)):
            if y not in seen:
                seen.add(y)
                order.append(y)
                if y not in new_id:
                    new_id[y] = nxt
                    nxt += 1
    new_edges = sorted(
        (min(new_id[a], new_id[b]), max(new_id[a], new_id[b]))
        for a in order
        for b in nb[a]
        if new_id[a] < new_id[b]
    )
    out = BranchDecomposition(nxt, tuple(new_edges), tuple(range(n)))
    out.validate()
    return out


def from_tree(edges, leaf_of, n_nodes=None):
    """Normalised decomposition from an arbitrary subcubic tree description."""
    if n_nodes is None:
        nodes = set(leaf_of)
        for a, b in edges:
            nodes.update((a, b))
        n_nodes = max(nodes) + 1 if nodes else 0
    return normalize(n_nodes, edges, leaf_of)


def trivial_decomposition(n):
    if n == 0:
        return BranchDecomposition(0, (), ())
    if n == 1:
        return BranchDecomposition(1, (), (0,))
    if n == 2:
        return BranchDecomposition(2, ((0, 1),), (0, 1))
    raise ParameterError("trivial decompositions exist only for n <= 2")


def linear_decomposition(G, order):
    """Caterpillar decomposition: spine ``s_1..s_l`` with leaf ``t_i`` holding ``order[i]``."""
    order = list(order)
    if sorted(order) != list(range(G.n)):
        raise ParameterError("order must be a permutation of the vertices")
    n = G.n
    if n <= 2:
        return trivial_decomposition(n)
    # leaves are nodes 0..n-1 (t_i = node order[i]); spine nodes n..2n-1
    edges = [(n + i, n + i + 1) for i in range(n - 1)]
    leaf_of = [0] * n
    for i, v in enumerate(order):
        edges.append((n + i, v))
        leaf_of[v] = v
    return normalize(2 * n, edges, leaf_of)


def arbitrary_decomposition(G):
    """The caterpillar in vertex-id order."""
    return linear_decomposition(G, range(G.n))


def cut_widths(G, D):
    """``cutmim`` of every tree edge of ``D``, aligned with ``D.edges``."""
    D.validate(G)
    full = G.all_mask
    return [cut_value(G.adj, m, full & ~m) for m in D.cut_masks()]


def mimw_of_decomposition(G, D):
    """Largest cut induced matching over the edges of ``D`` (0 if the tree has no edge)."""
    return max(cut_widths(G, D), default=0)


# exact oracle


class MimwResult(NamedTuple):
    width: int
    decomposition: Optional[BranchDecomposition]
    at_least: bool = False


def _search_order(G):
    n = G.n
    deg = G.degrees()
    order = []
    placed = 0
    while len(order) < n:
        best, key = None, None
        for v in range(n):
            if placed >> v & 1:
                continue
            k = (popcount(G.adj[v] & placed), deg[v], -v)
            if key is None or k > key:
                best, key = v, k
        order.append(best)
        placed |= 1 << best
    return order


def balanced_lower_bound(G):
    """Minimum ``cutmim`` over cuts with both sides of size at least ``ceil(n/3)``.

    Every subcubic tree with ``n`` leaves has an edge splitting the leaves
    this evenly, so the value bounds the mim-width from below.
    """
    n = G.n
    if n <= 2:
        return 0
    lo = -(-n // 3)
    full = G.all_mask
    best = None
    # fix vertex n-1 outside X to visit each cut once
    for X in range(1 << (n - 1)):
        s = popcount(X)
        if s < lo or n - s < lo:
            continue
        v = cut_value(G.adj, X, full & ~X)
        if best is None or v < best:
            best = v
            if best == 0:
                break
    return best


def solve_mimw(G, cap=None):
    """Exact mim-width with an optimal decomposition.

    Enumerates decomposition trees by inserting leaves one at a time into
    every edge of the partial tree, pruning a partial tree as soon as one of
    its cuts (restricted to the inserted vertices) reaches the best width
    found so far.

    Parameters
    ----------
    G : Graph
        At most :func:`oracle_cap` vertices.
    cap : int, optional
        Only look for decompositions of width below ``cap``. If there are
        none the result has ``width == cap``, ``at_least=True`` and no
        decomposition.

    Raises
    ------
    SizeLimitError
        If ``G`` has more vertices than the oracle cap.
    """
    n = G.n
    limit = oracle_cap()
    if n > limit:
        raise SizeLimitError(f"exact mim-width is limited to {limit} vertices, graph has {n}")
    if n <= 2:
        # the degenerate tree has at most one cut
        D = trivial_decomposition(n)
        w = mimw_of_decomposition(G, D)
        if cap is not None and cap <= w:
            return MimwResult(cap, None, True)
        return MimwResult(w, D)

    order = _search_order(G)
    H = G.induced(order)
    adj = H.adj
    lb = balanced_lower_bound(H)
    start = linear_decomposition(H, range(n))
    best_w = mimw_of_decomposition(H, start)
    best_tree = None
    if cap is not None and cap <= best_w:
        best_w, ub_tree = cap, None
    else:
        ub_tree = start

    if lb >= best_w:
        if ub_tree is None:
            return MimwResult(cap, None, True)
        return MimwResult(best_w, _map_back(ub_tree, order))

    memo = {}

    def cval(size, X):
        key = X | (size << n)
        v = memo.get(key)
        if v is None:
            v = cut_value(adj, X, ((1 << size) - 1) & ~X)
            memo[key] = v
        return v

    parent = [0] * (2 * n)
    below = [0] * (2 * n)
    root_int = n
    parent[root_int] = 0
    parent[1] = parent[2] = root_int
    below[root_int] = 0b110
    below[1], below[2] = 0b10, 0b100
    edge_nodes = [root_int, 1, 2]
    found = None

    def snapshot():
        return [(parent[c], c) for c in edge_nodes]

    def rec(k):
        nonlocal best_w, found
        if k == n:
            w = max(cval(n, below[c]) for c in edge_nodes)
            if w < best_w:
                best_w = w
                found = snapshot()
            return best_w <= lb
        w_node = n + k - 2
        bit = 1 << k
        for idx in range(len(edge_nodes)):
            c = edge_nodes[idx]
            p = parent[c]
            parent[w_node] = p
            parent[c] = w_node
            parent[k] = w_node
            below[w_node] = below[c] | bit
            below[k] = bit
            a = p
            while a != 0:
                below[a] |= bit
                a = parent[a]
            edge_nodes.append(w_node)
            edge_nodes.append(k)
            size = k + 1
            ok = True
            for e in edge_nodes:
                if cval(size, below[e]) >= best_w:
                    ok = False
                    break
            done = False
            if ok:
                done = rec(k + 1)
            edge_nodes.pop()
            edge_nodes.pop()
            a = p
            while a != 0:
                below[a] &= ~bit
                a = parent[a]
            parent[c] = p
            if done:
                return True
        return False

    if all(cval(3, below[e]) < best_w for e in edge_nodes):
        rec(3)
    if found is not None:
        leaf_of = list(range(n))
        D = from_tree(found, leaf_of, 2 * n - 2)
        return MimwResult(best_w, _map_back(D, order))
    if ub_tree is None:
        return MimwResult(cap, None, True)
    return MimwResult(best_w, _map_back(ub_tree, order))


def _map_back(D, order):
    """Translate a decomposition of ``G.induced(order)`` back to ``G``."""
    leaf_of = [0] * len(order)
    for i, v in enumerate(order):
        leaf_of[v] = D.leaf_of[i]
    return normalize(D.n_nodes, D.edges, leaf_of)


def exact_mimw(G, cap=None):
    """Exact mim-width of ``G`` (see :func:`solve_mimw`); ``cap`` means "at least cap" when returned."""
    return solve_mimw(G, cap).width
