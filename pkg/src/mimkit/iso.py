"""Induced-subgraph search, canonical forms and enumeration of small graphs."""

from functools import lru_cache

from .errors import ParameterError
from .graph import Graph, bits, popcount


def _search_order(H):
    """Order pattern vertices so each one (after a component start) has placed neighbours."""
    n = H.n
    deg = H.degrees()
    placed = []
    pmask = 0
    while len(placed) < n:
        best, key = None, None
        for v in range(n):
            if pmask >> v & 1:
                continue
            k = (popcount(H.adj[v] & pmask), deg[v], -v)
            if key is None or k > key:
                best, key = v, k
        placed.append(best)
        pmask |= 1 << best
    return placed


def _twin_predecessor(H, order):
    """For each position, the previous position holding a twin of that vertex, else -1.

    True twins (equal closed neighbourhoods) and false twins (equal open
    neighbourhoods) can be permuted freely, so their images may be forced
    to increase along the search order.
    """
    out = []
    for i, v in enumerate(order):
        prev = -1
        for j in range(i - 1, -1, -1):
            u = order[j]
            a, b = H.adj[u] & ~(1 << v), H.adj[v] & ~(1 << u)
            if a == b:
                prev = j
                break
        out.append(prev)
    return out


class _Pattern:
    __slots__ = ("H", "order", "need", "avoid", "twin", "deg")

    def __init__(self, H):
        self.H = H
        self.order = _search_order(H)
        pos = {v: i for i, v in enumerate(self.order)}
        self.need, self.avoid, self.deg = [], [], []
        for i, v in enumerate(self.order):
            self.need.append([pos[u] for u in bits(H.adj[v]) if pos[u] < i])
            self.avoid.append([j for j in range(i) if not H.adj[v] >> self.order[j] & 1])
            self.deg.append(H.degree(v))
        self.twin = _twin_predecessor(H, self.order)


@lru_cache(maxsize=4096)
def _pattern(H):
    return _Pattern(H)


def iter_induced(G, H, within=None):
    """Yield induced copies of ``H`` in ``G`` as tuples ``w`` with ``w[i]`` the image of ``H``-vertex ``i``.

    Copies that differ only by swapping twin vertices of ``H`` are reported
    once. ``within`` optionally restricts the host vertices to a bitmask.
    """
    if H.n == 0:
        yield ()
        return
    if H.n > G.n:
        return
    pat = _pattern(H)
    k = H.n
    host = G.all_mask if within is None else within
    gdeg = G.degrees()
    degmask = {}
    for d in set(pat.deg):
        m = 0
        for v in bits(host):
            if gdeg[v] >= d:
                m |= 1 << v
        degmask[d] = m
    img = [0] * k
    adj = G.adj

    def rec(i, used):
        if i == k:
            out = [0] * k
            for j, v in enumerate(pat.order):
                out[v] = img[j]
            yield tuple(out)
            return
        cand = degmask[pat.deg[i]] & ~used
        for j in pat.need[i]:
            cand &= adj[img[j]]
        if not cand:
            return
        for j in pat.avoid[i]:
            cand &= ~adj[img[j]]
        t = pat.twin[i]
        if t >= 0:
            cand &= ~((2 << img[t]) - 1)
        while cand:
            low = cand & -cand
            cand ^= low
            img[i] = low.bit_length() - 1
            yield from rec(i + 1, used | low)

    yield from rec(0, 0)


def find_induced(G, H, within=None):
    """Return one induced copy of ``H`` in ``G`` (see :func:`iter_induced`) or ``None``."""
    return next(iter_induced(G, H, within), None)


def contains_induced(G, H):
    return find_induced(G, H) is not None


def is_free(G, *forbidden):
    return not any(contains_induced(G, H) for H in forbidden)


# canonical form


def _refine(G, col=None):
    """Coarsest equitable colouring refining ``col`` (degrees if omitted).

    Colours are ranks of sorted signatures, so the result and the order of
    its classes are isomorphism invariant.
    """
    n = G.n
    if col is None:
        col = [popcount(a) for a in G.adj]
    ncol = len(set(col))
    while True:
        sig = [(col[v], tuple(sorted(col[u] for u in bits(G.adj[v])))) for v in range(n)]
        keys = sorted(set(sig))
        index = {s: i for i, s in enumerate(keys)}
        new = [index[s] for s in sig]
        if len(keys) == ncol:
            return new
        col, ncol = new, len(keys)


def _code(G, order):
    code = 0
    adj = G.adj
    for j in range(1, len(order)):
        aj = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (aj >> order[i] & 1)
    return code


def _target_cell(col):
    cells = {}
    for v, c in enumerate(col):
        cells.setdefault(c, []).append(v)
    nontrivial = [cells[c] for c in sorted(cells) if len(cells[c]) > 1]
    if not nontrivial:
        return None
    return min(nontrivial, key=len)


def _twin_representatives(G, cell):
    """One vertex per twin class of ``cell``; twins are swapped by an automorphism."""
    reps = []
    for v in cell:
        if not any((G.adj[u] & ~(1 << v)) == (G.adj[v] & ~(1 << u)) for u in reps):
            reps.append(v)
    return reps


def canonical_order(G):
    """Vertex order giving the canonical labelling of ``G``.

    Individualisation-refinement: refine to an equitable colouring, then
    branch on each vertex of the first smallest non-singleton colour class,
    giving it a colour of its own. Every discrete colouring reached is a
    vertex order; the one with the least upper-triangle adjacency code wins.
    Only one vertex per twin class is tried, since exchanging twins is an
    automorphism that fixes the colouring.
    """
    if G.n == 0:
        return []
    best = [None, None]

    def search(col):
        cell = _target_cell(col)
        if cell is None:
            order = sorted(range(G.n), key=col.__getitem__)
            code = _code(G, order)
            if best[1] is None or code < best[1]:
                best[0], best[1] = order, code
            return
        for v in _twin_representatives(G, cell):
            search(_refine(G, [2 * c + (u != v) for u, c in enumerate(col)]))

    search(_refine(G))
    return best[0]


@lru_cache(maxsize=65536)
def _canon_cached(G):
    order = canonical_order(G)
    return G.n, _code(G, order)


def canonical_key(G):
    """Hashable key equal for two graphs iff they are isomorphic."""
    return _canon_cached(Graph.from_adjacency(G.adj))


def canonical_form(G):
    """The canonically labelled copy of ``G``."""
    order = canonical_order(G)
    return G.induced(order)


def is_isomorphic(G, H):
    return G.n == H.n and G.m == H.m and canonical_key(G) == canonical_key(H)


ENUMERATION_LIMIT = 7


@lru_cache(maxsize=None)
def _enumerate(n):
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    seen = {}
    for g in _enumerate(n - 1):
        for nb in range(1 << (n - 1)):
            adj = list(g.adj) + [nb]
            for u in bits(nb):
                adj[u] |= 1 << (n - 1)
            h = Graph.from_adjacency(adj)
            key = canonical_key(h)
            if key not in seen:
                seen[key] = h
    return tuple(canonical_form(seen[k]) for k in sorted(seen))


def enumerate_graphs(n):
    """All graphs on ``n`` vertices up to isomorphism, canonically labelled.

    Raises
    ------
    ParameterError
        If ``n`` exceeds :data:`ENUMERATION_LIMIT`.
    """
    if n < 0 or n > ENUMERATION_LIMIT:
        raise ParameterError(f"enumeration supports 0 <= n <= {ENUMERATION_LIMIT}")
    return list(_enumerate(n))
