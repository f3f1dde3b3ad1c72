"""Structural predicates and block decomposition."""

from .graph import bits, popcount


def blocks(G):
    """Blocks (maximal connected subgraphs without a cut vertex).

    Isolated vertices form singleton blocks. The result is a list of sorted
    vertex tuples ordered lexicographically.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if G.adj[root] == 0:
            disc[root] = timer
            timer += 1
            out.append((root,))
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack = []
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if disc[u] < 0:
                    estack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(G.neighbors(u))))
                    advanced = True
                    break
                if disc[u] < disc[v]:
                    estack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp = set()
                    while True:
                        e = estack.pop()
                        comp.update(e)
                        if e == (parent, v):
                            break
                    out.append(tuple(sorted(comp)))
    return sorted(out)


def cut_vertices(G):
    seen = {}
    for b in blocks(G):
        for v in b:
            seen[v] = seen.get(v, 0) + 1
    return sorted(v for v, c in seen.items() if c > 1)


def bipartition(G):
    """Return a 2-colouring as a list of 0/1 (BFS, least vertex gets 0) or ``None``."""
    col = [-1] * G.n
    for s in range(G.n):
        if col[s] >= 0:
            continue
        col[s] = 0
        queue = [s]
        for v in queue:
            for u in bits(G.adj[v]):
                if col[u] < 0:
                    col[u] = 1 - col[v]
                    queue.append(u)
                elif col[u] == col[v]:
                    return None
    return col


def is_bipartite(G):
    return bipartition(G) is not None


def is_cobipartite(G):
    return is_bipartite(G.complement())


def is_split(G):
    """Degree-sequence test for split graphs."""
    d = sorted(G.degrees(), reverse=True)
    m = 0
    for i, di in enumerate(d):
        if di >= i:
            m = i + 1
    lhs = sum(d[:m])
    rhs = m * (m - 1) + sum(d[m:])
    return lhs == rhs


def is_forest(G):
    return G.m == G.n - len(G.components())


def is_linear_forest(G):
    return is_forest(G) and G.max_degree() <= 2


def is_subcubic(G):
    return G.max_degree() <= 3


def _component_is_path_or_claw(G, comp):
    sub = G.induced(comp)
    if sub.m != sub.n - 1:
        return False
    degs = sub.degrees()
    return max(degs, default=0) <= 3 and sum(1 for d in degs if d == 3) <= 1


def in_class_S(G):
    """Every component is a path or a subdivided claw."""
    return all(_component_is_path_or_claw(G, c) for c in G.components())


def in_class_N(G):
    """Some component has a cycle of length at least four or two triangles.

    A component avoids both exactly when all its blocks are edges or
    triangles with at most one triangle.
    """
    comp_of = {}
    for i, c in enumerate(G.components()):
        for v in c:
            comp_of[v] = i
    triangles = {}
    for b in blocks(G):
        if len(b) >= 4:
            return True
        if len(b) == 3:
            c = comp_of[b[0]]
            triangles[c] = triangles.get(c, 0) + 1
            if triangles[c] >= 2:
                return True
    return False


def has_chordless_cycle_at_least(G, length, within=None):
    """Whether ``G`` has an induced cycle with at least ``length`` vertices.

    Depth-first extension of induced paths from their least vertex; a path
    ``v0 .. vk`` closes a chordless cycle when ``vk`` sees ``v0`` and no
    inner vertex does.
    """
    host = G.all_mask if within is None else within
    adj = G.adj
    for start in bits(host):
        allowed = host & ~((2 << start) - 1)
        if _extend(adj, start, [start], allowed, length):
            return True
    return False


def _extend(adj, start, path_, allowed, length):
    last = path_[-1]
    for u in bits(adj[last] & allowed):
        if len(path_) >= 2 and adj[u] >> start & 1:
            if len(path_) + 1 >= length and _inner_free(adj, u, path_):
                return True
            continue
        if not _inner_free(adj, u, path_):
            continue
        path_.append(u)
        if _extend(adj, start, path_, allowed & ~(1 << u), length):
            return True
        path_.pop()
    return False


def _inner_free(adj, u, path_):
    # u may touch only the last path vertex (and start when closing)
    for w in path_[1:-1]:
        if adj[u] >> w & 1:
            return False
    return True


def is_chordal_bipartite(G):
    """Bipartite with no induced cycle of length six or more."""
    return is_bipartite(G) and not has_chordless_cycle_at_least(G, 6)


def is_chordal(G):
    return not has_chordless_cycle_at_least(G, 4)


def proper_coloring(G, k):
    """First proper ``k``-colouring found by backtracking in vertex order, or ``None``."""
    col = [-1] * G.n

    def rec(v):
        if v == G.n:
            return True
        used = {col[u] for u in bits(G.adj[v]) if u < v}
        for c in range(k):
            if c not in used:
                col[v] = c
                if rec(v + 1):
                    return True
        col[v] = -1
        return False

    return list(col) if rec(0) else None


def independence_number(G):
    best = 0

    def rec(cand, size):
        nonlocal best
        if size + popcount(cand) <= best:
            return
        if not cand:
            best = size
            return
        v = (cand & -cand).bit_length() - 1
        rec(cand & ~G.adj[v] & ~(1 << v), size + 1)
        rec(cand & ~(1 << v), size)

    rec(G.all_mask, 0)
    return best
