"""Text formats: EDGELIST v1, graph6, BDECOMP v1 and key-value records.

EDGELIST v1
    ``n m`` on the first line, then ``m`` lines ``u v`` (0-indexed, ``u < v``,
    sorted on output).
graph6
    The standard format of nauty's ``showg``/``geng``; an optional
    ``>>graph6<<`` header is accepted on input.
BDECOMP v1
    ``t`` (tree nodes ``0..t-1``), then ``t-1`` lines ``a b``, then one line
    ``map v node`` per graph vertex.
Key-value records
    One ``key = value`` pair per line; ``#`` starts a comment line. Used for
    generator metadata sidecars and lab reports.
"""

from .decomposition import BranchDecomposition
from .errors import DecompositionError, ParseError
from .graph import Graph


def _lines(text):
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _ints(line, count, lineno):
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"line {lineno}: expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {line!r}", lineno)


# EDGELIST


def write_edgelist(G):
    edges = G.edges()
    out = [f"{G.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def read_edgelist(text):
    lines = _lines(text)
    if not lines:
        raise ParseError("empty EDGELIST input", 1)
    n, m = _ints(lines[0], 2, 1)
    if n < 0 or m < 0:
        raise ParseError("line 1: negative count", 1)
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges but {len(lines) - 1} follow", 1)
    seen = set()
    for i, line in enumerate(lines[1:], start=2):
        u, v = _ints(line, 2, i)
        if u == v:
            raise ParseError(f"line {i}: self-loop at {u}", i)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {i}: endpoint out of range", i)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"line {i}: duplicate edge {e}", i)
        seen.add(e)
    return Graph(n, seen)


# graph6


def _g6_size(n):
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(G, header=False):
    n = G.n
    out = bytearray(b">>graph6<<" if header else b"")
    out += _g6_size(n)
    acc, nbits = 0, 0
    for j in range(1, n):
        a = G.adj[j]
        for i in range(j):
            acc = (acc << 1) | (a >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc, nbits = 0, 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def read_graph6(text):
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = s.encode("ascii")
    if not data or any(b < 63 or b > 126 for b in data):
        raise ParseError("invalid graph6 characters", 0)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field", 0)
        n, pos = 0, 8
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", 0)
        n, pos = 0, 4
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}", pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph(text):
    """Read EDGELIST or graph6, chosen by sniffing the first line."""
    first = text.strip().splitlines()[0] if text.strip() else ""
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return read_edgelist(text)
    return read_graph6(first)


# BDECOMP


def write_bdecomp(D):
    out = [str(D.n_nodes)]
    out += [f"{a} {b}" for a, b in D.edges]
    out += [f"map {v} {x}" for v, x in enumerate(D.leaf_of)]
    return "\n".join(out) + "\n"


def read_bdecomp(text, G=None):
    """Parse BDECOMP v1 and validate the tree (and the vertex count against ``G``)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty BDECOMP input", 1)
    (t,) = _ints(lines[0], 1, 1)
    n_edges = max(t - 1, 0)
    if len(lines) < 1 + n_edges:
        raise ParseError("BDECOMP input truncated", len(lines))
    edges = tuple(tuple(_ints(lines[i], 2, i + 1)) for i in range(1, 1 + n_edges))
    leaf = {}
    for i in range(1 + n_edges, len(lines)):
        parts = lines[i].split()
        if len(parts) != 3 or parts[0] != "map":
            raise ParseError(f"line {i + 1}: expected 'map v node'", i + 1)
        v, x = _ints(" ".join(parts[1:]), 2, i + 1)
        if v in leaf:
            raise ParseError(f"line {i + 1}: vertex {v} mapped twice", i + 1)
        leaf[v] = x
    if sorted(leaf) != list(range(len(leaf))):
        raise ParseError("map lines must cover vertices 0..n-1", len(lines))
    D = BranchDecomposition(t, edges, tuple(leaf[v] for v in range(len(leaf))))
    try:
        D.validate(G)
    except DecompositionError as exc:
        raise ParseError(f"invalid decomposition: {exc}") from exc
    return D


# key-value records


def write_records(pairs):
    """Serialise an iterable of ``(key, value)``; lists become space-separated."""
    out = []
    for key, value in pairs:
        if isinstance(value, (list, tuple)):
            value = " ".join(map(str, value))
        value = str(value)
        if "\n" in value or "=" in key:
            raise ValueError(f"record {key!r} cannot be serialised on one line")
        out.append(f"{key} = {value}")
    return "\n".join(out) + "\n"


def read_records(text):
    """Parse ``key = value`` lines into an ordered list of pairs (values stay strings)."""
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if " = " not in s and not s.endswith(" ="):
            raise ParseError(f"line {i}: expected 'key = value'", i)
        key, _, value = s.partition(" =")
        out.append((key.strip(), value.strip()))
    return out


def write_meta(G):
    """Sidecar text for ``G.meta``: ``class.<name>``, ``coord.<v>`` and scalar entries."""
    pairs = [("n", G.n)]
    for name, members in G.meta.get("partition", {}).items():
        pairs.append((f"class.{name}", sorted(members)))
    for v, c in sorted(G.meta.get("coords", {}).items()):
        pairs.append((f"coord.{v}", list(c)))
    if "coloring" in G.meta:
        pairs.append(("coloring", list(G.meta["coloring"])))
    for key, value in sorted(G.meta.items()):
        if key not in ("partition", "coords", "coloring") and isinstance(value, (int, str)):
            pairs.append((key, value))
    return write_records(pairs)


def read_meta(text):
    """Inverse of :func:`write_meta` (coordinates come back as tuples of strings/ints)."""
    meta = {}
    for key, value in read_records(text):
        if key.startswith("class."):
            meta.setdefault("partition", {})[key[6:]] = [int(x) for x in value.split()]
        elif key.startswith("coord."):
            meta.setdefault("coords", {})[int(key[6:])] = tuple(
                int(x) if x.lstrip("-").isdigit() else x for x in value.split()
            )
        elif key == "coloring":
            meta["coloring"] = [int(x) for x in value.split()]
        elif key != "n":
            meta[key] = int(value) if value.lstrip("-").isdigit() else value
    return meta
