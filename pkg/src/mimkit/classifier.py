"""Bounded / unbounded / open verdicts for ``(H1, H2)``-free graph classes.

Each clause is a containment condition on ``H1`` and ``H2``. Conditions of
the form "``H`` is an induced subgraph of ``F(p)`` for some ``p``" are
decided at ``p = |V(H)|``: every family used here is nested
(``F(p)`` is an induced subgraph of ``F(p + 1)``) and an ``n``-vertex graph
inside some ``F(p)`` already sits inside ``F(n)``.
"""

from functools import lru_cache
from typing import NamedTuple, Optional

from .catalog import complete, complete_bipartite, empty, kmi, kmk, kmp, path, subdivided_claw
from .catalog import graph as named_graph
from .classes import in_class_N, in_class_S, is_cobipartite, is_linear_forest
from .errors import InternalConsistencyError, ParameterError
from .graph import Graph, disjoint_union
from .iso import canonical_key, contains_induced, is_isomorphic


class Classification(NamedTuple):
    """Verdict for a pair of forbidden graphs.

    ``verdict`` is ``"bounded"``, ``"unbounded"``, ``"open"`` or
    ``"unresolved"``; ``case_id`` names the clause (e.g. ``"6.1(xiii)"``),
    ``bound`` is a symbolic width bound for bounded verdicts,
    ``open_problem`` the open problem number, ``witness`` the matched
    graphs and parameters, ``provenance`` how the bound is realised.
    """

    verdict: str
    case_id: Optional[str] = None
    bound: Optional[str] = None
    open_problem: Optional[int] = None
    witness: Optional[str] = None
    provenance: Optional[str] = None

    def line(self):
        parts = [self.verdict, self.case_id or "-", self.bound or "-", self.witness or "-"]
        return " ".join(p.replace(" ", "") if i < 3 else p for i, p in enumerate(parts))

    def records(self):
        return [
            ("verdict", self.verdict),
            ("case", self.case_id or ""),
            ("bound", self.bound or ""),
            ("open_problem", self.open_problem or ""),
            ("witness", self.witness or ""),
            ("provenance", self.provenance or ""),
        ]


@lru_cache(maxsize=None)
def G(expr):
    """Cached catalog graph for a named-graph expression."""
    return named_graph(expr)


def sub(H, F):
    """``H`` is an induced subgraph of ``F``."""
    return H.n <= F.n and contains_induced(F, H)


def sup(H, F):
    """``H`` contains ``F`` as an induced subgraph."""
    return sub(F, H)


# nested families, indexed by their parameter

FAMILIES = {
    "K_r": complete,
    "sP1+P5": lambda s: disjoint_union(Graph(s), path(5)),
    "K_r-rP1": kmi,
    "K_r-P1": kmp,
    "tP2": lambda t: disjoint_union(*([path(2)] * t)) if t else Graph(0),
    "K_r-K_r": kmk,
    "sP1+P2": lambda s: disjoint_union(Graph(s), path(2)),
    "tP2+uP3": lambda k: disjoint_union(*([path(2)] * k + [path(3)] * k)),
}

_FAMILY_START = {"K_r": 1, "sP1+P5": 0, "K_r-rP1": 1, "K_r-P1": 1, "tP2": 1, "K_r-K_r": 1, "sP1+P2": 0, "tP2+uP3": 1}


@lru_cache(maxsize=None)
def family_graph(name, p):
    return FAMILIES[name](p)


def in_family(H, name):
    """``H`` sits inside some member of the family, tested at parameter ``|V(H)|``."""
    return sub(H, family_graph(name, max(H.n, _FAMILY_START[name])))


def min_param(H, name):
    """Least family parameter whose member contains ``H`` (``None`` if none does)."""
    for p in range(_FAMILY_START[name], max(H.n, _FAMILY_START[name]) + 1):
        if sub(H, family_graph(name, p)):
            return p
    return None


# clause tables

_PAW_MENU = ("K1,3+3P1", "K1,3+P2", "P1+P2+P3", "P1+P5", "P1+S1,1,2", "P2+P4", "P6", "S1,1,3", "S1,2,2")
_DIAMOND_MENU = ("P1+2P2", "3P1+P2", "P2+P3")

_CW = "prior-work clique-width bound"
_OWN = "certified decomposition"


def _menu(H, exprs):
    for e in exprs:
        if sub(H, G(e)):
            return e
    return None


def _co(e):
    return f"co({e})"


def _bounded_clauses(a, b):
    """Yield ``(case, bound, witness, provenance)`` for each bounded clause met by ``(a, b)``."""
    if sub(a, G("P4")):
        yield "6.1(i)", "cw-bounded", "H1<=P4", _CW
    hit = _menu(b, _PAW_MENU)
    if sub(a, G("paw")) and hit:
        yield "6.1(ii)", "cw-bounded", f"H1<=paw H2<={hit}", _CW
    hit = _menu(b, [_co(e) for e in _PAW_MENU])
    if sub(a, G("P1+P3")) and hit:
        yield "6.1(iii)", "cw-bounded", f"H1<=P1+P3 H2<={hit}", _CW
    hit = _menu(b, _DIAMOND_MENU)
    if sub(a, G("diamond")) and hit:
        yield "6.1(iv)", "cw-bounded", f"H1<=diamond H2<={hit}", _CW
    hit = _menu(b, [_co(e) for e in _DIAMOND_MENU])
    if sub(a, G("2P1+P2")) and hit:
        yield "6.1(v)", "cw-bounded", f"H1<=2P1+P2 H2<={hit}", _CW
    hit = _menu(b, ("P1+P4", "P5"))
    if sub(a, G("gem")) and hit:
        yield "6.1(vi)", "cw-bounded", f"H1<=gem H2<={hit}", _CW
    if sub(a, G("P1+P4")) and sub(b, G("co(P5)")):
        yield "6.1(vii)", "cw-bounded", "H1<=P1+P4 H2<=co(P5)", _CW
    if sub(a, G("K3+P1")) and sub(b, G("K1,3")):
        yield "6.1(viii)", "cw-bounded", "H1<=K3+P1 H2<=K1,3", _CW
    if sub(a, G("2P1+P3")) and sub(b, G("co(2P1+P3)")):
        yield "6.1(ix)", "cw-bounded", "H1<=2P1+P3 H2<=co(2P1+P3)", _CW
    if sub(a, G("2P1+P2")) and sub(b, G("bowtie")):
        yield "6.1(x)", "R(14,3)", "H1<=2P1+P2 H2<=bowtie", _OWN
    if sub(a, G("K1,3")) and sub(b, G("2P2")):
        yield "6.1(xi)", "6", "H1<=K1,3 H2<=2P2", _OWN
    if in_family(a, "K_r") and in_family(b, "sP1+P5"):
        r, s = min_param(a, "K_r"), min_param(b, "sP1+P5")
        yield "6.1(xii)", "cited", f"H1<=K{r} H2<={s}P1+P5", "cited"
    if in_family(a, "K_r-rP1") and sub(b, G("2P2")):
        r = min_param(a, "K_r-rP1")
        yield "6.1(xiii)", f"max{{6,{r}}}", f"H1<=KmI({r}) H2<=2P2", _OWN
    if in_family(a, "K_r-P1") and in_family(b, "tP2"):
        r, t = min_param(a, "K_r-P1"), min_param(b, "tP2")
        yield "6.1(xiv)", f"R({r},R({r},{t}))", f"H1<=KmP({r}) H2<={t}P2", _OWN
    if in_family(a, "K_r-K_r") and in_family(b, "sP1+P2"):
        r, s = min_param(a, "K_r-K_r"), min_param(b, "sP1+P2")
        yield "6.1(xv)", f"R(R({r},{s + 1}),{s + 1})", f"H1<=KmK({r}) H2<={s}P1+P2", _OWN


def _odd_antiholes(H):
    return [f"co(C{2 * s + 1})" for s in range(3, (H.n - 1) // 2 + 1)]


def _suns(H):
    return [f"sun({t})" for t in range(3, H.n // 2 + 1)]


def _contains_any(H, exprs):
    for e in exprs:
        if sup(H, G(e)):
            return e
    return None


def _unbounded_clauses(a, b):
    """Yield ``(case, witness)`` for each unbounded clause met by ``(a, b)``."""
    if not in_class_S(a) and not in_class_S(b):
        yield "6.2(i)", "H1,H2 not in S"
    hit = _contains_any(b, ("P3+P6", "P8", "S1,1,5"))
    if sup(a, G("C3")) and hit:
        yield "6.2(ii)", f"H1>=C3 H2>={hit}"
    if sup(a, G("K1,3")) and in_class_N(b):
        yield "6.2(iii)", "H1>=K1,3 H2 in N"
    hit = _contains_any(b, ("5P1", "P2+P4", "2P3", "P6"))
    if sup(a, G("diamond")) and hit:
        yield "6.2(iv)", f"H1>=diamond H2>={hit}"
    hit = _contains_any(b, ["3P1", "C5"] + _odd_antiholes(b))
    if sup(a, G("3P1")) and hit:
        yield "6.2(v)", f"H1>=3P1 H2>={hit}"
    hit = _contains_any(b, ("gem", "co(3P1+P2)", "co(P1+2P2)"))
    if sup(a, G("4P1")) and hit:
        yield "6.2(vi)", f"H1>=4P1 H2>={hit}"
    hit = _contains_any(b, ["C4", "C5", "K1,4", "2P2", "co(3P1+P2)"] + _suns(b))
    if sup(a, G("2P2")) and hit:
        yield "6.2(vii)", f"H1>=2P2 H2>={hit}"
    hit = _contains_any(b, ("P2+P4", "P6"))
    if sup(a, G("K4")) and hit:
        yield "6.2(viii)", f"H1>=K4 H2>={hit}"


_ROMAN = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv", "xv"]


def _clause_rank(case):
    return _ROMAN.index(case[case.index("(") + 1 : -1])


# open problem families


def _iso_any(H, graphs):
    return any(is_isomorphic(H, F) for F in graphs)


def _k13_plus(H, start):
    return H.n - 4 >= start and is_isomorphic(H, disjoint_union(complete_bipartite(1, 3), empty(H.n - 4)))


def _s112_plus(H):
    return H.n >= 5 and is_isomorphic(H, disjoint_union(subdivided_claw(1, 1, 2), empty(H.n - 5)))


def _open1(a, b):
    if is_isomorphic(a, G("2P2")):
        if _k13_plus(b, 1):
            return "H1=2P2 H2=K1,3+sP1"
        if _s112_plus(b):
            return "H1=2P2 H2=S1,1,2+sP1"
    return None


def _open2(a, b):
    n = b.n
    if is_isomorphic(a, G("P5")):
        options = [G("co(S1,1,2)")]
        for s in (1, 2):
            r = n - 1 - s
            if r >= 3:
                options.append(disjoint_union(complete_bipartite(1, r), empty(s)).complement())
        if _iso_any(b, options):
            return "H1=P5 H2=co(S1,1,2) or co(K1,r+sP1)"
    if _iso_any(b, [G("C3"), G("paw")]):
        claws = [
            subdivided_claw(h, i, j)
            for h in range(1, 5)
            for i in range(h, 5)
            for j in range(i, 5)
            if i + j <= 6 <= h + i + j and h + i + j + 1 == a.n
        ]
        if is_isomorphic(a, G("P7")) or _iso_any(a, claws):
            return "H1=P7 or S_h,i,j H2=C3 or paw"
    if is_isomorphic(b, G("hammer")) and _iso_any(a, [G("K1,3"), G("S1,1,2")]):
        return "H1=K1,3 or S1,1,2 H2=hammer"
    return None


def _short_linear_forest(H):
    """Induced subgraph of ``tP2 + uP3`` for some ``t, u``: a linear forest with components of at most three vertices."""
    return is_linear_forest(H) and all(len(c) <= 3 for c in H.components())


def _open3(a, b):
    if a.n >= 4 and is_isomorphic(a, complete(a.n)) and _short_linear_forest(b) and sup(b, G("P2+P3")):
        return f"H1=K{a.n} H2<=tP2+uP3"
    return None


def _is_co_kst_p1(H):
    """``H`` is the complement of ``K_{s,t} + P_1`` with ``s, t >= 2``."""
    C = H.complement()
    iso = [v for v in range(C.n) if C.degree(v) == 0]
    if len(iso) != 1:
        return False
    rest = C.delete_vertices(iso)
    for s in range(2, rest.n - 1):
        t = rest.n - s
        if t >= s and is_isomorphic(rest, complete_bipartite(s, t)):
            return True
    return False


def _open4(a, b):
    if a.n >= 4 and is_isomorphic(a, empty(a.n)) and _is_co_kst_p1(b):
        return f"H1={a.n}P1 H2=co(K_s,t+P1)"
    return None


_OPEN = ((1, _open1), (2, _open2), (3, _open3), (4, _open4))


def _check(H):
    if not isinstance(H, Graph):
        raise ParameterError("classifier arguments must be graphs")
    if H.n == 0:
        raise ParameterError("forbidden graphs must have at least one vertex")


def _roles(witness, swap):
    """Exchange the ``H1``/``H2`` labels of a witness string when ``swap`` is set."""
    if not swap:
        return witness
    out = witness.replace("H1", "\0").replace("H2", "H1").replace("\0", "H2")
    out = out.replace("H2,H1", "H1,H2")
    # keep the H1 condition first
    if out.startswith("H2") and " H1" in out:
        head, tail = out.split(" H1", 1)
        out = f"H1{tail} {head}"
    return out


def _first_bounded(a, b):
    found = [(case, bound, wit, prov) for case, bound, wit, prov in _bounded_clauses(a, b)]
    found += [(case, bound, _roles(wit, True), prov) for case, bound, wit, prov in _bounded_clauses(b, a)]
    return sorted(found, key=lambda c: _clause_rank(c[0]))


def _first_unbounded(a, b):
    found = list(_unbounded_clauses(a, b))
    found += [(case, _roles(wit, True)) for case, wit in _unbounded_clauses(b, a)]
    return sorted(found, key=lambda c: _clause_rank(c[0]))


def classify_pair(H1, H2):
    """Classify the ``(H1, H2)``-free graphs.

    Every bounded and unbounded clause is evaluated in both argument
    orders; a pair meeting both kinds raises
    :class:`InternalConsistencyError`. The arguments are put in a
    canonical order first, so the result is symmetric.

    Examples
    --------
    >>> from mimkit.catalog import graph
    >>> classify_pair(graph("2P2"), graph("C4")).case_id
    '6.2(vii)'
    """
    _check(H1)
    _check(H2)
    a, b = sorted((H1, H2), key=canonical_key)
    swapped = a is not H1
    bounded = _first_bounded(a, b)
    unbounded = _first_unbounded(a, b)
    if bounded and unbounded:
        raise InternalConsistencyError(f"pair meets bounded {bounded[0][0]} and unbounded {unbounded[0][0]}")
    if bounded:
        case, bound, wit, prov = bounded[0]
        return Classification("bounded", case, bound, None, _roles(wit, swapped), prov)
    if unbounded:
        case, wit = unbounded[0]
        return Classification("unbounded", case, None, None, _roles(wit, swapped), "witness family")
    for number, test in _OPEN:
        for x, y, flip in ((a, b, swapped), (b, a, not swapped)):
            wit = test(x, y)
            if wit:
                return Classification("open", f"OP{number}", None, number, _roles(wit, flip), "open problem")
    return Classification("unresolved")


def classify_kr(r, H):
    """Trichotomy for ``(K_r, H)``-free graphs with ``r >= 4``; smaller ``r`` go to :func:`classify_pair`.

    The open branch is read as containment in ``tP2 + uP3`` (with ``u >= 1``
    and ``t + u >= 2``), which is what is left once the other two branches
    fail.
    """
    _check(H)
    if r < 1:
        raise ParameterError("r must be positive")
    if r < 4:
        return classify_pair(complete(r), H)
    first = None
    if in_family(H, "sP1+P5"):
        first = ("6.1(xii)", f"H<={min_param(H, 'sP1+P5')}P1+P5")
    elif in_family(H, "tP2"):
        first = ("6.1(xiv)", f"H<={min_param(H, 'tP2')}P2")
    second = None
    if not in_class_S(H):
        second = ("6.2(i)", "H not in S")
    else:
        hit = _contains_any(H, ("K1,3", "P2+P4", "P6"))
        if hit:
            case = "6.2(iii)" if hit == "K1,3" else "6.2(viii)"
            second = (case, f"H>={hit}")
    third = _short_linear_forest(H) and sup(H, G("P2+P3"))
    matched = [x for x in (first, second, third) if x]
    if len(matched) != 1:
        raise InternalConsistencyError(f"(K{r}, H) matches {len(matched)} branches of the trichotomy")
    if first:
        bound = "cited" if first[0] == "6.1(xii)" else f"R({r},R({r},{min_param(H, 'tP2')}))"
        return Classification("bounded", first[0], bound, None, first[1], "6.6")
    if second:
        return Classification("unbounded", second[0], None, None, second[1], "6.6")
    return Classification("open", "OP3", None, 3, "H<=tP2+uP3", "6.6")


def classify_rp1(r, H):
    """Trichotomy for ``(rP_1, H)``-free graphs with ``r >= 5``; smaller ``r`` go to :func:`classify_pair`."""
    _check(H)
    if r < 1:
        raise ParameterError("r must be positive")
    if r < 5:
        return classify_pair(empty(r), H)
    first = in_family(H, "K_r-K_r")
    second = None
    if not is_cobipartite(H):
        second = ("6.2(v)", "H not co-bipartite")
    elif sup(H, G("diamond")):
        second = ("6.2(iv)", "H>=diamond")
    third = _is_co_kst_p1(H)
    matched = [x for x in (first, second, third) if x]
    if len(matched) != 1:
        raise InternalConsistencyError(f"({r}P1, H) matches {len(matched)} branches of the trichotomy")
    if first:
        t = min_param(H, "K_r-K_r")
        return Classification("bounded", "6.1(xv)", f"R(R({t},{r}),{r})", None, f"H<=KmK({t})", "6.7")
    if second:
        return Classification("unbounded", second[0], None, None, second[1], "6.7")
    return Classification("open", "OP4", None, 4, "H=co(K_s,t+P1)", "6.7")


def pairs_up_to(total, max_each=7):
    """All unordered pairs of isomorphism classes with ``|V(H1)| + |V(H2)| <= total``."""
    from .iso import enumerate_graphs

    graphs = []
    for n in range(1, min(total - 1, max_each) + 1):
        graphs += [(n, i, g) for i, g in enumerate(enumerate_graphs(n))]
    out = []
    for x in range(len(graphs)):
        for y in range(x, len(graphs)):
            if graphs[x][0] + graphs[y][0] <= total:
                out.append((graphs[x][2], graphs[y][2]))
    return out

