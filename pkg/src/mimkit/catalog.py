"""Named small graphs and the textual expression grammar.

Grammar (case-insensitive, whitespace ignored)::

    expr := term ("+" term)*
    term := [int] atom
    atom := P<k> | C<k> | K<k> | K<a>,<b> | S<h>,<i>,<j> | sun(<t>)
          | KmK(<r>) | KmI(<r>) | KmP(<r>) | co(expr) | name
    name := diamond | paw | bull | gem | hammer | bowtie | net

``KmK(r)`` is two disjoint ``K_r`` joined by a perfect matching, ``KmI(r)``
is ``K_r`` with a pendant vertex at every clique vertex and ``KmP(r)`` is
``K_r`` with a single pendant vertex.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError, ParseError
from .graph import Graph, disjoint_union


def path(k):
    if k < 1:
        raise ParameterError("P<k> needs k >= 1")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k):
    if k < 3:
        raise ParameterError("C<k> needs k >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k):
    if k < 1:
        raise ParameterError("K<k> needs k >= 1")
    return Graph(k, combinations(range(k), 2))


def empty(k):
    if k < 1:
        raise ParameterError("kP1 needs k >= 1")
    return Graph(k)


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise ParameterError("K<a>,<b> needs a, b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def subdivided_claw(h, i, j):
    """``S_{h,i,j}``: three paths of ``h``, ``i`` and ``j`` edges from a centre."""
    if not 1 <= h <= i <= j:
        raise ParameterError("S<h>,<i>,<j> needs 1 <= h <= i <= j")
    edges = []
    nxt = 1
    for leg in (h, i, j):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def sun(t):
    """Clique ``u_0..u_{t-1}`` plus ``v_i`` adjacent to ``u_i`` and ``u_{i+1}``."""
    if t < 3:
        raise ParameterError("sun(t) needs t >= 3")
    edges = list(combinations(range(t), 2))
    for i in range(t):
        edges += [(t + i, i), (t + i, (i + 1) % t)]
    return Graph(2 * t, edges)


def kmk(r):
    """Two cliques ``a_i = i`` and ``b_i = r + i`` joined by ``a_i b_i``."""
    if r < 1:
        raise ParameterError("KmK(r) needs r >= 1")
    edges = list(combinations(range(r), 2)) + list(combinations(range(r, 2 * r), 2))
    edges += [(i, r + i) for i in range(r)]
    return Graph(2 * r, edges)


def kmi(r):
    """Clique ``a_i = i`` with a pendant ``b_i = r + i`` at each ``a_i``."""
    if r < 1:
        raise ParameterError("KmI(r) needs r >= 1")
    edges = list(combinations(range(r), 2)) + [(i, r + i) for i in range(r)]
    return Graph(2 * r, edges)


def kmp(r):
    """Clique on ``0..r-1`` plus vertex ``r`` pendant at ``0``."""
    if r < 1:
        raise ParameterError("KmP(r) needs r >= 1")
    return Graph(r + 1, list(combinations(range(r), 2)) + [(0, r)])


NAMED = {
    "diamond": lambda: Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "paw": lambda: Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
    "bull": lambda: Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]),
    "gem": lambda: Graph(5, [(0, 1), (1, 2), (2, 3)] + [(4, i) for i in range(4)]),
    "hammer": lambda: Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]),
    "bowtie": lambda: Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
    "net": lambda: kmi(3),
}


# expression trees


@dataclass(frozen=True)
class Atom:
    kind: str
    params: tuple = ()

    def __str__(self):
        k, p = self.kind, self.params
        if k in ("P", "C", "K") and len(p) == 1:
            return f"{k}{p[0]}"
        if k in ("K", "S"):
            return k + ",".join(map(str, p))
        if k in ("sun", "KmK", "KmI", "KmP"):
            return f"{k}({p[0]})"
        return k


@dataclass(frozen=True)
class Mult:
    count: int
    body: object

    def __str__(self):
        return f"{self.count}{self.body}"


@dataclass(frozen=True)
class Sum:
    terms: tuple

    def __str__(self):
        return "+".join(map(str, self.terms))


@dataclass(frozen=True)
class Co:
    body: object

    def __str__(self):
        return f"co({self.body})"


def realize(expr):
    """Turn an expression tree (or a string) into a :class:`Graph`."""
    if isinstance(expr, str):
        expr = parse(expr)
    if isinstance(expr, Sum):
        return disjoint_union(*(realize(t) for t in expr.terms))
    if isinstance(expr, Mult):
        if expr.count < 1:
            raise ParameterError("multiplicity must be >= 1")
        g = realize(expr.body)
        return disjoint_union(*([g] * expr.count))
    if isinstance(expr, Co):
        return realize(expr.body).complement()
    k, p = expr.kind, expr.params
    if k == "P":
        return path(*p)
    if k == "C":
        return cycle(*p)
    if k == "K":
        return complete(*p) if len(p) == 1 else complete_bipartite(*p)
    if k == "S":
        return subdivided_claw(*p)
    if k == "sun":
        return sun(*p)
    if k == "KmK":
        return kmk(*p)
    if k == "KmI":
        return kmi(*p)
    if k == "KmP":
        return kmp(*p)
    return NAMED[k]()


class _Parser:
    def __init__(self, text):
        # keep a map back to original positions for error messages
        self.chars = []
        self.pos = []
        for i, ch in enumerate(text):
            if not ch.isspace():
                self.chars.append(ch.lower())
                self.pos.append(i)
        self.s = "".join(self.chars)
        self.i = 0
        self.text = text

    def where(self):
        return self.pos[self.i] if self.i < len(self.pos) else len(self.text)

    def fail(self, msg):
        raise ParseError(msg, self.where())

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else ""

    def take(self, lit):
        if self.s.startswith(lit, self.i):
            self.i += len(lit)
            return True
        return False

    def expect(self, lit):
        if not self.take(lit):
            self.fail(f"expected {lit!r}")

    def integer(self):
        j = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.fail("expected an integer")
        return int(self.s[j:self.i])

    def expr(self):
        terms = [self.term()]
        while self.take("+"):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        count = None
        if self.peek().isdigit():
            start = self.i
            count = self.integer()
            if count < 1:
                self.i = start
                self.fail("multiplicity must be >= 1")
        body = self.atom()
        return body if count is None else Mult(count, body)

    def paren_int(self):
        self.expect("(")
        v = self.integer()
        self.expect(")")
        return v

    def atom(self):
        start = self.i
        for name in NAMED:
            if self.take(name):
                return Atom(name)
        try:
            if self.take("co("):
                body = self.expr()
                self.expect(")")
                return Co(body)
            if self.take("sun"):
                return _checked(Atom("sun", (self.paren_int(),)))
            for key in ("kmk", "kmi", "kmp"):
                if self.take(key):
                    return _checked(Atom("Km" + key[2].upper(), (self.paren_int(),)))
            ch = self.peek()
            if ch in ("p", "c", "k", "s"):
                self.i += 1
                nums = [self.integer()]
                while self.take(","):
                    nums.append(self.integer())
                kind = ch.upper()
                allowed = {"P": (1,), "C": (1,), "K": (1, 2), "S": (3,)}[kind]
                if len(nums) not in allowed:
                    self.i = start
                    self.fail(f"wrong number of parameters for {kind}")
                return _checked(Atom(kind, tuple(nums)))
        except ParameterError as exc:
            raise ParseError(str(exc), self.pos[start] if start < len(self.pos) else start)
        self.fail("unknown graph name")

    def parse(self):
        if not self.s:
            raise ParseError("empty expression", 0)
        e = self.expr()
        if self.i != len(self.s):
            self.fail("unexpected trailing input")
        return e


def _checked(atom):
    realize(atom)
    return atom


def parse(text):
    """Parse a named-graph expression into an expression tree.

    Raises
    ------
    ParseError
        On malformed input or out-of-domain parameters; the message carries
        the character position.

    Examples
    --------
    >>> str(parse("2 P2 + co(C4+P1)"))
    '2P2+co(C4+P1)'
    """
    return _Parser(text).parse()


def graph(text):
    """Shorthand for ``realize(parse(text))``."""
    return realize(parse(text))
