"""Verification lab: seeded property suites over exhaustive and random instances.

Each suite builds a deterministic list of instances from ``(seed, config)``
and checks every instance independently; results are aggregated in
instance order, so reports do not depend on worker scheduling. A run
produces a :class:`LabReport` that can be written as ``key = value``
records next to an append-only index.
"""

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, NamedTuple

from .catalog import graph as named_graph
from .catalog import kmk
from .classes import blocks, is_chordal_bipartite, proper_coloring
from .classifier import classify_pair, pairs_up_to
from .decomposers import (
    CUT_CHECK_LIMIT,
    CutBound,
    certify_cut_bound,
    decompose_2p1p2_bowtie,
    decompose_2p2_k13,
    decompose_blocks,
    decompose_multijoin,
)
from .decomposition import ORACLE_HARD_CAP, exact_mimw, oracle_cap
from .errors import InternalConsistencyError, MimkitError, ParameterError
from .fileio import write_graph6, write_records
from .graph import Graph
from .generators import (
    coloring3_violations,
    coloring4_violations,
    construct_gdoubleprime,
    construct_gprime,
    net_wall,
    netwall_coloring3,
    netwall_coloring4,
    padded_wall_spec,
    random_free_graph,
    random_graph,
)
from .iso import contains_induced, enumerate_graphs, find_induced
from .transforms import clique_implant, cliqueify_partition, delete_vertex, make_clique, subdivide_edge

DENSITIES = (0.2, 0.5, 0.8)


@dataclass(frozen=True)
class RunConfig:
    """Parameters of a lab run.

    ``max_n`` bounds instance sizes (for ``corollary65-sweep`` it is the
    total vertex count of a pair); suites needing the exact oracle never
    exceed ``oracle_cap``. ``budget`` is a wall-clock limit in seconds
    after which the report is flagged incomplete.
    """

    seed: int = 0
    trials: int = 200
    max_n: int = 8
    oracle_cap: int = ORACLE_HARD_CAP
    output_dir: str = None
    workers: int = 1
    budget: float = None

    def __post_init__(self):
        if not 0 < self.oracle_cap <= ORACLE_HARD_CAP:
            raise ParameterError(f"oracle_cap must be in 1..{ORACLE_HARD_CAP}")
        if self.trials < 0 or self.max_n < 1 or self.workers < 1:
            raise ParameterError("trials must be >= 0, max_n and workers >= 1")

    @property
    def cap(self):
        return min(self.oracle_cap, oracle_cap())


class Outcome(NamedTuple):
    """Result of checking one instance."""

    checks: int
    violations: tuple = ()
    width: int = None


@dataclass
class LabReport:
    experiment_id: str
    suite: str
    anchor: str
    seed: int
    trials: int
    max_n: int
    oracle_cap: int
    instances: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)
    max_width: int = None
    duration: float = 0.0
    complete: bool = True

    @property
    def ok(self):
        return self.complete and not self.violations

    def records(self):
        pairs = [
            ("experiment_id", self.experiment_id),
            ("suite", self.suite),
            ("anchor", self.anchor),
            ("seed", self.seed),
            ("trials", self.trials),
            ("max_n", self.max_n),
            ("oracle_cap", self.oracle_cap),
            ("instances", self.instances),
            ("checks", self.checks),
            ("violations", len(self.violations)),
            ("max_width", "-" if self.max_width is None else self.max_width),
            ("complete", "yes" if self.complete else "no"),
            ("status", "ok" if self.ok else "fail"),
            ("duration_s", f"{self.duration:.3f}"),
        ]
        pairs += [(f"violation.{i}", v) for i, v in enumerate(self.violations)]
        return pairs

    def summary(self):
        status = "ok" if self.ok else ("incomplete" if not self.complete else "FAIL")
        return (
            f"{self.suite}: {status} instances={self.instances} checks={self.checks} "
            f"violations={len(self.violations)} max_width={self.max_width} time={self.duration:.1f}s"
        )

    def write(self, directory):
        """Write ``<experiment_id>.txt`` (never overwriting) and append to ``index.txt``; returns the path."""
        os.makedirs(directory, exist_ok=True)
        path = os.path.join(directory, f"{self.experiment_id}.txt")
        k = 1
        while os.path.exists(path):
            k += 1
            path = os.path.join(directory, f"{self.experiment_id}.{k}.txt")
        with open(path, "w") as fh:
            fh.write(write_records(self.records()))
        with open(os.path.join(directory, "index.txt"), "a") as fh:
            status = "ok" if self.ok else "fail"
            fh.write(f"{self.experiment_id} {self.suite} {status} {len(self.violations)} {os.path.basename(path)}\n")
        return path


class Suite(NamedTuple):
    id: str
    anchor: str
    build: Callable
    check: Callable


# instance streams


def _rng(suite, cfg):
    return random.Random(f"{suite}:{cfg.seed}")


def _small_and_random(cfg, rng, exhaustive_max=6, random_min=7, limit=None):
    """All graphs up to ``exhaustive_max`` vertices, then ``trials`` ER graphs per size up to ``max_n``."""
    top = min(cfg.max_n, limit or cfg.max_n)
    out = []
    for n in range(1, min(exhaustive_max, top) + 1):
        out += enumerate_graphs(n)
    for n in range(random_min, top + 1):
        out += [random_graph(n, DENSITIES[i % 3], rng) for i in range(cfg.trials)]
    return out


def _tag(G):
    return write_graph6(G).strip()


def _bracket(name, G, effect, old, new, extra=""):
    if effect.holds(old, new):
        return ()
    return (f"{name} {_tag(G)}{extra}: {old} -> {new} outside {effect.bracket(old)}",)


# suite: vertex deletion


def _check_delete(instance):
    G, cap = instance
    old = exact_mimw(G)
    bad = []
    for v in range(G.n):
        R = delete_vertex(G, v)
        bad += _bracket("delete", G, R.effect, old, exact_mimw(R.graph), f" v={v}")
    return Outcome(G.n, tuple(bad), old)


def _build_oracle_graphs(suite, cfg, extra=0):
    rng = _rng(suite, cfg)
    return [(G, cfg.cap) for G in _small_and_random(cfg, rng, limit=cfg.cap - extra)]


# suite: edge subdivision


def _check_subdivide(instance):
    G, cap = instance
    old = exact_mimw(G)
    bad = []
    for e in G.edges():
        R = subdivide_edge(G, e, 1)
        bad += _bracket("subdivide", G, R.effect, old, exact_mimw(R.graph), f" e={e}")
    return Outcome(G.m, tuple(bad), old)


# suite: clique implant


def _check_implant(instance):
    G, cap = instance
    old = exact_mimw(G)
    bad = []
    checks = 0
    for v in range(G.n):
        d = G.degree(v)
        if d < 2 or G.n + d - 1 > cap:
            continue
        R = clique_implant(G, v)
        checks += 1
        bad += _bracket("implant", G, R.effect, old, exact_mimw(R.graph), f" v={v}")
    return Outcome(checks, tuple(bad), old)


# suite: clique-ifying a k-partition


def _build_kpartite(suite, cfg):
    rng = _rng(suite, cfg)
    out = []
    for n in range(1, min(6, cfg.max_n, cfg.cap) + 1):
        for G in enumerate_graphs(n):
            for k in (2, 3):
                col = proper_coloring(G, k)
                if col is not None:
                    out.append(((G, [[v for v in range(n) if col[v] == c] for c in range(k)]), cfg.cap))
    for n in range(7, min(cfg.max_n, cfg.cap) + 1):
        for i in range(cfg.trials):
            k = 2 + i % 2
            label = [rng.randrange(k) for _ in range(n)]
            p = DENSITIES[i % 3]
            edges = [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v] and rng.random() < p]
            classes = [[v for v in range(n) if label[v] == c] for c in range(k)]
            out.append(((Graph(n, edges), classes), cfg.cap))
    return out


def _check_kpartite(instance):
    (G, classes), cap = instance
    old = exact_mimw(G)
    R = cliqueify_partition(G, classes)
    k = sum(1 for c in classes if c)
    return Outcome(1, _bracket("cliqueify", G, R.effect, old, exact_mimw(R.graph), f" k={k}"), old)


# suite: make-clique


def _build_make_clique(suite, cfg):
    rng = _rng(suite, cfg)
    out = []
    for G in _small_and_random(cfg, rng, limit=cfg.cap):
        size = rng.randint(min(2, G.n), G.n)
        out.append(((G, sorted(rng.sample(range(G.n), size))), cfg.cap))
    return out


def _check_make_clique(instance):
    (G, S), cap = instance
    old = exact_mimw(G)
    R = make_clique(G, S)
    return Outcome(1, _bracket("make-clique", G, R.effect, old, exact_mimw(R.graph), f" S={S}"), old)


# suite: blocks


def _check_blocks(instance):
    G, cap = instance
    cert = decompose_blocks(G)
    per_block = max((exact_mimw(G.induced(b)) for b in blocks(G)), default=0)
    whole = exact_mimw(G)
    bad = []
    if cert.width != per_block or whole != per_block:
        bad.append(f"blocks {_tag(G)}: decomposition {cert.width}, max block {per_block}, exact {whole}")
    return Outcome(1, tuple(bad), cert.width)


# suite: multi-join


def _build_multijoin(suite, cfg):
    rng = _rng(suite, cfg)
    out = []
    top = min(cfg.max_n, cfg.cap)
    for i in range(cfg.trials):
        n = rng.randint(min(4, top), top)
        G = random_graph(n, DENSITIES[i % 3], rng)
        p = rng.randint(2, min(4, n))
        order = list(range(n))
        rng.shuffle(order)
        cuts = sorted(rng.sample(range(1, n), p - 1))
        parts = [order[a:b] for a, b in zip([0] + cuts, cuts + [n])]
        out.append(((G, parts), cfg.cap))
    return out


def _check_multijoin(instance):
    (G, parts), cap = instance
    try:
        cert = decompose_multijoin(G, parts)
    except InternalConsistencyError as exc:
        return Outcome(1, (f"multijoin {_tag(G)} parts={parts}: {exc}",))
    exact = exact_mimw(G)
    bad = []
    if exact > cert.width:
        bad.append(f"multijoin {_tag(G)}: decomposition {cert.width} below exact {exact}")
    return Outcome(1, tuple(bad), cert.width)


# suites: exhaustive cut bounds

_CUT_BOUNDS = {
    "thm41-cutbounds": CutBound("kmi", 3),
    "thm42-cutbounds": CutBound("kmp", 3, 2),
    "thm43-cutbounds": CutBound("kmk", 3, 1),
}


def _build_cut(suite, cfg):
    rng = _rng(suite, cfg)
    bound = _CUT_BOUNDS[suite]
    top = min(cfg.max_n, CUT_CHECK_LIMIT)
    out = []
    for i in range(cfg.trials):
        n = rng.randint(min(4, top), top)
        out.append(((random_free_graph(n, bound.forbidden(), rng), bound), None))
    return out


def _check_cut(instance):
    (G, bound), _ = instance
    rep = certify_cut_bound(G, bound)
    bad = tuple(f"cut {_tag(G)} X={X}: cutmim {v} >= {rep.strict_bound}" for X, v in rep.violations)
    return Outcome(rep.subsets, bad, rep.max_cutmim)


# suites: class algorithms


def _class_members(cfg, rng, forbidden, exhaustive_max=7):
    Fs = [named_graph(e) for e in forbidden]
    out = []
    for n in range(1, min(exhaustive_max, cfg.max_n) + 1):
        out += [G for G in enumerate_graphs(n) if not any(contains_induced(G, F) for F in Fs)]
    for n in range(exhaustive_max + 1, cfg.max_n + 1):
        out += [random_free_graph(n, forbidden, rng) for _ in range(cfg.trials)]
    return out


def _build_thm45(suite, cfg):
    return [(G, cfg.cap) for G in _class_members(cfg, _rng(suite, cfg), ("2P2", "K1,3"))]


def _check_thm45(instance):
    G, cap = instance
    cert = decompose_2p2_k13(G)
    bad = []
    has_net = find_induced(G, named_graph("net")) is not None
    if has_net and cert.width != 1:
        bad.append(f"2p2-k13 {_tag(G)}: net present but width {cert.width}")
    if not has_net and cert.width > 5:
        bad.append(f"2p2-k13 {_tag(G)}: net-free width {cert.width} > 5")
    if G.n <= cap:
        exact = exact_mimw(G)
        if exact > cert.width:
            bad.append(f"2p2-k13 {_tag(G)}: width {cert.width} below exact {exact}")
    return Outcome(1, tuple(bad), cert.width)


def _build_thm47(suite, cfg):
    out = [(G, cfg.cap, None) for G in _class_members(cfg, _rng(suite, cfg), ("2P1+P2", "bowtie"))]
    return out + [(kmk(r), cfg.cap, 2) for r in (5, 6, 7)]


def _check_thm47(instance):
    G, cap, expect = instance
    cert = decompose_2p1p2_bowtie(G)
    bad = []
    if expect is not None and cert.width != expect:
        bad.append(f"2p1p2-bowtie {_tag(G)}: width {cert.width}, expected {expect}")
    if G.n <= cap:
        exact = exact_mimw(G)
        if exact > cert.width:
            bad.append(f"2p1p2-bowtie {_tag(G)}: width {cert.width} below exact {exact}")
    return Outcome(1, tuple(bad), cert.width)


# suites: G' and G''


def _build_seeds(suite, cfg):
    return [G for n in range(1, min(6, cfg.max_n) + 1) for G in enumerate_graphs(n)]


def _check_gprime(G):
    H = construct_gprime(G)
    bad = []
    if (H.n, H.m) != (2 * G.n + 4 * G.m, G.n * G.n + 6 * G.m):
        bad.append(f"gprime {_tag(G)}: size {(H.n, H.m)}")
    if not is_chordal_bipartite(H):
        bad.append(f"gprime {_tag(G)}: not chordal bipartite")
    for e in ("P8", "P3+P6", "S1,1,5"):
        hit = find_induced(H, named_graph(e))
        if hit is not None:
            bad.append(f"gprime {_tag(G)}: induced {e} at {list(hit)}")
    return Outcome(4, tuple(bad))


def _check_gdoubleprime(G):
    H = construct_gdoubleprime(G)
    bad = []
    if (H.n, H.m) != (2 * G.n + 2 * G.m, G.n * G.n + 4 * G.m):
        bad.append(f"gdoubleprime {_tag(G)}: size {(H.n, H.m)}")
    for e in ("K4", "diamond", "P6", "P2+P4"):
        hit = find_induced(H, named_graph(e))
        if hit is not None:
            bad.append(f"gdoubleprime {_tag(G)}: induced {e} at {list(hit)}")
    return Outcome(4, tuple(bad))


# suites: net-wall colourings


def _build_walls(suite, cfg):
    top = max(2, min(cfg.max_n, 6))
    return [(h, r) for h in range(2, top + 1) for r in range(2, top + 1)]


def _check_coloring(instance, k):
    h, r = instance
    W = net_wall(padded_wall_spec(h, r))
    try:
        col = netwall_coloring4(W) if k == 4 else netwall_coloring3(W)
    except (MimkitError, AssertionError) as exc:
        return Outcome(1, (f"coloring{k} padded({h},{r}): {exc}",))
    bad = coloring4_violations(W, col) if k == 4 else coloring3_violations(W, col)
    return Outcome(W.n, tuple(f"coloring{k} padded({h},{r}): {b}" for b in bad[:5]))


def _check_coloring4(instance):
    return _check_coloring(instance, 4)


def _check_coloring3(instance):
    return _check_coloring(instance, 3)


# suite: classification sweep


def _build_sweep(suite, cfg):
    pairs = pairs_up_to(cfg.max_n)
    size = 64
    return [pairs[i : i + size] for i in range(0, len(pairs), size)]


def _check_sweep(chunk):
    bad = []
    for a, b in chunk:
        try:
            c = classify_pair(a, b)
        except InternalConsistencyError as exc:
            bad.append(f"classify {_tag(a)} {_tag(b)}: {exc}")
            continue
        if c.verdict not in ("bounded", "unbounded"):
            bad.append(f"classify {_tag(a)} {_tag(b)}: {c.verdict} {c.case_id}")
    return Outcome(len(chunk), tuple(bad))


def _oracle(check, extra=0):
    return lambda suite, cfg: _build_oracle_graphs(suite, cfg, extra), check


SUITES = {}


def _register(id, anchor, build, check):
    SUITES[id] = Suite(id, anchor, build, check)


_register("lemma31", "vertex deletion: mimw(G) - 1 <= mimw(G - v) <= mimw(G)", *_oracle(_check_delete))
_register("lemma32", "edge subdivision: mimw(G) <= mimw(G') <= mimw(G) + 1", *_oracle(_check_subdivide, 1))
_register("lemma33", "clique implant: mimw(G) <= mimw(G') <= mimw(G) + d(v)", *_oracle(_check_implant))
_register("lemma34", "clique-ifying a k-partition: mimw(G') >= mimw(G) / k", _build_kpartite, _check_kpartite)
_register("lemma36", "make-clique: mimw(G') <= mimw(G) + 1", _build_make_clique, _check_make_clique)
_register("lemma35-blocks", "mimw(G) is the maximum over the blocks", *_oracle(_check_blocks))
_register("lemma37-multijoin", "multi-join decomposition within its bound", _build_multijoin, _check_multijoin)
_register("thm41-cutbounds", "(K3 - 3P1, 2P2)-free: every cut below max{6,3}", _build_cut, _check_cut)
_register("thm42-cutbounds", "(K3 - P1, 2P2)-free: every cut below R(3,R(3,2))", _build_cut, _check_cut)
_register("thm43-cutbounds", "(K3 - K3, P1+P2)-free: every cut below R(R(3,2),2)", _build_cut, _check_cut)
_register("thm45-alg", "(2P2, K1,3)-free: width 1 with a net, at most 5 without", _build_thm45, _check_thm45)
_register("thm47-alg", "(2P1+P2, bowtie)-free: width 2 on K_r - K_r", _build_thm47, _check_thm47)
_register("gprime-freeness", "G' is chordal bipartite and (P8, P3+P6, S1,1,5)-free", _build_seeds, _check_gprime)
_register("gdoubleprime-freeness", "G'' is (K4, diamond, P6, P2+P4)-free", _build_seeds, _check_gdoubleprime)
_register("coloring4", "padded net-wall 4-colouring: independent, no shared neighbours", _build_walls, _check_coloring4)
_register("coloring3", "padded net-wall 3-colouring: no bichromatic P5, bulls meet classes <= 2", _build_walls, _check_coloring3)
_register("corollary65-sweep", "every pair up to max_n total vertices is bounded or unbounded", _build_sweep, _check_sweep)

ALIASES = {"thm41": "thm41-cutbounds", "thm42": "thm42-cutbounds", "thm43": "thm43-cutbounds"}


def _run_one(args):
    suite, instance = args
    return SUITES[suite].check(instance)


def lab_run(suite_id, config=None):
    """Run one suite and return its :class:`LabReport` (written to ``config.output_dir`` if set).

    Examples
    --------
    >>> lab_run("gdoubleprime-freeness", RunConfig(max_n=4)).violations
    []
    """
    cfg = config or RunConfig()
    suite_id = ALIASES.get(suite_id, suite_id)
    if suite_id not in SUITES:
        raise ParameterError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    suite = SUITES[suite_id]
    start = time.perf_counter()
    instances = suite.build(suite_id, cfg)
    report = LabReport(
        f"{suite_id}-seed{cfg.seed}-t{cfg.trials}-n{cfg.max_n}",
        suite_id,
        suite.anchor,
        cfg.seed,
        cfg.trials,
        cfg.max_n,
        cfg.cap,
    )

    def consume(outcomes):
        for out in outcomes:
            report.instances += 1
            report.checks += out.checks
            report.violations.extend(out.violations)
            if out.width is not None:
                report.max_width = max(out.width, report.max_width or 0)
            if cfg.budget is not None and time.perf_counter() - start > cfg.budget:
                report.complete = report.instances == len(instances)
                return

    tasks = [(suite_id, x) for x in instances]
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            consume(pool.map(_run_one, tasks, chunksize=max(1, len(tasks) // (4 * cfg.workers))))
            pool.shutdown(cancel_futures=True)
    else:
        consume(map(_run_one, tasks))
    report.duration = time.perf_counter() - start
    if cfg.output_dir:
        report.write(cfg.output_dir)
    return report
