"""Command-line front end: ``mimkit <subcommand> ...``."""

import argparse
import os
import sys

from . import catalog, generators
from .classifier import classify_kr, classify_pair, classify_rp1
from .decomposers import decompose_2p1p2_bowtie, decompose_2p2_k13, decompose_blocks, decompose_multijoin
from .decomposition import ORACLE_HARD_CAP, cutmim, solve_mimw
from .errors import (
    ClassViolationError,
    DecompositionError,
    MimkitError,
    ParameterError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)
from .fileio import read_graph, write_bdecomp, write_edgelist, write_graph6, write_meta, write_records
from .iso import enumerate_graphs
from .lab import SUITES, RunConfig, lab_run
from .transforms import apply_pipeline

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_SIZE = 4
EXIT_CLASS = 5
EXIT_LAB = 6

EPILOG = """\
graphs are read from a file (EDGELIST v1 or graph6), '-' for stdin, or
given inline as a named-graph expression such as "2P2+P1" or "co(C5)".

exit codes:
  0  success
  1  internal error
  2  usage or parameter error
  3  malformed input file or expression
  4  input over a size cap
  5  input outside the required graph class, or a failed precondition
  6  lab run found violations (or ran out of budget)
"""


class UsageError(Exception):
    pass


def load_graph(arg):
    """Graph from a path, ``-`` (stdin) or a named-graph expression."""
    if arg == "-":
        return read_graph(sys.stdin.read())
    if os.path.exists(arg):
        with open(arg) as fh:
            return read_graph(fh.read())
    return catalog.graph(arg)


def emit(text, out=None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def format_graph(G, fmt):
    return write_graph6(G) + "\n" if fmt == "graph6" else write_edgelist(G)


def _ints(values, count, name):
    if len(values) != count:
        raise UsageError(f"{name} takes {count} integer parameter(s)")
    try:
        return [int(x) for x in values]
    except ValueError:
        raise UsageError(f"{name} parameters must be integers")


GEN_FAMILIES = (
    "named EXPR",
    "grid H W",
    "wall H R",
    "net-wall H R",
    "padded-net-wall H R [K]",
    "gprime SEED",
    "gdoubleprime SEED",
    "witness FAMILY K",
)


def _gen_graph(args):
    fam, params = args.family, args.params
    if fam == "named":
        if len(params) != 1:
            raise UsageError("named takes one expression")
        return catalog.graph(params[0])
    if fam == "grid":
        return generators.grid(*_ints(params, 2, fam))
    if fam == "wall":
        return generators.wall(*_ints(params, 2, fam))
    if fam == "net-wall":
        return generators.net_wall(*_ints(params, 2, fam))
    if fam == "padded-net-wall":
        if len(params) not in (2, 3):
            raise UsageError("padded-net-wall takes H R and an optional padding K")
        vals = _ints(params, len(params), fam)
        return generators.net_wall(generators.padded_wall_spec(*vals))
    if fam in ("gprime", "gdoubleprime"):
        if len(params) != 1:
            raise UsageError(f"{fam} takes one seed graph")
        seed = load_graph(params[0])
        build = generators.construct_gprime if fam == "gprime" else generators.construct_gdoubleprime
        return build(seed)
    if fam == "witness":
        if len(params) != 2:
            raise UsageError("witness takes a family id and a size parameter")
        return generators.witness(params[0], _ints(params[1:], 1, fam)[0], budget=args.budget)
    raise UsageError(f"unknown family {fam!r}; known: {', '.join(GEN_FAMILIES)}")


def cmd_gen(args):
    G = _gen_graph(args)
    if args.coloring:
        col = generators.netwall_coloring4(G) if args.coloring == 4 else generators.netwall_coloring3(G)
        G = G.with_meta(coloring=list(col.class_of))
    emit(format_graph(G, args.format), args.out)
    if args.meta:
        emit(write_meta(G), args.meta)
    return EXIT_OK


def cmd_transform(args):
    G = load_graph(args.input)
    R = apply_pipeline(G, args.pipeline)
    emit(format_graph(R.graph, args.format), args.out)
    e = R.effect
    factor = "-" if e.lower_factor is None else str(e.lower_factor)
    lo = "-" if e.lower_add is None else f"{e.lower_add:+d}"
    hi = "-" if e.upper_add is None else f"{e.upper_add:+d}"
    print(f"effect lower {lo} upper {hi} factor {factor}", file=sys.stderr)
    if args.meta:
        emit(write_meta(R.graph), args.meta)
    return EXIT_OK


def _vertex_list(text):
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.replace(" ", ",").split(",") if x]
    except ValueError:
        raise ParseError(f"vertex set must be comma-separated integers, got {text!r}")


def cmd_cutmim(args):
    G = load_graph(args.input)
    print(cutmim(G, _vertex_list(args.X)))
    return EXIT_OK


def cmd_mimw(args):
    G = load_graph(args.input)
    res = solve_mimw(G)
    print(res.width)
    if args.decomposition and res.decomposition is not None:
        emit(write_bdecomp(res.decomposition), args.decomposition)
    return EXIT_OK


def cmd_decompose(args):
    G = load_graph(args.input)
    if args.cls == "2p2-k13":
        cert = decompose_2p2_k13(G)
    elif args.cls == "2p1p2-bowtie":
        cert = decompose_2p1p2_bowtie(G)
    elif args.cls == "blocks":
        cert = decompose_blocks(G)
    else:
        if not args.parts:
            raise UsageError("multijoin needs --parts, e.g. --parts '0,1;2,3'")
        parts = [_vertex_list(p) for p in args.parts.split(";")]
        cert = decompose_multijoin(G, parts, c=args.c)
    emit(write_bdecomp(cert.decomposition), args.out)
    print(cert.certificate_line())
    return EXIT_OK


def cmd_classify(args):
    if args.kr is not None or args.rp1 is not None:
        if len(args.graphs) != 1 or (args.kr is not None and args.rp1 is not None):
            raise UsageError("--kr/--rp1 take exactly one graph and exclude each other")
        H = load_graph(args.graphs[0])
        c = classify_kr(args.kr, H) if args.kr is not None else classify_rp1(args.rp1, H)
    else:
        if len(args.graphs) != 2:
            raise UsageError("classify takes two graphs")
        c = classify_pair(load_graph(args.graphs[0]), load_graph(args.graphs[1]))
    if args.format == "records":
        sys.stdout.write(write_records(c.records()))
    else:
        print(c.line())
    return EXIT_OK


def cmd_enumerate(args):
    fmt = args.format or "graph6"
    chunks = [format_graph(G, fmt) for G in enumerate_graphs(args.n)]
    emit(("\n" if fmt == "edgelist" else "").join(chunks), args.out)
    return EXIT_OK


def cmd_lab(args):
    if args.suite == "list":
        for s in SUITES.values():
            print(f"{s.id}: {s.anchor}")
        return EXIT_OK
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        cfg = RunConfig(
            seed=args.seed,
            trials=args.trials,
            max_n=args.max_n,
            oracle_cap=args.oracle_cap,
            output_dir=args.out,
            workers=args.workers,
            budget=args.budget,
        )
        report = lab_run(name, cfg)
        print(report.summary())
        for v in report.violations[:10]:
            print(f"  {v}")
        failed |= not report.ok
    return EXIT_LAB if failed else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="mimkit",
        description="Mim-width toolkit: exact widths, transforms, decompositions, witnesses and classification.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def graph_out(sp):
        sp.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
        sp.add_argument("--out", help="output file (default stdout)")
        sp.add_argument("--meta", help="write partition/coordinate metadata as key = value records")

    g = sub.add_parser("gen", help="generate a graph", description="families: " + "; ".join(GEN_FAMILIES))
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.add_argument("--coloring", type=int, choices=(3, 4), help="attach a net-wall colouring to the metadata")
    g.add_argument("--budget", type=int, default=generators.WITNESS_BUDGET, help="largest witness in vertices")
    graph_out(g)
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("transform", help="apply a rewrite pipeline, e.g. 'subdivide-all:1; make-clique:A'")
    t.add_argument("pipeline")
    t.add_argument("input", nargs="?", default="-")
    graph_out(t)
    t.set_defaults(func=cmd_transform)

    c = sub.add_parser("cutmim", help="induced matching across the cut (X, V - X)")
    c.add_argument("input")
    c.add_argument("X", help="comma-separated vertices")
    c.set_defaults(func=cmd_cutmim)

    m = sub.add_parser("mimw", help=f"exact mim-width (at most {ORACLE_HARD_CAP} vertices)")
    m.add_argument("input")
    m.add_argument("--decomposition", help="write an optimal decomposition (BDECOMP v1) here")
    m.set_defaults(func=cmd_mimw)

    d = sub.add_parser("decompose", help="certified decomposition for a graph class")
    d.add_argument("--class", dest="cls", required=True, choices=("2p2-k13", "2p1p2-bowtie", "blocks", "multijoin"))
    d.add_argument("input")
    d.add_argument("--parts", help="multijoin partition, parts separated by ';'")
    d.add_argument("--c", type=int, help="multijoin pairwise cut bound (default: computed)")
    d.add_argument("--out", help="write BDECOMP here (default stdout, before the certificate line)")
    d.set_defaults(func=cmd_decompose)

    k = sub.add_parser("classify", help="bounded / unbounded / open verdict for (H1, H2)-free graphs")
    k.add_argument("graphs", nargs="+")
    k.add_argument("--kr", type=int, help="classify (K_r, H)-free graphs for this r")
    k.add_argument("--rp1", type=int, help="classify (rP1, H)-free graphs for this r")
    k.add_argument("--format", choices=("line", "records"), default="line")
    k.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate", help="all graphs on n vertices up to isomorphism")
    e.add_argument("n", type=int)
    e.add_argument("--format", choices=("edgelist", "graph6"))
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    lab = sub.add_parser("lab", help="run verification suites ('list' shows them, 'all' runs every one)")
    lab.add_argument("suite")
    lab.add_argument("--seed", type=int, default=0)
    lab.add_argument("--trials", type=int, default=200)
    lab.add_argument("--max-n", type=int, default=8)
    lab.add_argument("--oracle-cap", type=int, default=ORACLE_HARD_CAP)
    lab.add_argument("--workers", type=int, default=1)
    lab.add_argument("--budget", type=float, help="seconds per suite before the report is flagged incomplete")
    lab.add_argument("--out", help="report directory")
    lab.set_defaults(func=cmd_lab)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ParseError, DecompositionError) as exc:
        code, msg = EXIT_INPUT, exc
    except SizeLimitError as exc:
        code, msg = EXIT_SIZE, exc
    except (ClassViolationError, PreconditionError) as exc:
        code, msg = EXIT_CLASS, exc
    except ParameterError as exc:
        code, msg = EXIT_USAGE, exc
    except (MimkitError, OSError) as exc:
        code, msg = EXIT_OTHER, exc
    print(f"mimkit: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
