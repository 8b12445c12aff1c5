"""``spancom`` command line.

Exit status: 0 on success, 1 when a verification check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError
from .graph import attachment_shape, format_edge_list, make_unicyclic, parse_edge_list
from .trees import count_spanning_trees_kirchhoff, enumerate_spanning_trees
from .unicyclic import UnicyclicParams
from .verify import closed_form_report, graph_report, run_verification

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _load_graph(args):
    if args.input is not None:
        if args.input == "-":
            return parse_edge_list(sys.stdin.read())
        with open(args.input, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if args.n is None or args.m is None:
        raise InputError("give --input PATH or both --n and --m")
    return _generate(args.n, args.m, args.attachment).base


def _generate(n, m, shape):
    UnicyclicParams(n, m)
    return make_unicyclic(n, m, attachment_shape(n, m, shape))


def cmd_gen(args, out):
    n = args.n if args.n is not None else args.n_pos
    m = args.m if args.m is not None else args.m_pos
    shape = args.attachment or args.shape_pos or "chain"
    if n is None or m is None:
        raise InputError("gen needs n and m")
    u = _generate(n, m, shape)
    text = format_edge_list(u.base, comment=f"unicyclic n={n} m={m} attachment={shape}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"n={n} m={m}\n")
    else:
        out.write(text)
    return EXIT_OK


def cmd_trees(args, out):
    g = _load_graph(args)
    if args.count_only:
        count = count_spanning_trees_kirchhoff(g)
        out.write(dump_json({"count": count}) if args.json else f"{count}\n")
        return EXIT_OK
    trees = enumerate_spanning_trees(g)
    if args.json:
        out.write(dump_json({"count": len(trees), "trees": [list(t) for t in trees]}))
    else:
        for t in trees:
            out.write(" ".join(map(str, t)) + "\n")
        out.write(f"# {len(trees)} spanning trees\n")
    return EXIT_OK


def cmd_report(args, out):
    if args.closed_form:
        if args.n is None or args.m is None:
            raise InputError("--closed-form needs --n and --m")
        UnicyclicParams(args.n, args.m)
        doc = closed_form_report(args.n, args.m)
    else:
        doc = graph_report(_load_graph(args))
    out.write(dump_json(doc))
    return EXIT_OK


def cmd_verify(args, out):
    n_max = args.n_max if args.n_max is not None else (args.n if args.n is not None else 9)
    if n_max < 3:
        raise InputError("verify needs n_max >= 3")
    if args.expand_to < 0:
        raise InputError("--expand-to must be >= 0")
    reports = run_verification(n_max, args.expand_to)
    ok = True
    for rep in reports:
        ok &= rep.overall
        if args.json:
            out.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")
            continue
        for chk in rep.checks:
            flag = "PASS" if chk.match else "FAIL"
            out.write(f"{flag} n={rep.n} m={rep.m} {rep.attachment:<5} {chk.name}\n")
    if not args.json:
        failed = sum(not r.overall for r in reports)
        out.write(f"# {len(reports)} cells, {failed} failing\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spancom", description="Spanning simplicial complexes of graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_source(p):
        p.add_argument("--input", metavar="PATH", help="edge-list file, or - for stdin")
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--attachment", default="chain", help="chain | star | seed:K")

    p = sub.add_parser("gen", help="write a uni-cyclic graph as an edge list")
    p.add_argument("n_pos", nargs="?", type=int, metavar="n")
    p.add_argument("m_pos", nargs="?", type=int, metavar="m")
    p.add_argument("shape_pos", nargs="?", metavar="attachment")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--attachment")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("trees", help="list the spanning trees")
    graph_source(p)
    p.add_argument("--count-only", action="store_true", help="print the matrix-tree count only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("report", help="JSON summary of the spanning complex")
    graph_source(p)
    p.add_argument("--closed-form", action="store_true", help="use the uni-cyclic formulas only")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="check the closed forms against brute force")
    p.add_argument("n_max", nargs="?", type=int)
    p.add_argument("--n", type=int, help="same as n_max")
    p.add_argument("--expand-to", type=int, default=12, metavar="J")
    p.add_argument("--json", action="store_true", help="one JSON record per cell")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, OSError) as exc:
        print(f"spancom: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
