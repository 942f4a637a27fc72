"""Command line front end.

Exit codes: 0 on success, 1 when ``verify`` reports FAIL, 2 on bad input.
"""
from __future__ import annotations

import argparse
import io
import sys
from contextlib import redirect_stdout

from . import generators
from .formulas import gamma_sp_formula, nsp_formula
from .io import GraphFormatError, format_graph, read_graph, write_graph
from .products import GlueSpec, HajosSpec, chain, corona, hajos_sum, neighbourhood_corona, r_glue
from .solver import (
    SizeGuardError,
    count_min_super_dom,
    domination_number,
    enumerate_min_super_dom,
    partition_decomposition,
    super_domination_number,
)
from .verify import (
    verify_chain2,
    verify_glue,
    verify_hajos,
    verify_ncorona,
    verify_prop_disconnect,
    verify_thm1,
)


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    values = _int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return values[0], values[1]


def _fmt(vertices) -> str:
    return ",".join(str(v) for v in vertices)


def _emit_graph(g, out: str | None) -> None:
    if out:
        write_graph(g, out)
    else:
        sys.stdout.write(format_graph(g))


def _need(files: list[str], count: int, what: str) -> None:
    if len(files) != count:
        raise UsageError(f"{what} takes {count} graph file(s), got {len(files)}")


def _default_edge(g) -> tuple[int, int]:
    edges = g.edges()
    if not edges:
        raise UsageError("graph has no edges")
    return edges[0]


def _default_anchor(g) -> tuple[int, int]:
    if g.n < 2:
        raise UsageError("chain anchors need graphs with at least two vertices")
    return 0, g.n - 1


def cmd_gen(args) -> int:
    _emit_graph(generators.generate(args.kind, *args.params), args.output)
    return 0


def cmd_solve(args) -> int:
    res = super_domination_number(read_graph(args.file))
    print(f"gamma_sp={res.value}")
    print(f"witness={_fmt(res.witness)}")
    return 0


def cmd_gamma(args) -> int:
    print(f"gamma={domination_number(read_graph(args.file)).value}")
    return 0


def cmd_count(args) -> int:
    g = read_graph(args.file)
    print(f"N_sp={count_min_super_dom(g, workers=args.threads, allow_large=args.allow_large)}")
    return 0


def cmd_enumerate(args) -> int:
    for s in enumerate_min_super_dom(read_graph(args.file), allow_large=args.allow_large):
        print(_fmt(s))
    return 0


def cmd_decompose(args) -> int:
    dec = partition_decomposition(read_graph(args.file), args.set)
    print(f"S'={_fmt(dec.s_prime)}")
    print(f"D={_fmt(dec.d)}")
    print("f=" + ",".join(f"{a}->{b}" for a, b in dec.f))
    return 0


def cmd_product(args) -> int:
    graphs = [read_graph(path) for path in args.files]
    kind = args.kind
    if kind == "chain":
        if len(graphs) < 2:
            raise UsageError("chain takes at least two graph files")
        anchors = args.anchors or [_default_anchor(g) for g in graphs]
        if len(anchors) != len(graphs):
            raise UsageError("give one --anchors pair per graph")
        result = chain(graphs, anchors)
    else:
        _need(graphs, 2, kind)
        g1, g2 = graphs
        if kind == "corona":
            result = corona(g1, g2)
        elif kind == "ncorona":
            result = neighbourhood_corona(g1, g2)
        elif kind == "glue":
            result = r_glue(g1, g2, GlueSpec(args.left, args.right))
        else:
            result = hajos_sum(g1, g2, _hajos_spec(args, g1, g2))
    _emit_graph(result, args.output)
    return 0


def _hajos_spec(args, g1, g2) -> HajosSpec:
    x1, y1 = args.e1 or _default_edge(g1)
    x2, y2 = args.e2 or _default_edge(g2)
    return HajosSpec(x1, y1, x2, y2)


def cmd_formula(args) -> int:
    fn = gamma_sp_formula if args.quantity == "gamma_sp" else nsp_formula
    print(fn(args.kind, *args.params))
    return 0


def cmd_verify(args) -> int:
    graphs = [read_graph(path) for path in args.files]
    kind = args.kind
    if kind == "thm1":
        _need(graphs, 1, kind)
        report = verify_thm1(graphs[0])
    else:
        _need(graphs, 2, kind)
        g1, g2 = graphs
        if kind == "prop-disconnect":
            report = verify_prop_disconnect(g1, g2)
        elif kind == "chain2":
            anchors = args.anchors or [_default_anchor(g1), _default_anchor(g2)]
            if len(anchors) != 2:
                raise UsageError("chain2 takes exactly two --anchors pairs")
            report = verify_chain2(g1, g2, *anchors)
        elif kind == "glue":
            report = verify_glue(g1, g2, GlueSpec(args.left, args.right))
        elif kind == "hajos":
            report = verify_hajos(g1, g2, _hajos_spec(args, g1, g2))
        else:
            report = verify_ncorona(g1, g2)
    print(report.line())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superdom", description="Exact super domination in simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph")
    p.add_argument("kind", choices=generators.CLASSES)
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    for name, func, text in (
        ("solve", cmd_solve, "super domination number and witness"),
        ("gamma", cmd_gamma, "domination number"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("count", help="number of minimum super dominating sets")
    p.add_argument("file")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list minimum super dominating sets")
    p.add_argument("file")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", help="exchange decomposition of a super dominating set")
    p.add_argument("file")
    p.add_argument("--set", type=_int_list, required=True)
    p.set_defaults(func=cmd_decompose)

    def pair_options(p):
        p.add_argument("--left", type=_int_list, default=[])
        p.add_argument("--right", type=_int_list, default=[])
        p.add_argument("--e1", type=_pair)
        p.add_argument("--e2", type=_pair)
        p.add_argument("--anchors", type=_pair, nargs="+")

    p = sub.add_parser("product", help="build a composite graph")
    p.add_argument("kind", choices=("corona", "ncorona", "glue", "hajos", "chain"))
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output")
    pair_options(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("formula", help="closed-form value for a named class")
    p.add_argument("quantity", choices=("gamma_sp", "nsp"))
    p.add_argument("kind")
    p.add_argument("params", nargs="+", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="check a bound against exact values")
    p.add_argument("kind", choices=("thm1", "prop-disconnect", "chain2", "glue", "hajos", "ncorona"))
    p.add_argument("files", nargs="+")
    pair_options(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphFormatError, SizeGuardError, UsageError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout."""
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
