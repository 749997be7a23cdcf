"""Command-line front end.

Exit codes: 0 for kernel found / TRUE / suite clean, 1 for no kernel / FALSE /
suite failures, 2 for any error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .graph import (
    GraphError,
    directed_cycle,
    format_edge_list,
    parse_edge_list,
    random_digraph,
    witness_chain,
)
from .kernel import brute_force_kernels, solve
from .logic import EvaluationError, FormulaSyntaxError, axiom, evaluate, free_vars, parse, theta_set
from .successor import parse_structure, realize
from .verify import SUITES, CapError, run_suite

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if args.enumerate:
        kernels = brute_force_kernels(g)
        for k in kernels:
            print(f"KERNEL {k}")
        if not kernels:
            print("NO-KERNEL")
        return EXIT_TRUE if kernels else EXIT_FALSE
    if args.oracle:
        kernels = brute_force_kernels(g)
        print(f"KERNEL {kernels[0]}" if kernels else "NO-KERNEL")
        return EXIT_TRUE if kernels else EXIT_FALSE
    result = solve(g)
    print(result)
    if args.stats:
        st = result.stats
        print(
            f"# nodes_visited={st.nodes_visited} decisions={st.decisions} "
            f"propagations={st.propagations}",
            file=sys.stderr,
        )
    return EXIT_TRUE if result.found else EXIT_FALSE


def cmd_eval(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if args.theta is not None:
        if args.theta < 0:
            raise CliError("--theta needs a non-negative index")
        members = theta_set(g, args.theta)
        print(members)
        return EXIT_TRUE if members.is_full() else EXIT_FALSE
    f = axiom(args.axiom) if args.axiom else parse(args.formula)
    fv = free_vars(f)
    if fv:
        raise CliError(f"not a sentence; free variables: {', '.join(sorted(fv))}")
    truth = evaluate(g, f)
    print("TRUE" if truth else "FALSE")
    return EXIT_TRUE if truth else EXIT_FALSE


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(
        args.suite,
        max_n=args.max_n,
        exhaustive_nodes=args.exhaustive_nodes,
        samples=args.samples,
        seed=args.seed,
        max_total=args.max_total,
        N=args.N,
        max_N=args.max_N,
    )
    out = report.to_json() + "\n" if args.format == "json" else report.to_text()
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
        print(f"{'OK' if report.ok else 'FAILED'}: {report.failures} failures, report in {args.out}")
    else:
        sys.stdout.write(out)
    return EXIT_TRUE if report.ok else EXIT_FALSE


def cmd_gen(args: argparse.Namespace) -> int:
    if args.witness_chain is not None:
        g = witness_chain(args.witness_chain)
    elif args.cycle is not None:
        g = directed_cycle(args.cycle)
    elif args.successor is not None:
        g = realize(parse_structure(args.successor))
    else:
        n, p, seed = args.random
        try:
            g = random_digraph(int(n), float(p), int(seed))
        except ValueError as exc:
            raise CliError(f"bad --random arguments: {exc}") from None
    sys.stdout.write(format_edge_list(g))
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yablo", description="Digraph kernels, theta formulas and successor structures."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide kernel existence for an edge-list graph")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--enumerate", action="store_true", help="list every kernel (brute force)")
    p.add_argument("--oracle", action="store_true", help="use brute force instead of the solver")
    p.add_argument("--stats", action="store_true", help="print search statistics to stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("eval", help="evaluate a sentence or a theta level on a graph")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--formula", help='sentence, e.g. "forall x. exists y. R(x,y)"')
    what.add_argument("--theta", type=int, metavar="N", help="print the nodes satisfying theta_N")
    what.add_argument("--axiom", help="A1, A2, A, S or no_odd_cycle(k)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-n", type=int, default=2, help="highest theta index (cap 5)")
    p.add_argument("--exhaustive-nodes", type=int, default=3, help="exhaustive graph size (cap 4)")
    p.add_argument("--samples", type=int, default=200, help="random graphs for the theta suite")
    p.add_argument("--max-total", type=int, default=12, help="cycle multiset size (cap 12)")
    p.add_argument("--N", type=int, default=None, help="single compactness instance C_(2N+3)")
    p.add_argument("--max-N", type=int, default=100, help="compactness sweep bound (cap 100)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated graph as an edge list to stdout")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--witness-chain", type=int, metavar="N")
    kind.add_argument("--cycle", type=int, metavar="M")
    kind.add_argument("--successor", metavar="SPEC", help='e.g. "cycles=[2,4] n=0 z=0"')
    kind.add_argument("--random", nargs=3, metavar=("N", "P", "SEED"))
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_TRUE
    try:
        return args.func(args)
    except (CliError, GraphError, FormulaSyntaxError, EvaluationError, CapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
