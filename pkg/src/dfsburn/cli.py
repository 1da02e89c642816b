"""Command-line interface.

Subcommands: ``bij`` (function to tree), ``inv`` (tree to function),
``enum`` (full tree/function table), ``tutte`` (generating polynomials),
``threshold`` (build-sequence graphs), ``verify`` (invariant suite).

Exit codes: 0 success, 1 usage or input error, 2 non-parking certificate,
3 enumeration budget exceeded.  Output is byte-deterministic for a given
input.
"""

from __future__ import annotations

import argparse
import sys

from .burn import dfs_burn, tree_to_parking
from .errors import (
    BudgetExceededError,
    BuildSequenceError,
    DomainMismatchError,
    GraphError,
    NotSpanningTreeError,
)
from .graph import Graph, format_edge_list, parse_edge_list
from .parking import ParkingFunction
from .threshold import all_reverse_degree_labelings, build_threshold, label_by_reverse_degree
from .trees import enumerate_spanning_trees, format_tree, kappa_number, parse_tree
from .tutte import kappa_generating_function, pf_degree_generating_function, tutte_one_y
from .verify import run_verification


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="dfsburn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_graph_arg(p):
        p.add_argument("graph", help="edge-list file ('-' for stdin)")
        p.add_argument("--root", type=int, default=None,
                       help="override the root vertex (default: file's root line, else 0)")

    def add_budget_args(p):
        p.add_argument("--max-edges", type=int, default=None,
                       help="edge budget for tree/Tutte enumeration")
        p.add_argument("--max-subsets", type=int, default=None,
                       help="candidate budget for parking-function enumeration")

    p = sub.add_parser("bij", help="burn a value vector into a spanning tree")
    add_graph_arg(p)
    p.add_argument("--pf", required=True, help="comma-separated values, ascending non-root order")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of text")

    p = sub.add_parser("inv", help="recover the parking function of a spanning tree")
    add_graph_arg(p)
    p.add_argument("--tree", required=True, help="comma-separated parent>child edges")

    p = sub.add_parser("enum", help="table of all spanning trees with kappa and function")
    add_graph_arg(p)
    add_budget_args(p)
    p.add_argument("--dot", action="store_true", help="emit one DOT digraph per tree")

    p = sub.add_parser("tutte", help="T(1,y) and the degree/kappa polynomials")
    add_graph_arg(p)
    add_budget_args(p)

    p = sub.add_parser("threshold", help="build a threshold graph from a sequence like '*iddid'")
    p.add_argument("sequence", help="build sequence: '*' then letters d/i")
    p.add_argument("--all-labelings", action="store_true",
                   help="list every reverse-degree labeling")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of an edge list")

    p = sub.add_parser("verify", help="run the cross-module invariant checks on a graph")
    add_graph_arg(p)
    add_budget_args(p)
    return parser


def _load_graph(args) -> Graph:
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        with open(args.graph, encoding="utf-8") as handle:
            text = handle.read()
    return parse_edge_list(text, root=args.root)


def _tree_budget(args) -> dict:
    return {} if args.max_edges is None else {"max_edges": args.max_edges}


def _pf_budget(args) -> dict:
    return {} if args.max_subsets is None else {"max_candidates": args.max_subsets}


def _fmt_poly(coeffs) -> str:
    return " ".join(str(c) for c in coeffs)


def _fmt_edges(edges) -> str:
    return ",".join(f"({i},{j})" for i, j in edges) if edges else "(none)"


def _dot_tree(name: str, n_vertices: int, tree_edges, dampened) -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(n_vertices))
    lines.extend(f"  {i} -> {j};" for i, j in tree_edges)
    lines.extend(f"  {i} -> {j} [style=dashed];" for i, j in dampened)
    lines.append("}")
    return "\n".join(lines)


def _cmd_bij(args) -> int:
    g = _load_graph(args)
    p = ParkingFunction.from_csv(args.pf, g.root)
    result = dfs_burn(g, p)
    if not result.is_parking_function:
        print("NOT A PARKING FUNCTION")
        print("certificate: {%s}" % ",".join(str(v) for v in sorted(result.unburnt)))
        return 2
    assert result.tree is not None
    if args.dot:
        print(_dot_tree("burn", g.n_vertices, result.tree.edges, result.dampened))
        return 0
    kappa = kappa_number(g, result.tree)
    print(f"tree: {format_tree(result.tree)}")
    print(f"dampened: {_fmt_edges(result.dampened)}")
    print(f"kappa: {kappa}")
    print(f"g - deg = {g.circuit_rank - p.degree}")
    return 0


def _cmd_inv(args) -> int:
    g = _load_graph(args)
    t = parse_tree(args.tree, n_vertices=g.n_vertices, root=g.root)
    pf, _ = tree_to_parking(g, t)
    print(pf.to_csv())
    return 0


def _cmd_enum(args) -> int:
    g = _load_graph(args)
    rows = []
    for t in enumerate_spanning_trees(g, **_tree_budget(args)):
        pf, _ = tree_to_parking(g, t)
        rows.append((kappa_number(g, t), pf, t))
    rows.sort(key=lambda row: (-row[0], row[1].values))
    if args.dot:
        for k, (_, pf, t) in enumerate(rows):
            trace_dampened = dfs_burn(g, pf).dampened
            print(_dot_tree(f"t{k}", g.n_vertices, t.edges, trace_dampened))
        return 0
    for kappa, pf, t in rows:
        print(f"{format_tree(t)} kappa={kappa} pf={pf.to_csv()}")
    kappa_gf = [0] * (g.circuit_rank + 1)
    pf_gf = [0] * (g.circuit_rank + 1)
    for kappa, pf, _ in rows:
        kappa_gf[kappa] += 1
        pf_gf[pf.degree] += 1
    print(f"trees: {len(rows)}")
    print(f"kappa: {_fmt_poly(kappa_gf)}")
    print(f"pf-degree: {_fmt_poly(pf_gf)}")
    return 0


def _cmd_tutte(args) -> int:
    g = _load_graph(args)
    print(f"T(1,y): {_fmt_poly(tutte_one_y(g, **_tree_budget(args)))}")
    print(f"pf-degree: {_fmt_poly(pf_degree_generating_function(g, **_pf_budget(args)))}")
    print(f"kappa: {_fmt_poly(kappa_generating_function(g, **_tree_budget(args)))}")
    return 0


def _cmd_threshold(args) -> int:
    built = build_threshold(args.sequence)
    if args.all_labelings:
        labelings = all_reverse_degree_labelings(built)
        for k, labeled in enumerate(labelings):
            print(f"# labeling {k}")
            if args.dot:
                print(_dot_graph(f"g{k}", labeled))
            else:
                sys.stdout.write(format_edge_list(labeled))
            if k + 1 < len(labelings):
                print()
        return 0
    labeled = label_by_reverse_degree(built)
    if args.dot:
        print(_dot_graph("g", labeled))
    else:
        sys.stdout.write(format_edge_list(labeled))
    return 0


def _dot_graph(name: str, g: Graph) -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n_vertices))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines)


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    results = run_verification(g, **_tree_budget(args), **_pf_budget(args))
    all_ok = True
    for name, ok, detail in results:
        if ok:
            print(f"ok {name}")
        else:
            all_ok = False
            print(f"FAIL {name}: {detail}")
    return 0 if all_ok else 1


_DISPATCH = {
    "bij": _cmd_bij,
    "inv": _cmd_inv,
    "enum": _cmd_enum,
    "tutte": _cmd_tutte,
    "threshold": _cmd_threshold,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, BuildSequenceError, DomainMismatchError,
            NotSpanningTreeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
