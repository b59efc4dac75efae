"""Command-line front end.

Exit codes: 0 success, 1 usage or domain error, 2 budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import colorings, oracle, spectrum
from .dcs_matrix import general_dcs, verify_dcs
from .errors import BudgetExceeded, DomainError
from .symmetry import automorphism_count, fixing_number_bruteforce, is_distinguishing, minimum_fixing_set
from .tree_core import Coloring, Tree, build_kpode, build_perfect_tree, check_coloring

# color id -> DOT fill; ids past the end are drawn as numbered labels
DOT_PALETTE = (
    "white", "black", "green", "cyan", "red", "blue",
    "yellow", "magenta", "orange", "purple", "brown", "gray",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def to_dot(tree: Tree, coloring: Coloring | None = None, name: str = "T") -> str:
    lines = [f"graph {name} {{", '  node [shape=circle, style=filled, label=""];']
    for v in range(tree.vertex_count):
        c = 0 if coloring is None else coloring.colors[v]
        if c < len(DOT_PALETTE):
            lines.append(f'  {v} [fillcolor="{DOT_PALETTE[c]}"];')
        else:
            lines.append(f'  {v} [fillcolor="white", label="{c}"];')
    for v, p in enumerate(tree.parents):
        if p >= 0:
            lines.append(f"  {p} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise DomainError(f"expected comma-separated integers, got {text!r}") from None


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _tree_from_args(args) -> Tree:
    if getattr(args, "tree", None):
        return Tree.from_json(_load_json(args.tree))
    if getattr(args, "arms", None):
        return build_kpode(_ints(args.arms))
    if args.k is None or args.n is None:
        raise DomainError("give --k and --n, --arms, or --tree")
    return build_perfect_tree(args.k, args.n)


def _emit(payload, out: str | None = None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> oracle.OracleBudget:
    return oracle.OracleBudget.from_env(
        max_candidate_colorings=getattr(args, "budget", None),
        max_special_slots=getattr(args, "max_slots", None),
    )


def cmd_tree(args) -> int:
    tree = _tree_from_args(args)
    if args.format == "dot":
        _emit(to_dot(tree), args.out)
    else:
        _emit(tree.to_json(), args.out)
    return 0


def _coloring_payload(tree: Tree, coloring: Coloring) -> dict:
    payload = coloring.to_json()
    payload["tree"] = tree.to_json()
    return payload


def cmd_color(args) -> int:
    tree, coloring = colorings.construct(args.scheme, args.k, args.n)
    ok = is_distinguishing(tree, coloring)
    if args.out:
        _emit(_coloring_payload(tree, coloring), args.out)
    if args.summary:
        hist = coloring.histogram()
        sys.stdout.write(
            f"scheme: {args.scheme}\nk: {args.k}\nn: {args.n}\n"
            f"vertices: {tree.vertex_count}\npalette: {coloring.palette_size}\n"
            f"paint_cost: {coloring.paint_cost}\n"
            f"color_counts: {' '.join(f'c{i}={c}' for i, c in enumerate(hist))}\n"
            f"distinguishing: {str(ok).lower()}\n"
        )
    elif args.format == "dot":
        sys.stdout.write(to_dot(tree, coloring))
    elif not args.out:
        payload = _coloring_payload(tree, coloring)
        payload.update(paint_cost=coloring.paint_cost, distinguishing=ok)
        _emit(payload)
    return 0


def cmd_verify(args) -> int:
    data = _load_json(args.coloring)
    coloring = Coloring.from_json(data)
    if args.tree:
        tree = Tree.from_json(_load_json(args.tree))
    elif "tree" in data:
        tree = Tree.from_json(data["tree"])
    else:
        raise DomainError("coloring file has no embedded tree; pass --tree")
    check_coloring(tree, coloring)
    report = automorphism_count(tree, coloring, cap=0)
    _emit({
        "distinguishing": is_distinguishing(tree, coloring),
        "automorphisms": report.count,
        "palette_size": coloring.palette_size,
        "paint_cost": coloring.paint_cost,
    })
    return 0


def cmd_spectrum(args) -> int:
    report = spectrum.spectrum_closed(args.k, args.n)
    payload = report.to_json()
    if args.oracle:
        tree = build_perfect_tree(args.k, args.n)
        found = oracle.spectrum_oracle(tree, _budget(args), jobs=args.jobs)
        payload["oracle"] = found.to_json()
        payload["agree"] = found == report
    _emit(payload)
    return 0


def cmd_oracle(args) -> int:
    tree = _tree_from_args(args)
    budget = _budget(args)
    if args.query == "fixing":
        S = minimum_fixing_set(tree)
        _emit({"fixing_number": len(S), "fixing_set": list(S)})
        return 0
    if args.query == "colors":
        _emit({"distinguishing_number": oracle.min_colors(tree, budget)})
        return 0
    if args.colors is None:
        raise DomainError(f"{args.query} needs --colors")
    if args.query == "paint-cost":
        res = oracle.search_paint_cost(tree, args.colors, budget, jobs=args.jobs)
        key = "paint_cost"
    else:
        res = oracle.search_cost_number(tree, args.colors, budget)
        key = "cost_number"
    _emit({key: res.value, "colors": args.colors, "witness": res.witness.to_json(), "candidates": res.candidates})
    return 0


def cmd_dcs(args) -> int:
    values = _ints(args.values)
    matrix = general_dcs(values, args.rows)
    sums = matrix.column_sums()
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(matrix.rows)
        writer.writerow(["sum", *sums])
        if args.verify:
            writer.writerow(["verified", str(verify_dcs(matrix)).lower()])
        _emit(buf.getvalue())
        return 0
    payload = {"values": values, "rows": matrix.rows, "permutations": matrix.one_line(), "column_sums": sums}
    if args.verify:
        payload["verified"] = verify_dcs(matrix.rows, values)
    _emit(payload)
    return 0


def cmd_kpode(args) -> int:
    arms = _ints(args.arms)
    if args.equality_coloring is None:
        tree = build_kpode(arms)
        if args.format == "dot":
            _emit(to_dot(tree))
            return 0
        _emit({
            "tree": tree.to_json(),
            "automorphisms": automorphism_count(tree, cap=0).count,
            "fixing_number": fixing_number_bruteforce(tree),
        })
        return 0
    d = args.equality_coloring
    if len(arms) != d + 1 or len(set(arms)) != 1:
        raise DomainError(f"equality coloring with d={d} needs {d + 1} equal arms")
    tree, coloring = colorings.kpode_equality_coloring(d, arms[0])
    if args.format == "dot":
        _emit(to_dot(tree, coloring))
        return 0
    payload = _coloring_payload(tree, coloring)
    payload.update(paint_cost=coloring.paint_cost, distinguishing=is_distinguishing(tree, coloring))
    _emit(payload)
    return 0


def _add_tree_args(p) -> None:
    p.add_argument("--k", type=int, help="branching factor of a perfect tree")
    p.add_argument("--n", type=int, help="depth of a perfect tree")
    p.add_argument("--arms", help="comma-separated k-pode arm lengths")
    p.add_argument("--tree", help="tree JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("tree", help="build a perfect k-ary tree or k-pode")
    _add_tree_args(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("color", help="construct a distinguishing coloring of T_k^n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--scheme", choices=("dist", "middle", "frugal"), default="dist")
    p.add_argument("--out")
    p.add_argument("--summary", action="store_true")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring file for the distinguishing property")
    p.add_argument("--coloring", required=True)
    p.add_argument("--tree")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="closed-form paint cost spectrum of T_k^n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also compute it by brute force")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--max-slots", type=int)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("oracle", help="brute-force a single parameter")
    p.add_argument("query", choices=("paint-cost", "cost-number", "fixing", "colors"))
    _add_tree_args(p)
    p.add_argument("--colors", type=int, help="palette size d")
    p.add_argument("--budget", type=int, help="maximum candidate colorings")
    p.add_argument("--max-slots", type=int, help="maximum special vertices")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dcs", help="row-permuted matrix with distinct column sums")
    p.add_argument("--values", required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_dcs)

    p = sub.add_parser("kpode", help="k-pode tree, optionally with the equality coloring")
    p.add_argument("--arms", required=True)
    p.add_argument("--equality-coloring", type=int, metavar="D")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_kpode)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        detail = {"error": str(exc), "lower_bound": exc.lower_bound}
        sys.stderr.write(json.dumps(detail) + "\n")
        return 2
    except (DomainError, OSError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"symspec: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
