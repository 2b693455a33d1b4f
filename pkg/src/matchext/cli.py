"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad graph, parameters outside a
theorem's premises), 2 usage error, 3 verification found counterexamples.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .enumeration import fixed_bipartition
from .graphs import Graph, bipartition_of, graph6_decode, graph6_encode
from .harness import (
    GraphClassFilter,
    characterization_filter,
    enumerate_graphs,
    verify_characterization,
    verify_monotonicity,
    verify_theorem,
)
from .extremal import build_extremal, enumerate_family
from .indices import zeroth_order_randic
from .iso import canonical_form
from .properties import (
    BipExtendable,
    holds,
    is_maximal_non_property,
    parse_property,
)
from .thresholds import (
    BipExtendTheorem,
    ExtendableTheorem,
    FactorCriticalTheorem,
    NKDTheorem,
    PerfectMatchingTheorem,
    TheoremId,
    exact_threshold,
    theorem_to_dict,
)

THEOREM_NAMES = ("pm", "ext", "bipext", "fc", "nkd")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _alpha_list(text: str) -> list[float]:
    out = []
    for part in text.split(","):
        try:
            out.append(float(part))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"not a real number: {part!r}") from exc
    if not out:
        raise argparse.ArgumentTypeError("at least one exponent is required")
    return out


def _format_number(value: float) -> str:
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--g6", metavar="TOKEN", help="one headerless graph6 token")
    group.add_argument(
        "--file", metavar="PATH", help="graph6 lines; '-' reads standard input"
    )


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("json", "csv", "text"), default="text"
    )


def _read_graph_file(path: str) -> list[Graph]:
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, encoding="ascii") as handle:
            lines = handle.read().splitlines()
    graphs = []
    for line in lines:
        token = line.strip()
        if token:
            graphs.append(graph6_decode(token))
    if not graphs:
        raise ValueError("no graphs supplied")
    return graphs


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    if args.g6 is not None:
        return [graph6_decode(args.g6)]
    return _read_graph_file(args.file)


def _theorem_from_args(args: argparse.Namespace) -> TheoremId:
    name = args.theorem
    order = args.order
    if order is None:
        raise ValueError("--order is required with --theorem")
    if name in ("pm", "ext", "bipext"):
        if order % 2:
            raise ValueError(f"theorem {name!r} concerns graphs of even order")
        n = order // 2
        if name == "pm":
            if args.k is not None:
                raise ValueError("--k does not apply to the pm theorem")
            return PerfectMatchingTheorem(n)
        if args.k is None:
            raise ValueError(f"theorem {name!r} needs --k")
        if name == "ext":
            return ExtendableTheorem(n, args.k)
        return BipExtendTheorem(n, args.k)
    if name == "fc":
        if args.k is None:
            raise ValueError("theorem 'fc' needs --k")
        return FactorCriticalTheorem(order, args.k)
    if args.n is None or args.k is None or args.d is None:
        raise ValueError("theorem 'nkd' needs --n, --k and --d")
    return NKDTheorem(order, args.n, args.k, args.d)


def _render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _format_number(value)
    return str(value)


def _emit_rows(rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
        return
    if fmt == "csv":
        print(",".join(columns))
        for row in rows:
            print(",".join(_render(row[c]) for c in columns))
        return
    if len(rows) == 1:
        print(_render(rows[0][columns[-1]]))
        return
    for row in rows:
        print("\t".join(_render(row[c]) for c in columns))


def _cmd_index(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args)
    rows = []
    for g in graphs:
        token = graph6_encode(g)
        for a in args.alpha:
            rows.append(
                {"graph": token, "alpha": a, "value": zeroth_order_randic(g, a)}
            )
    _emit_rows(rows, ["graph", "alpha", "value"], args.format)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    prop = parse_property(args.property)
    graphs = _read_graphs(args)
    rows = []
    for g in graphs:
        if args.maximal:
            bipartition = None
            if isinstance(prop, BipExtendable):
                bipartition = bipartition_of(g)
                if bipartition is None:
                    raise ValueError("bipext maximality needs a bipartite graph")
            value = is_maximal_non_property(g, prop, bipartition)
        else:
            value = holds(g, prop)
        rows.append(
            {
                "graph": graph6_encode(g),
                "property": args.property,
                "maximal": args.maximal,
                "value": value,
            }
        )
    _emit_rows(rows, ["graph", "property", "maximal", "value"], args.format)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    prop = parse_property(args.property)
    forms = sorted(
        {canonical_form(build_extremal(spec)) for spec in enumerate_family(prop, args.order)}
    )
    for form in forms:
        print(form)
    return 0


def _cmd_threshold(args: argparse.Namespace) -> int:
    theorem = _theorem_from_args(args)
    results = []
    for a in args.alpha:
        report = exact_threshold(theorem, a)
        entry = {"alpha": a}
        entry.update(report.to_json_dict())
        results.append(entry)
    if args.format == "json":
        print(json.dumps({"theorem": theorem_to_dict(theorem), "results": results}, indent=2))
    elif args.format == "csv":
        print("alpha,closed_form,exact,discrepancy")
        for entry in results:
            closed = "" if entry["closed_form"] is None else entry["closed_form"]
            gap = "" if entry["discrepancy"] is None else entry["discrepancy"]
            print(f"{entry['alpha']},{closed},{entry['exact']},{gap}")
    else:
        for entry in results:
            closed = entry["closed_form"]
            closed_text = "none" if closed is None else _format_number(closed)
            print(
                f"alpha={_format_number(entry['alpha'])}"
                f" closed={closed_text}"
                f" exact={_format_number(entry['exact'])}"
                f" argmax={json.dumps(entry['argmax_spec'], sort_keys=True)}"
            )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    modes = sum(
        1 for flag in (args.theorem, args.characterization, args.monotonicity) if flag
    )
    if modes != 1:
        raise ValueError(
            "pick exactly one of --theorem, --characterization, --monotonicity"
        )
    source = None
    if args.file is not None:
        source = _read_graph_file(args.file)
    if args.theorem:
        if not args.alpha:
            raise ValueError("--alpha is required with --theorem")
        theorem = _theorem_from_args(args)
        report = verify_theorem(theorem, args.alpha, source=source, jobs=args.jobs)
    elif args.characterization:
        if args.property is None or args.order is None:
            raise ValueError("--characterization needs --property and --order")
        prop = parse_property(args.property)
        report = verify_characterization(prop, args.order, source=source, jobs=args.jobs)
    else:
        if args.order is None or not args.alpha:
            raise ValueError("--monotonicity needs --order and --alpha")
        report = verify_monotonicity(args.order, args.alpha, source=source)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    elif args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.ok else 3


def _cmd_maximal(args: argparse.Namespace) -> int:
    prop = parse_property(args.property)
    filt = characterization_filter(prop, args.order)
    bipartition = (
        fixed_bipartition(args.order // 2) if isinstance(prop, BipExtendable) else None
    )
    found = set()
    for g in enumerate_graphs(filt):
        if is_maximal_non_property(g, prop, bipartition):
            found.add(canonical_form(g))
    for form in sorted(found):
        print(form)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    filt = GraphClassFilter(
        order=args.order,
        connected=args.connected,
        perfect_matching=args.perfect_matching,
        bipartite_balanced=args.bipartite,
        dedup=not args.no_dedup,
    )
    if args.count:
        print(sum(1 for _ in enumerate_graphs(filt)))
        return 0
    for g in enumerate_graphs(filt):
        print(graph6_encode(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchext",
        description="Vertex-degree power-sum thresholds for matching extendability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="evaluate the degree power-sum index")
    _add_graph_input(p_index)
    p_index.add_argument("--alpha", type=_alpha_list, required=True)
    _add_format(p_index)
    p_index.set_defaults(func=_cmd_index)

    p_check = sub.add_parser("check", help="test a property on graphs")
    _add_graph_input(p_check)
    p_check.add_argument("--property", required=True)
    p_check.add_argument(
        "--maximal",
        action="store_true",
        help="test edge-maximality among graphs lacking the property",
    )
    _add_format(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_construct = sub.add_parser(
        "construct", help="emit the extremal family for a property and order"
    )
    p_construct.add_argument("--property", required=True)
    p_construct.add_argument("--order", type=_positive_int, required=True)
    p_construct.set_defaults(func=_cmd_construct)

    p_threshold = sub.add_parser("threshold", help="closed and exact thresholds")
    p_threshold.add_argument("--theorem", choices=THEOREM_NAMES, required=True)
    p_threshold.add_argument("--order", type=_positive_int)
    p_threshold.add_argument("--n", type=_positive_int)
    p_threshold.add_argument("--k", type=int)
    p_threshold.add_argument("--d", type=int)
    p_threshold.add_argument("--alpha", type=_alpha_list, required=True)
    _add_format(p_threshold)
    p_threshold.set_defaults(func=_cmd_threshold)

    p_verify = sub.add_parser("verify", help="exhaustive verification sweeps")
    p_verify.add_argument("--theorem", choices=THEOREM_NAMES)
    p_verify.add_argument("--characterization", action="store_true")
    p_verify.add_argument("--monotonicity", action="store_true")
    p_verify.add_argument("--property")
    p_verify.add_argument("--order", type=_positive_int)
    p_verify.add_argument("--n", type=_positive_int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--d", type=int)
    p_verify.add_argument("--alpha", type=_alpha_list)
    p_verify.add_argument("--jobs", type=_positive_int, default=1)
    p_verify.add_argument(
        "--file", metavar="PATH", help="verify an external graph6 stream instead"
    )
    _add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_maximal = sub.add_parser(
        "maximal", help="enumerate maximal non-property graphs at an order"
    )
    p_maximal.add_argument("--property", required=True)
    p_maximal.add_argument("--order", type=_positive_int, required=True)
    p_maximal.set_defaults(func=_cmd_maximal)

    p_enum = sub.add_parser("enumerate", help="list graphs from the built-in generator")
    p_enum.add_argument("--order", type=int, required=True)
    p_enum.add_argument("--connected", action="store_true")
    p_enum.add_argument("--perfect-matching", action="store_true")
    p_enum.add_argument("--bipartite", action="store_true")
    p_enum.add_argument("--no-dedup", action="store_true")
    p_enum.add_argument("--count", action="store_true")
    p_enum.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
