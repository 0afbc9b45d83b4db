"""Command line interface.

Subcommands: greedy, split, enumerate, gap, lcm-bound, extremal, sylvester,
oracle, geometry. Every command honors --format json|csv|text (csv only for
commands whose output is a flat list of tuples). JSON output is an envelope
{command, inputs, result, version}; rationals travel as 'p/q' strings and
mathematical integers as decimal strings, since the values outgrow 64 bits.

Exit codes: 0 success, 1 usage or domain error, 2 verification failure
(counterexample found or node budget exhausted). The oracle node budget can
be set with --budget or the EGYFRAC_ORACLE_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .bounds import (
    classify_equality,
    extremal_gap_tuple,
    extremal_lcm_tuple,
    gap_amount,
    lcm_bound,
    sharp_sum_bound,
)
from .egyptian import enumerate_exact, greedy, split_expand, tuple_lcm, tuple_sum
from .geometry import (
    ONE,
    LogStructure,
    StandardCoefficient,
    bpf_index,
    deficiency,
    gap_bound,
    index_bound,
    refined_index_bound,
    volume,
)
from .oracle import DEFAULT_BUDGET, SweepConfig, sweep
from .rationals import canonical_q, parse_rational, rational_str
from .report import report_to_dict
from .sylvester import sylvester_term, sylvester_u

BUDGET_ENV_VAR = "EGYFRAC_ORACLE_BUDGET"


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors on exit code 1 instead of 2."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let values like '-1', '-1/2', or '-1,0,1/2' follow an option without
        # being mistaken for flags, so '--delta-list -1,0,1' needs no '='
        self._negative_number_matcher = re.compile(
            r"^-\d+(?:/\d+)?(?:,[+-]?\d+(?:/\d+)?)*$"
        )

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _denominators(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _coefficients(text: str) -> tuple[StandardCoefficient, ...]:
    out = []
    for token in text.split(","):
        token = token.strip()
        if token == "one":
            out.append(ONE)
        elif token.startswith("m:"):
            try:
                out.append(StandardCoefficient(int(token[2:])))
            except ValueError:
                raise argparse.ArgumentTypeError(
                    f"bad coefficient token {token!r}"
                ) from None
        else:
            raise argparse.ArgumentTypeError(
                f"bad coefficient token {token!r}; use 'm:N' or 'one'"
            )
    return tuple(out)


def _emit(args, result: dict, text_lines: list[str], csv_rows=None) -> None:
    """Print one command's output in the chosen format.

    result is the JSON payload; text_lines the text rendering; csv_rows,
    when supported, a list of integer tuples emitted one per line.
    """
    if args.format == "json":
        envelope = {
            "command": args.command,
            "inputs": args.inputs,
            "result": result,
            "version": __version__,
        }
        print(json.dumps(envelope, indent=2))
    elif args.format == "csv":
        if csv_rows is None:
            raise ValueError(f"csv format is not supported for {args.command!r}")
        for row in csv_rows:
            print(",".join(str(v) for v in row))
    else:
        for line in text_lines:
            print(line)


def _tuple_strs(t) -> list[str]:
    return [str(m) for m in t]


def cmd_greedy(args) -> int:
    t = greedy(args.x)
    args.inputs = {"x": rational_str(args.x)}
    _emit(
        args,
        {
            "denominators": _tuple_strs(t),
            "terms": len(t),
            "sum": rational_str(tuple_sum(t)),
        },
        [" ".join(_tuple_strs(t))],
        csv_rows=[t],
    )
    return 0


def cmd_split(args) -> int:
    t = split_expand(args.denominators, args.at - 1)  # --at is 1-based
    args.inputs = {"denominators": _tuple_strs(args.denominators), "at": args.at}
    _emit(
        args,
        {"denominators": _tuple_strs(t), "sum": rational_str(tuple_sum(t))},
        [" ".join(_tuple_strs(t))],
        csv_rows=[t],
    )
    return 0


def cmd_enumerate(args) -> int:
    tuples = enumerate_exact(args.sum, args.terms)
    args.inputs = {"sum": rational_str(args.sum), "terms": args.terms}
    _emit(
        args,
        {"tuples": [_tuple_strs(t) for t in tuples], "count": len(tuples)},
        [" ".join(_tuple_strs(t)) for t in tuples],
        csv_rows=tuples,
    )
    return 0


def cmd_gap(args) -> int:
    q = args.q if args.q is not None else canonical_q(args.delta)
    g = gap_amount(args.delta, q)
    args.inputs = {"delta": rational_str(args.delta), "q": q, "k": args.k}
    result = {"delta": rational_str(args.delta), "q": q, "gap": rational_str(g)}
    lines = [f"gap = {rational_str(g)}"]
    if args.k is not None:
        bound = sharp_sum_bound(args.k, args.delta, q)
        result["sharp_sum_bound"] = rational_str(bound)
        lines.append(f"sharp_sum_bound = {rational_str(bound)}")
    _emit(args, result, lines)
    return 0


def cmd_lcm_bound(args) -> int:
    q = args.q if args.q is not None else canonical_q(args.delta)
    bound = lcm_bound(args.delta, q)
    args.inputs = {"delta": rational_str(args.delta), "q": q}
    _emit(
        args,
        {"delta": rational_str(args.delta), "q": q, "lcm_bound": rational_str(bound)},
        [f"lcm_bound = {rational_str(bound)}"],
    )
    return 0


def cmd_extremal(args) -> int:
    q = args.q if args.q is not None else canonical_q(args.delta)
    if args.kind == "gap":
        t = extremal_gap_tuple(args.k, args.delta, q)
        bound = sharp_sum_bound(args.k, args.delta, q)
    else:
        t = extremal_lcm_tuple(args.k, args.delta, q)
        bound = lcm_bound(args.delta, q)
    args.inputs = {
        "kind": args.kind,
        "k": args.k,
        "delta": rational_str(args.delta),
        "q": q,
    }
    result = {"kind": args.kind, "bound": rational_str(bound)}
    if t is None:
        result["denominators"] = None
        lines = ["absent"]
    else:
        result["denominators"] = _tuple_strs(t)
        result["sum"] = rational_str(tuple_sum(t))
        result["lcm"] = str(tuple_lcm(t))
        result["family"] = classify_equality(t, args.delta, q).tag.value
        lines = [" ".join(_tuple_strs(t))]
    _emit(args, result, lines, csv_rows=[t] if t is not None else [])
    return 0


def cmd_sylvester(args) -> int:
    args.inputs = {"p": args.p, "q": args.q, "table": args.table}
    if args.table:
        rows = [
            (p, sylvester_u(p, args.q), sylvester_term(p, args.q))
            for p in range(1, args.p + 1)
        ]
        _emit(
            args,
            {
                "table": [
                    {"p": p, "u": str(u_val), "t": str(t_val)}
                    for p, u_val, t_val in rows
                ]
            },
            [f"{p} {u_val} {t_val}" for p, u_val, t_val in rows],
        )
    else:
        u_val = sylvester_u(args.p, args.q)
        _emit(
            args,
            {"u": str(u_val), "t": str(1 + u_val)},
            [f"u = {u_val}", f"t = {1 + u_val}"],
        )
    return 0


def cmd_oracle(args) -> int:
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))
    config = SweepConfig(
        k_max=args.k_max,
        deltas=args.delta_list,
        q_mode=args.q_mode,
        budget=budget,
    )
    report = sweep(config)
    args.inputs = {
        "k_max": args.k_max,
        "delta_list": [rational_str(d) for d in args.delta_list],
        "q_mode": args.q_mode,
        "budget": budget,
    }
    lines = [
        f"passed = {str(report.passed).lower()}",
        f"cells = {report.parameters['cells']}",
        f"nodes = {report.stats.nodes}",
        f"counterexamples = {len(report.counterexamples)}",
        f"equality_witnesses = {len(report.equality_witnesses)}",
    ]
    if report.budget_exceeded:
        lines.append("budget_exceeded = true")
    for c in report.counterexamples:
        lines.append(f"counterexample: {c.claim} values={list(c.values)} "
                     f"delta={rational_str(c.delta)} q={c.q}")
    _emit(args, report_to_dict(report), lines)
    return 0 if report.passed else 2


def cmd_geometry(args) -> int:
    ls = LogStructure(args.dim, args.coeffs)
    v = volume(ls)
    t = args.t if args.t is not None else (v if v >= 0 else None)
    args.inputs = {
        "dim": args.dim,
        "coeffs": [("one" if c.is_one else f"m:{c.m}") for c in args.coeffs],
        "t": rational_str(args.t) if args.t is not None else None,
        "q": args.q,
    }
    result = {
        "volume": rational_str(v),
        "deficiency": rational_str(deficiency(ls)),
        "finite_denominators": _tuple_strs(ls.finite_denominators),
        "ones": ls.ones_count,
    }
    lines = [f"volume = {rational_str(v)}"]
    if v >= 0:
        r = bpf_index(ls)
        result["bpf_index"] = str(r)
        lines.append(f"bpf_index = {r}")
    else:
        result["bpf_index"] = None
        lines.append("bpf_index = undefined (negative volume)")
    if t is not None:
        q = args.q if args.q is not None else canonical_q(t)
        result["t"] = rational_str(t)
        result["q"] = q
        result["gap_bound"] = rational_str(gap_bound(args.dim, t, q))
        result["index_bound"] = rational_str(index_bound(args.dim, t, q))
        lines.append(f"gap_bound = {result['gap_bound']}")
        lines.append(f"index_bound = {result['index_bound']}")
        try:
            refined = refined_index_bound(args.dim, ls.ones_count, t, q)
            result["refined_index_bound"] = rational_str(refined)
            lines.append(f"refined_index_bound = {result['refined_index_bound']}")
        except ValueError:
            result["refined_index_bound"] = None
    _emit(args, result, lines)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="egyfrac", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text",
            help="output format (default: text)",
        )
        p.set_defaults(func=func, command=name)
        return p

    p = add("greedy", cmd_greedy, "greedy unit-fraction representation of x")
    p.add_argument("x", type=_rational, help="nonnegative rational, e.g. 5/6")

    p = add("split", cmd_split, "split one denominator via 1/m = 1/(m+1) + 1/(m(m+1))")
    p.add_argument("denominators", type=_denominators, help="comma-separated tuple, e.g. 2,3")
    p.add_argument("--at", type=int, required=True, help="1-based position to split")

    p = add("enumerate", cmd_enumerate, "all k-term representations of a rational")
    p.add_argument("--sum", type=_rational, required=True, dest="sum")
    p.add_argument("--terms", type=int, required=True)

    p = add("gap", cmd_gap, "forbidden-window width below k - delta")
    p.add_argument("--delta", type=_rational, required=True)
    p.add_argument("--q", type=int, default=None, help="default: canonical q of delta")
    p.add_argument("--k", type=int, default=None, help="also print the sharp sum bound")

    p = add("lcm-bound", cmd_lcm_bound, "lcm bound over the class summing to k - delta")
    p.add_argument("--delta", type=_rational, required=True)
    p.add_argument("--q", type=int, default=None)

    p = add("extremal", cmd_extremal, "tuple attaining a sharp bound, if any")
    p.add_argument("--kind", choices=("gap", "lcm"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=_rational, required=True)
    p.add_argument("--q", type=int, default=None)

    p = add("sylvester", cmd_sylvester, "generalized Sylvester values u and t = 1 + u")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--table", action="store_true", help="print all rows up to p")

    p = add("oracle", cmd_oracle, "exhaustive bound verification over a grid")
    p.add_argument("--k-max", type=int, required=True, dest="k_max")
    p.add_argument("--delta-list", type=_rational_list, required=True, dest="delta_list")
    p.add_argument("--q-mode", default="canonical", dest="q_mode",
                   help="'canonical' or 'all-upto:N'")
    p.add_argument("--budget", type=int, default=None,
                   help=f"node budget (env {BUDGET_ENV_VAR}, default {DEFAULT_BUDGET})")

    p = add("geometry", cmd_geometry, "volume, clearing index, and bounds for a log structure")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--coeffs", type=_coefficients, required=True,
                   help="comma-separated coefficients, e.g. 'm:2,m:3,one'")
    p.add_argument("--t", type=_rational, default=None, help="threshold (default: volume)")
    p.add_argument("--q", type=int, default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as e:
        print(f"egyfrac: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
