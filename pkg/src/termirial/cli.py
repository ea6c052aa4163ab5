"""Command-line front end: eval, check, enum, loops, and fractal subcommands.

Exit codes: 0 success or all checks pass, 1 an identity check failed
(that means a bug, the identities are theorems), 2 bad arguments or a
parse error, 3 a work guard tripped.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import core, fractal, loopnest, oracle
from .budget import DEFAULT_CELL_BUDGET, DEFAULT_STEP_BUDGET, BudgetExceededError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DEFAULT_MAX_ORDER = 10**4
MAX_SWEEP_TUPLES = 10**6
MAX_SWEEP_VALUE = 10**6


class UsageError(Exception):
    pass


def _format_int(value: int, pretty: bool) -> str:
    if pretty:
        return f"{value:,}".replace(",", " ")
    return str(value)


def _emit(args, command: str, inputs: dict, result: dict, checks: list[dict], lines: list[str]) -> None:
    if args.json:
        envelope = {"command": command, "inputs": inputs, "result": result, "checks": checks}
        print(json.dumps(envelope, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _validate_shared_flags(args) -> None:
    if args.budget is not None and args.budget < 1:
        raise UsageError("--budget must be a positive integer")
    if args.max_order < 0:
        raise UsageError("--max-order must be >= 0")


def _resolve_budget(args, default: int) -> int:
    return default if args.budget is None else args.budget


# ---------------------------------------------------------------- eval


def cmd_eval(args) -> int:
    n, p = args.n, args.p
    if n < 0:
        raise UsageError("n must be >= 0")
    if p < core.MIN_ORDER:
        raise UsageError("p must be >= -1")
    if p > args.max_order:
        raise UsageError(f"p exceeds --max-order ({args.max_order})")
    if args.oracle and p < 0:
        raise UsageError("the iterated-sum oracle needs p >= 0")

    expr = core.termirial_expr(n, p)
    top, bottom = expr.binomial_form
    lines = [_format_int(expr.value, args.pretty), f"binomial form: C({top}, {bottom})"]
    result = {"value": expr.value, "binomial_top": top, "binomial_bottom": bottom}
    checks: list[dict] = []
    if args.oracle:
        observed = oracle.nested_sum(n, p, budget=_resolve_budget(args, DEFAULT_STEP_BUDGET))
        agrees = observed == expr.value
        verdict = "agrees" if agrees else "DISAGREES"
        lines.append(f"oracle (iterated sum): {_format_int(observed, args.pretty)} [{verdict}]")
        result["oracle_value"] = observed
        checks.append({"name": "iterated-sum oracle agrees", "pass": agrees})

    _emit(args, "eval", {"n": n, "p": p, "oracle": args.oracle}, result, checks, lines)
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_CHECK_FAILED


# ---------------------------------------------------------------- check


def _check_pascal(n: int, p: int) -> tuple[bool, str]:
    lhs, rhs = core.pascal_check(n, p)
    return lhs == rhs, f"{lhs} {'=' if lhs == rhs else '!='} {rhs}"


def _check_newton(n: int, m: int, p: int) -> tuple[bool, str]:
    terms = core.convolution_terms(n, m, p)
    whole = core.termirial_p(n + m, p)
    ok = whole == sum(terms)
    return ok, f"{whole} {'=' if ok else '!='} {' + '.join(str(t) for t in terms)}"


def _check_split1(n: int, m: int) -> tuple[bool, str]:
    whole = core.termirial(n + m)
    parts = [core.termirial(n), n * m, core.termirial(m)]
    ok = whole == sum(parts)
    # the p = 1 convolution carries the same three terms, outer ones swapped
    ok = ok and core.convolution_terms(n, m, 1) == parts[::-1]
    return ok, f"{whole} {'=' if ok else '!='} {' + '.join(str(t) for t in parts)}"


def _check_split2(n: int, m: int) -> tuple[bool, str]:
    whole = core.termirial_p(n + m, 2)
    parts = [
        core.termirial_p(n, 2),
        n * core.termirial(m),
        m * core.termirial(n),
        core.termirial_p(m, 2),
    ]
    ok = whole == sum(parts)
    conv = core.convolution_terms(n, m, 2)
    ok = ok and conv == [parts[3], parts[1], parts[2], parts[0]]
    return ok, f"{whole} {'=' if ok else '!='} {' + '.join(str(t) for t in parts)}"


def _check_recurrence(n: int, p: int) -> tuple[bool, str]:
    whole = core.termirial_p(n, p)
    total = sum(core.termirial_p(k, p - 1) for k in range(1, n + 1))
    ok = whole == total
    return ok, f"{whole} {'=' if ok else '!='} sum of {n} order-{p - 1} values"


def _check_closedform(n: int, p: int) -> tuple[bool, str]:
    a = core.termirial_p(n, p)
    b = core.termirial_p_binomial(n, p)
    return a == b, f"{a} {'=' if a == b else '!='} C({n + p}, {p + 1})"


_IDENTITIES = {
    # name: (variables, per-tuple check, default ranges)
    "pascal": (("n", "p"), _check_pascal, {"n": (1, 50), "p": (-1, 10)}),
    "newton": (("n", "m", "p"), _check_newton, {"n": (1, 15), "m": (1, 15), "p": (-1, 7)}),
    "split1": (("n", "m"), _check_split1, {"n": (1, 50), "m": (1, 50)}),
    "split2": (("n", "m"), _check_split2, {"n": (1, 50), "m": (1, 50)}),
    "recurrence": (("n", "p"), _check_recurrence, {"n": (1, 30), "p": (0, 6)}),
    "closedform": (("n", "p"), _check_closedform, {"n": (1, 30), "p": (-1, 8)}),
}


def cmd_check(args) -> int:
    variables, check_fn, defaults = _IDENTITIES[args.identity]
    for var in ("n", "m", "p"):
        if getattr(args, var) is not None and var not in variables:
            raise UsageError(f"identity '{args.identity}' does not take --{var}")

    ranges: dict[str, tuple[int, int]] = {}
    total = 1
    for var in variables:
        lo, hi = getattr(args, var) or defaults[var]
        if var in ("n", "m"):
            if lo < 1:
                raise UsageError(f"--{var} must start at 1 or above")
            if hi > MAX_SWEEP_VALUE:
                raise UsageError(f"--{var} is capped at {MAX_SWEEP_VALUE}")
        else:
            min_p = 0 if args.identity == "recurrence" else core.MIN_ORDER
            if lo < min_p:
                raise UsageError(f"--p must start at {min_p} or above for '{args.identity}'")
            if hi > args.max_order:
                raise UsageError(f"--p exceeds --max-order ({args.max_order})")
        ranges[var] = (lo, hi)
        total *= hi - lo + 1
    if total > MAX_SWEEP_TUPLES:
        raise UsageError(f"sweep of {total} tuples exceeds the cap of {MAX_SWEEP_TUPLES}")

    show_each = args.each or total == 1
    lines: list[str] = []
    checks: list[dict] = []
    failures = 0

    def sweep(assigned: list[int], remaining: list[str]) -> None:
        nonlocal failures
        if not remaining:
            ok, detail = check_fn(*assigned)
            if not ok:
                failures += 1
            if show_each or not ok:
                label = " ".join(f"{v}={x}" for v, x in zip(variables, assigned))
                lines.append(f"{'ok' if ok else 'FAIL'} {args.identity} {label}: {detail}")
                checks.append({"name": f"{args.identity} {label}", "pass": ok})
            return
        lo, hi = ranges[remaining[0]]
        for value in range(lo, hi + 1):
            sweep(assigned + [value], remaining[1:])

    sweep([], list(variables))

    range_text = " ".join(f"{v}={lo}..{hi}" for v, (lo, hi) in ranges.items())
    verdict = "all pass" if failures == 0 else f"{failures} FAILED"
    lines.append(f"{args.identity}: {range_text}: {total} checks, {verdict}")
    if not show_each:
        checks.append({"name": f"{args.identity} {range_text}", "pass": failures == 0})

    inputs = {"identity": args.identity}
    inputs.update({v: f"{lo}..{hi}" for v, (lo, hi) in ranges.items()})
    _emit(args, "check", inputs, {"checked": total, "failures": failures}, checks, lines)
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


# ---------------------------------------------------------------- enum


def cmd_enum(args) -> int:
    n, p = args.n, args.p
    if n < 0:
        raise UsageError("n must be >= 0")
    if not 1 <= p <= n:
        raise UsageError("need 1 <= p <= n")
    budget = _resolve_budget(args, DEFAULT_STEP_BUDGET)

    decomp = oracle.decompose_by_leading(n, p, budget=budget)
    value = core.binomial(n, p)
    lines = [f"C({n}, {p}) = {_format_int(value, args.pretty)}"]
    agrees = decomp.total == value
    result = {
        "binomial": value,
        "groups": [[leading, count] for leading, count in decomp.groups],
        "reading": {"n": n - p + 1, "p": p - 1},
    }
    if args.subsets:
        listed = oracle.subsets(n, p, budget=budget)
        lines.extend("{" + ", ".join(map(str, s)) + "}" for s in listed)
        result["subsets"] = [list(s) for s in listed]
    for leading, count in decomp.groups:
        lines.append(f"leading {leading}: {count}")
    lines.append(f"decomposition: {' + '.join(map(str, decomp.counts))} = {decomp.total}")
    lines.append(f"termirial reading: C({n}, {p}) = termirial_p({n - p + 1}, {p - 1}) = {value}")
    checks = [{"name": "group counts sum to the binomial coefficient", "pass": agrees}]
    _emit(args, "enum", {"n": n, "p": p, "subsets": args.subsets}, result, checks, lines)
    return EXIT_OK if agrees else EXIT_CHECK_FAILED


# ---------------------------------------------------------------- loops


def cmd_loops(args) -> int:
    if args.file in (None, "-"):
        source = sys.stdin.read()
    else:
        source = Path(args.file).read_text(encoding="utf-8")
    prog = loopnest.parse(source)
    if args.n is not None and args.n < 0:
        raise UsageError("--n must be >= 0")

    res = loopnest.analyze(prog, n=args.n)
    lines = [
        f"depth: {res.depth}",
        f"closed form: {res.termirial_text()} = {res.binomial_text()}",
    ]
    if res.exact_count is not None:
        lines.append(f"count: {_format_int(res.exact_count, args.pretty)}")
    lines.append(f"theta: {res.theta_text()}")
    result = {
        "depth": res.depth,
        "order": res.order,
        "param": res.param_name,
        "n": res.param_value,
        "closed_form": f"{res.termirial_text()} = {res.binomial_text()}",
        "exact_count": res.exact_count,
        "theta_exponent": res.theta_exponent,
    }

    checks: list[dict] = []
    if args.simulate:
        if res.param_value is None:
            raise UsageError("--simulate needs a bound: give --n or an assignment line")
        simulated = loopnest.simulate(prog, res.param_value, budget=_resolve_budget(args, DEFAULT_STEP_BUDGET))
        agrees = simulated == res.exact_count
        verdict = "agrees" if agrees else "DISAGREES"
        lines.append(f"simulated: {_format_int(simulated, args.pretty)} [{verdict}]")
        result["simulated"] = simulated
        checks.append({"name": "simulator agrees with closed form", "pass": agrees})

    inputs = {"file": args.file or "-", "n": args.n, "simulate": args.simulate}
    _emit(args, "loops", inputs, result, checks, lines)
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_CHECK_FAILED


# ---------------------------------------------------------------- fractal


def cmd_fractal(args) -> int:
    n, p = args.n, args.p
    if n < 1:
        raise UsageError("n must be >= 1")
    if p < 0:
        raise UsageError("p must be >= 0")
    if p > args.max_order:
        raise UsageError(f"p exceeds --max-order ({args.max_order})")
    if (args.report or args.report_only) and p < 1:
        raise UsageError("the surface report compares order p to p-1, so p must be >= 1")
    budget = _resolve_budget(args, DEFAULT_CELL_BUDGET)

    lines: list[str] = []
    result: dict = {"cells": core.termirial_p(n, p), "cell_side": str(Fraction(1, 2**p))}
    checks: list[dict] = []

    if not args.report_only:
        fig = fractal.build(n, p, budget=budget)
        text = fractal.render(fig, args.format)
        result.update({"width": fig.width, "height": fig.height})
        if args.out:
            Path(args.out).write_text(text + "\n", encoding="utf-8")
            result["out"] = args.out
        else:
            lines.append(text)
            result["figure"] = text

    if args.report or args.report_only:
        report = fractal.surface_report(n, p, budget=budget)
        lines.append(f"ratio: {report.ratio}")
        lines.append(f"dimension estimate: {report.dimension_estimate!r}")
        lines.append(f"measured: {'yes' if report.measured else 'no (closed form only)'}")
        result["ratio"] = str(report.ratio)
        result["dimension_estimate"] = report.dimension_estimate
        result["measured"] = report.measured
        if report.measured:
            checks.append({"name": "measured ratio equals closed form", "pass": True})

    inputs = {"n": n, "p": p, "format": args.format, "report": args.report or args.report_only}
    _emit(args, "fractal", inputs, result, checks, lines)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _range_arg(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(-?\d+)(?:\.\.(-?\d+))?", text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected 'a' or 'a..b', got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"range {text!r} runs backwards")
    return lo, hi


_RANGE_FLAGS = {"--n", "--m", "--p"}
_NEG_VALUE_RE = re.compile(r"-\d+(\.\.-?\d+)?")


def _merge_negative_ranges(argv: list[str]) -> list[str]:
    # argparse reads "-1..7" as an option, so fold it into "--p=-1..7"
    merged = []
    i = 0
    while i < len(argv):
        if argv[i] in _RANGE_FLAGS and i + 1 < len(argv) and _NEG_VALUE_RE.fullmatch(argv[i + 1]):
            merged.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    return merged


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit one JSON object instead of plain text")
    shared.add_argument("--pretty", action="store_true", help="print large numbers with digit groups: 4 421 275")
    shared.add_argument(
        "--budget",
        type=int,
        metavar="N",
        help=f"work guard override (defaults: {DEFAULT_STEP_BUDGET} steps, {DEFAULT_CELL_BUDGET} cells)",
    )
    shared.add_argument(
        "--max-order", type=int, default=DEFAULT_MAX_ORDER, metavar="N", help="largest accepted termirial order"
    )

    parser = argparse.ArgumentParser(
        prog="termirial",
        description="Exact termirial (simplicial polytopic number) arithmetic, identity checks, "
        "chain loop-nest analysis, and grey-square figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_eval = sub.add_parser("eval", parents=[shared], help="evaluate the order-p termirial of n")
    p_eval.add_argument("n", type=int)
    p_eval.add_argument("p", type=int)
    p_eval.add_argument("--oracle", action="store_true", help="cross-check with the literal iterated sum (p >= 0)")
    p_eval.set_defaults(handler=cmd_eval)

    p_check = sub.add_parser("check", parents=[shared], help="sweep an identity over ranges")
    p_check.add_argument("identity", choices=sorted(_IDENTITIES))
    p_check.add_argument("--n", type=_range_arg, metavar="A..B")
    p_check.add_argument("--m", type=_range_arg, metavar="A..B")
    p_check.add_argument("--p", type=_range_arg, metavar="A..B")
    p_check.add_argument("--each", action="store_true", help="print one line per tuple")
    p_check.set_defaults(handler=cmd_check)

    p_enum = sub.add_parser("enum", parents=[shared], help="list p-subsets of {1..n} grouped by leading element")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("p", type=int)
    p_enum.add_argument("--subsets", action="store_true", help="also list every subset")
    p_enum.set_defaults(handler=cmd_enum)

    p_loops = sub.add_parser("loops", parents=[shared], help="analyze a chain loop-nest program")
    p_loops.add_argument("file", nargs="?", help="program file (.loop); stdin when omitted or '-'")
    p_loops.add_argument("--n", type=int, metavar="N", help="override the nest parameter")
    p_loops.add_argument("--simulate", action="store_true", help="run the nest literally and compare")
    p_loops.set_defaults(handler=cmd_loops)

    p_fractal = sub.add_parser("fractal", parents=[shared], help="build and render the grey-square figure")
    p_fractal.add_argument("n", type=int)
    p_fractal.add_argument("p", type=int)
    p_fractal.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p_fractal.add_argument("--report", action="store_true", help="also print the surface ratio and dimension estimate")
    p_fractal.add_argument("--report-only", action="store_true", help="print the report without building the figure")
    p_fractal.add_argument("--out", metavar="PATH", help="write the figure to a file instead of stdout")
    p_fractal.set_defaults(handler=cmd_fractal)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_merge_negative_ranges(argv))
    try:
        _validate_shared_flags(args)
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"run 'termirial {args.command} --help' for usage", file=sys.stderr)
        return EXIT_USAGE
    except loopnest.LoopNestError as exc:
        print(f"error ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AssertionError as exc:  # a cross-check failed; that is a bug, not bad input
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
