"""Command-line interface: counting, evaluation, and verification sweeps.

All output is byte-deterministic for a fixed invocation: JSON keys are
sorted, big integers are rendered as decimal strings, and timing fields
are kept out of the serialized reports.  Exit codes: 0 on success and on
verifications that match, 1 on a verification mismatch, 2 on usage,
precondition, or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _cartesian
from typing import Callable, Sequence

from scpp.budget import BudgetExceededError, WorkBudget
from scpp.partitions import partition
from scpp.pfaffian import pfaffian_check
from scpp.plane_partitions import (
    count_pp,
    count_scpp,
    count_scpp_middle_line,
    count_scpp_signed,
)
from scpp.products import (
    ParityError,
    box_count,
    middle_line_product,
    sc_count,
    signed_enumeration_all_even,
    signed_enumeration_product,
)
from scpp.schur import (
    hook_content_rectangular,
    schur_tableau_sum,
    specialize_alternating,
)
from scpp.verify import (
    VerificationReport,
    verify_box,
    verify_middle_line,
    verify_schurid,
    verify_scpp_count,
    verify_signed_enumeration,
    verify_specialization_bridge,
    verify_square_reduction,
    verify_weight_consistency,
)


@dataclass(frozen=True)
class RunConfig:
    """One validated CLI invocation."""

    command: str
    parameters: dict[str, int] = field(default_factory=dict)
    format: str = "json"
    budget: int | None = None
    workers: int = 1
    out: str | None = None


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# identity registry: name -> (parameter names, runner)

def _run_box(p, budget, method):
    return verify_box(p["a"], p["b"], p["c"], budget)


def _run_scpp(p, budget, method):
    return verify_scpp_count(p["a"], p["b"], p["c"], budget)


def _run_middle_line(p, budget, method):
    return verify_middle_line(p["a"], p["b"], p["c1"], p["c2"], budget)


def _run_signed(p, budget, method):
    return verify_signed_enumeration(p["a"], p["b"], p["c"], budget)


def _run_schurid1(p, budget, method):
    return verify_schurid(
        1, p["gamma1"], p["gamma2"], p["alpha"], p["n"], method or "full-expansion", budget
    )


def _run_schurid2(p, budget, method):
    return verify_schurid(
        2, p["gamma1"], p["gamma2"], p["alpha"], p["n"], method or "full-expansion", budget
    )


def _run_square_reduction(p, budget, method):
    return verify_square_reduction(p["gamma"], p["alpha"], p["n"], budget)


def _run_weight(p, budget, method):
    return verify_weight_consistency(p["a"], p["b"], p["c"], budget)


def _run_bridge(p, budget, method):
    return verify_specialization_bridge(p["gamma"], p["alpha"], p["m"], budget)


IDENTITIES: dict[str, tuple[tuple[str, ...], Callable]] = {
    "box": (("a", "b", "c"), _run_box),
    "scpp": (("a", "b", "c"), _run_scpp),
    "middle-line": (("a", "b", "c1", "c2"), _run_middle_line),
    "signed": (("a", "b", "c"), _run_signed),
    "schurid1": (("gamma1", "gamma2", "alpha", "n"), _run_schurid1),
    "schurid2": (("gamma1", "gamma2", "alpha", "n"), _run_schurid2),
    "square-reduction": (("gamma", "alpha", "n"), _run_square_reduction),
    "weight": (("a", "b", "c"), _run_weight),
    "bridge": (("gamma", "alpha", "m"), _run_bridge),
}


# ---------------------------------------------------------------------------
# serialization

def _report_payload(report: VerificationReport) -> dict:
    # elapsed is deliberately omitted: output must be byte-deterministic
    return {
        "identity": report.identity,
        "parameters": report.parameters,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "match": report.match,
        "method": report.method,
    }


def _render(payload: dict | list[dict], fmt: str) -> str:
    if fmt == "json":
        if isinstance(payload, list):
            return "\n".join(json.dumps(p, sort_keys=True) for p in payload)
        return json.dumps(payload, sort_keys=True)
    if fmt == "csv":
        rows = payload if isinstance(payload, list) else [payload]
        keys = sorted({k for row in rows for k in row})
        lines = [",".join(keys)]
        for row in rows:
            cells = []
            for k in keys:
                v = row.get(k, "")
                if isinstance(v, dict):
                    v = ";".join(f"{a}={b}" for a, b in sorted(v.items()))
                cells.append(str(v))
            lines.append(",".join(cells))
        return "\n".join(lines)
    if fmt == "text":
        rows = payload if isinstance(payload, list) else [payload]
        lines = []
        for row in rows:
            bits = []
            for k in sorted(row):
                v = row[k]
                if isinstance(v, dict):
                    v = ";".join(f"{a}={b}" for a, b in sorted(v.items()))
                bits.append(f"{k}={v}")
            lines.append("  ".join(bits))
        return "\n".join(lines)
    raise UsageError(f"unknown format {fmt!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _value_str(v) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


# ---------------------------------------------------------------------------
# subcommand handlers

def _handle_count(args) -> tuple[dict, int]:
    target = args.target
    budget = WorkBudget(args.budget) if args.budget else None
    if target == "box":
        value = box_count(args.a, args.b, args.c)
    elif target == "box-brute":
        value = count_pp(args.a, args.b, args.c, budget)
    elif target == "scpp":
        value = sc_count(args.a, args.b, args.c)
    elif target == "scpp-brute":
        value = count_scpp(args.a, args.b, args.c, budget)
    elif target == "scpp-signed":
        sc = count_scpp_signed(args.a, args.b, args.c, budget)
        return (
            {
                "negative": str(sc.negative),
                "positive": str(sc.positive),
                "signed_total": str(sc.signed_total),
            },
            0,
        )
    elif target == "signed-product":
        value = signed_enumeration_product(args.a, args.b, args.c)
    elif target == "signed-all-even":
        value = signed_enumeration_all_even(args.a, args.b, args.c)
    elif target == "middle-line":
        _require(args, "c1", "c2")
        value = middle_line_product(args.a, args.b, args.c1, args.c2)
    elif target == "middle-line-brute":
        _require(args, "c1", "c2")
        value = count_scpp_middle_line(args.a, args.b, args.c1, args.c2, budget)
    else:
        raise UsageError(f"unknown count target {target!r}")
    return {"value": str(value)}, 0


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required for this target")


def _handle_schur(args) -> tuple[dict, int]:
    action = args.action
    if action == "evaluate":
        shape = partition(int(x) for x in args.shape.split(",") if x != "")
        poly = schur_tableau_sum(shape, args.n)
        if args.at is None:
            terms = [
                [list(e), str(c)] for e, c in sorted(poly.terms.items())
            ]
            return {"nvars": args.n, "terms": terms}, 0
        point = [Fraction(x) for x in args.at.split(",")] if args.at else []
        if len(point) != args.n:
            raise UsageError("evaluation point must have exactly n coordinates")
        return {"value": _value_str(poly.evaluate(point))}, 0
    if action == "hook-content":
        coeffs = hook_content_rectangular(args.gamma, args.alpha, args.n)
        return {"coefficients": [str(c) for c in coeffs]}, 0
    if action == "alternating":
        return {"value": str(specialize_alternating(args.gamma, args.alpha, args.m))}, 0
    raise UsageError(f"unknown schur action {action!r}")


def _handle_pfaffian(args) -> tuple[dict, int]:
    check = pfaffian_check(args.case, args.a, args.b, args.c1, args.c2)
    payload = {
        "match": check.match,
        "pfaffian": str(check.pfaffian),
        "product": str(check.product),
    }
    return payload, 0 if check.match else 1


def _handle_verify(args) -> tuple[dict, int]:
    if args.identity not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}")
    names, runner = IDENTITIES[args.identity]
    params = {}
    for name in names:
        value = getattr(args, name.replace("-", "_"), None)
        if value is None:
            raise UsageError(f"--{name} is required for identity {args.identity}")
        params[name] = value
    budget = WorkBudget(args.budget) if args.budget else None
    report = runner(params, budget, getattr(args, "method", None))
    return _report_payload(report), 0 if report.match else 1


# ---------------------------------------------------------------------------
# sweeps

def _parse_range(spec: str) -> list[int]:
    spec = spec.strip()
    if "," in spec:
        return [int(x) for x in spec.split(",") if x != ""]
    if ".." in spec:
        lohi, _, step = spec.partition(":")
        lo, _, hi = lohi.partition("..")
        step_v = int(step) if step else 1
        if step_v <= 0:
            raise UsageError("range step must be positive")
        return list(range(int(lo), int(hi) + 1, step_v))
    return [int(spec)]


def _parse_grid(sets: Sequence[str], config_path: str | None) -> dict[str, list[int]]:
    grid: dict[str, list[int]] = {}
    if config_path:
        with open(config_path) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line {raw!r}")
                key, _, value = line.partition("=")
                grid[key.strip()] = _parse_range(value)
    for item in sets:
        if "=" not in item:
            raise UsageError(f"bad --set value {item!r}")
        key, _, value = item.partition("=")
        grid[key.strip()] = _parse_range(value)
    return grid


def _sweep_tuple(task) -> dict:
    identity, params, budget_cap, method = task
    _, runner = IDENTITIES[identity]
    budget = WorkBudget(budget_cap) if budget_cap else None
    try:
        report = runner(params, budget, method)
    except (ParityError, ValueError) as exc:
        if isinstance(exc, BudgetExceededError):
            raise
        return {
            "identity": identity,
            "parameters": params,
            "status": "skipped",
            "reason": str(exc),
        }
    payload = _report_payload(report)
    payload["status"] = "ok"
    return payload


def _handle_sweep(args) -> tuple[list[dict], int]:
    if args.identity not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}")
    names, _ = IDENTITIES[args.identity]
    grid = _parse_grid(args.set or [], args.config)
    missing = [n for n in names if n not in grid]
    if missing:
        raise UsageError(f"missing grid ranges for: {', '.join(missing)}")
    extra = [k for k in grid if k not in names]
    if extra:
        raise UsageError(f"unknown parameters for {args.identity}: {', '.join(extra)}")

    tuples = sorted(_cartesian(*(grid[n] for n in names)))
    tasks = [
        (args.identity, dict(zip(names, values)), args.budget, getattr(args, "method", None))
        for values in tuples
    ]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_sweep_tuple, tasks))
    else:
        results = [_sweep_tuple(t) for t in tasks]

    matched = sum(1 for r in results if r.get("status") == "ok" and r["match"])
    mismatched = sum(1 for r in results if r.get("status") == "ok" and not r["match"])
    skipped = sum(1 for r in results if r.get("status") == "skipped")
    summary = {
        "identity": args.identity,
        "status": "summary",
        "checked": matched + mismatched,
        "matched": matched,
        "mismatched": mismatched,
        "skipped": skipped,
    }
    return results + [summary], 0 if mismatched == 0 else 1


# ---------------------------------------------------------------------------
# argument parsing

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--budget", type=int, default=None, help="node-count cap")
    parser.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scpp",
        description="Exact counting and identity verification for box-bounded plane partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="closed-form and brute-force counts")
    p_count.add_argument(
        "target",
        choices=(
            "box",
            "box-brute",
            "scpp",
            "scpp-brute",
            "scpp-signed",
            "signed-product",
            "signed-all-even",
            "middle-line",
            "middle-line-brute",
        ),
    )
    p_count.add_argument("--a", type=int, required=True)
    p_count.add_argument("--b", type=int, required=True)
    p_count.add_argument("--c", type=int, default=None)
    p_count.add_argument("--c1", type=int, default=None)
    p_count.add_argument("--c2", type=int, default=None)
    _add_common(p_count)

    p_schur = sub.add_parser("schur", help="Schur polynomial queries")
    p_schur.add_argument("action", choices=("evaluate", "hook-content", "alternating"))
    p_schur.add_argument("--shape", default="", help="comma-separated partition")
    p_schur.add_argument("--n", type=int, default=0, help="variable count")
    p_schur.add_argument("--at", default=None, help="comma-separated rational point")
    p_schur.add_argument("--gamma", type=int, default=0)
    p_schur.add_argument("--alpha", type=int, default=0)
    p_schur.add_argument("--m", type=int, default=0)
    _add_common(p_schur)

    p_pf = sub.add_parser("pfaffian", help="evaluate one bordered binomial Pfaffian")
    p_pf.add_argument("--case", choices=("even-even", "a-odd", "ab-odd"), required=True)
    p_pf.add_argument("--a", type=int, required=True)
    p_pf.add_argument("--b", type=int, required=True)
    p_pf.add_argument("--c1", type=int, required=True)
    p_pf.add_argument("--c2", type=int, required=True)
    _add_common(p_pf)

    p_verify = sub.add_parser("verify", help="check one identity at one tuple")
    p_verify.add_argument("identity", choices=sorted(IDENTITIES))
    for flag in ("a", "b", "c", "c1", "c2", "gamma", "gamma1", "gamma2", "alpha", "n", "m"):
        p_verify.add_argument(f"--{flag}", type=int, default=None)
    p_verify.add_argument(
        "--method", choices=("full-expansion", "evaluation-sweep"), default=None
    )
    _add_common(p_verify)

    p_sweep = sub.add_parser("sweep", help="run one identity over a parameter grid")
    p_sweep.add_argument("identity", choices=sorted(IDENTITIES))
    p_sweep.add_argument(
        "--set",
        action="append",
        metavar="key=range",
        help="grid range, e.g. a=0..6:2 or c1=0,2,4 (repeatable)",
    )
    p_sweep.add_argument("--config", default=None, help="file of key=range lines")
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument(
        "--method", choices=("full-expansion", "evaluation-sweep"), default=None
    )
    _add_common(p_sweep)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            payload, code = _handle_count(args)
        elif args.command == "schur":
            payload, code = _handle_schur(args)
        elif args.command == "pfaffian":
            payload, code = _handle_pfaffian(args)
        elif args.command == "verify":
            payload, code = _handle_verify(args)
        elif args.command == "sweep":
            payload, code = _handle_sweep(args)
        else:  # pragma: no cover - argparse enforces choices
            raise UsageError(f"unknown command {args.command!r}")
    except BudgetExceededError as exc:
        _emit(_render({"error": {"code": "budget-exceeded", "message": str(exc)}}, "json"), None)
        return 2
    except ParityError as exc:
        _emit(_render({"error": {"code": "bad-parity", "message": str(exc)}}, "json"), None)
        return 2
    except UsageError as exc:
        _emit(_render({"error": {"code": "usage", "message": str(exc)}}, "json"), None)
        return 2
    except (ValueError, ArithmeticError) as exc:
        _emit(_render({"error": {"code": "invalid-parameter", "message": str(exc)}}, "json"), None)
        return 2
    _emit(_render(payload, args.format), args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
