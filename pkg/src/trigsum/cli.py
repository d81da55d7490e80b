"""Command-line front end: evaluation, Dedekind sums, verification sweeps.

Exit codes: 0 success with no unexpected FAIL verdicts; 1 when a verification
run produces a FAIL for an identity outside the known-errata set; 2 on usage
or domain errors (diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .dedekind import dedekind_def, dedekind_fast
from .identities import VerificationReport, sweep, verify_one
from .report import decimal_string, emit_report
from .sums import SumSpec, eval_sum_general
from .trig import DEFAULT_PRECISION, MIN_PRECISION, _check_precision

PRECISION_ENV = "TRIGSUM_PRECISION"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigsum",
        description="Finite trigonometric sums, Dedekind sums, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision",
        type=int,
        default=None,
        help=f"working precision in bits, >= {MIN_PRECISION} "
        f"(default: ${PRECISION_ENV} or {DEFAULT_PRECISION})",
    )
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")

    p_eval = sub.add_parser(
        "eval", parents=[common], help="evaluate S[n,m,l](p,q,r) with an error bound"
    )
    for name, default in (("n", 1), ("m", 1), ("l", 1)):
        p_eval.add_argument(f"--{name}", type=int, default=default)
    for name in ("p", "q", "r"):
        p_eval.add_argument(f"--{name}", type=int, required=True)

    p_ded = sub.add_parser("dedekind", parents=[common], help="exact Dedekind sum s(q,p)")
    p_ded.add_argument("--q", type=int, required=True)
    p_ded.add_argument("--p", type=int, required=True)
    p_ded.add_argument("--method", choices=("fast", "def"), default="fast")

    p_verify = sub.add_parser(
        "verify", parents=[common], help="check one catalog identity at one parameter point"
    )
    p_verify.add_argument("--id", required=True, help="identity id, e.g. EQ16")
    for name in ("p", "q", "r", "n", "m", "l", "a", "b"):
        p_verify.add_argument(f"--{name}", type=int, default=None)
    p_verify.add_argument("--known-errata", default=None, help="path to a known-errata JSON file")

    p_sweep = sub.add_parser(
        "sweep", parents=[common], help="verify catalog identities over a parameter range"
    )
    p_sweep.add_argument("--ids", default="all", help="'all' or comma-separated identity ids")
    p_sweep.add_argument("--pmax", type=int, default=30)
    p_sweep.add_argument("--known-errata", default=None, help="path to a known-errata JSON file")

    return parser


def _resolve_precision(arg_value) -> int:
    if arg_value is not None:
        precision = arg_value
    else:
        raw = os.environ.get(PRECISION_ENV)
        if raw is None:
            precision = DEFAULT_PRECISION
        else:
            try:
                precision = int(raw)
            except ValueError:
                raise ValueError(f"{PRECISION_ENV} must be an integer, got {raw!r}")
    _check_precision(precision)
    return precision


def load_known_errata(path=None) -> frozenset:
    """Identity ids whose FAIL verdicts are expected (shipped data file by default)."""
    if path is None:
        text = resources.files("trigsum").joinpath("data/known_errata.json").read_text("utf-8")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    expected = data.get("expected_fail", [])
    if not isinstance(expected, list) or not all(isinstance(x, str) for x in expected):
        raise ValueError("known-errata file must contain {\"expected_fail\": [ids...]}")
    return frozenset(expected)


def _exit_code(report: VerificationReport, known: frozenset) -> int:
    unexpected = [ident for ident in report.errata() if ident not in known]
    return 1 if unexpected else 0


def _write(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_eval(args, precision: int) -> int:
    spec = SumSpec(args.n, args.m, args.l, args.p, args.q, args.r)
    value = eval_sum_general(spec, precision)
    label = f"S[n={args.n},m={args.m},l={args.l}](p={args.p},q={args.q},r={args.r})"
    if args.format == "json":
        payload = {
            "spec": {"n": args.n, "m": args.m, "l": args.l, "p": args.p, "q": args.q, "r": args.r},
            "value": decimal_string(value.value),
            "bound": f"{value.bound:.2e}",
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        text = (
            "n,m,l,p,q,r,value,bound\n"
            f"{args.n},{args.m},{args.l},{args.p},{args.q},{args.r},"
            f"{decimal_string(value.value)},{value.bound:.2e}\n"
        )
    else:
        text = f"{label} = {decimal_string(value.value)} +/- {value.bound:.2e}\n"
    _write(text, args.out)
    return 0


def _cmd_dedekind(args, precision: int) -> int:
    fn = dedekind_fast if args.method == "fast" else dedekind_def
    value = fn(args.q, args.p)
    if args.format == "json":
        payload = {"q": args.q, "p": args.p, "method": args.method, "value": str(value)}
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        text = f"q,p,method,value\n{args.q},{args.p},{args.method},{value}\n"
    else:
        text = f"{value}\n"
    _write(text, args.out)
    return 0


def _cmd_verify(args, precision: int) -> int:
    params = {}
    for name in ("p", "q", "r", "n", "m", "l", "a", "b"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    verdict = verify_one(args.id, params, precision)
    report = VerificationReport(
        verdicts=[verdict], precision=precision, scope=f"verify {args.id}"
    )
    _write(emit_report(report, args.format), args.out)
    return _exit_code(report, load_known_errata(args.known_errata))


def _cmd_sweep(args, precision: int) -> int:
    if args.ids.strip() == "all":
        ids = None
    else:
        ids = [token.strip() for token in args.ids.split(",") if token.strip()]
        if not ids:
            raise ValueError("--ids must be 'all' or a comma-separated list of identity ids")
    report = sweep(ids, args.pmax, precision)
    _write(emit_report(report, args.format), args.out)
    return _exit_code(report, load_known_errata(args.known_errata))


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        precision = _resolve_precision(args.precision)
        handler = {
            "eval": _cmd_eval,
            "dedekind": _cmd_dedekind,
            "verify": _cmd_verify,
            "sweep": _cmd_sweep,
        }[args.command]
        return handler(args, precision)
    except (ValueError, TypeError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
