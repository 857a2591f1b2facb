"""Command-line front end.

Exit codes: 0 success, 1 a verification failed (witness printed),
2 usage or precondition error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from ._version import __version__
from . import checks, identities, serialize
from .engine import (
    DEGREE_CAP_ENV,
    ENGINE_SERIES,
    ENGINE_WINDOW,
    coeffs_series,
    coeffs_window,
)
from .errors import (
    DegreeCapExceeded,
    IEPolyError,
    OverflowDetected,
    PreconditionViolated,
)
from .height import height
from .represent import Triple
from .search import SearchTask, find_bound_attained_pairs, find_sharp_step_pairs, sweep_heights

# positional parameter order for each whole-polynomial check
_BOUND_PARAMS = {
    "height-residue": ("p", "q", "r", "s"),
    "coeffset-residue": ("p", "q", "r", "s"),
    "recursive-bound": ("p", "q", "s", "r"),
    "absolute-bound": ("p", "q", "s", "r"),
    "iterated-bound": ("p", "q", "sign"),
}


def _int_param(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise PreconditionViolated(f"expected an integer, got {token!r}") from None


def _triple_from(args) -> Triple:
    return Triple(args.p, args.q, args.r)


def _cap_from(args) -> int | None:
    return getattr(args, "degree_cap", None)


def _cmd_coeffs(args) -> int:
    t = _triple_from(args)
    series = window = None
    if args.engine in (ENGINE_SERIES, "both"):
        mode = "half" if args.half else "full"
        series = coeffs_series(t, mode=mode, cap=_cap_from(args))
    if args.engine in (ENGINE_WINDOW, "both"):
        window = coeffs_window(t, cap=_cap_from(args))
        if args.half:
            half_len = window.degree // 2 + 1
            window = type(window)(
                triple=window.triple,
                degree=window.degree,
                coeffs=window.coeffs[:half_len],
                engine=window.engine,
                half=True,
            )
    if series is not None and window is not None:
        if not np.array_equal(series.coeffs, window.coeffs):
            where = int(np.flatnonzero(series.coeffs != window.coeffs)[0])
            print(
                f"engine disagreement at index {where}: "
                f"series={int(series.coeffs[where])} window={int(window.coeffs[where])}",
                file=sys.stderr,
            )
            return 1
    vec = series if series is not None else window

    if args.format == "bin":
        if args.out:
            with open(args.out, "wb") as fh:
                serialize.write_binary(vec, fh)
        else:
            serialize.write_binary(vec, sys.stdout.buffer)
        return 0
    writer = {
        "text": serialize.write_text,
        "csv": serialize.write_csv,
        "json": serialize.write_json,
    }[args.format]
    if args.out:
        with open(args.out, "w") as fh:
            writer(vec, fh)
    else:
        writer(vec, sys.stdout)
    return 0


def _cmd_height(args) -> int:
    rec = height(_triple_from(args), cap=_cap_from(args))
    if args.json:
        print(rec.to_json())
    else:
        p, q, r = sorted((rec.triple.p, rec.triple.q, rec.triple.r))
        print(
            f"{{{p},{q},{r}}}: height {rec.height} "
            f"(coefficients {rec.a_minus}..{rec.a_plus}"
            + (", flat)" if rec.flat else ")")
        )
    return 0


def _report_exit(report, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        print(report)
        if report.witness is not None:
            print("witness:", json.dumps(report.witness, separators=(",", ":")))
    return 0 if report.passed else 1


def _cmd_verify(args) -> int:
    cid = args.check_id
    params = args.params
    if cid in identities.IDENTITY_CHECKS:
        if len(params) != 3:
            raise PreconditionViolated(f"{cid} takes p q r, got {len(params)} values")
        t = Triple(*(_int_param(x) for x in params))
        report = identities.verify_identity(
            cid, t, samples=args.samples, seed=args.seed, mode=args.mode, s=args.s
        )
        return _report_exit(report, args.json)
    if cid in _BOUND_PARAMS:
        names = _BOUND_PARAMS[cid]
        if len(params) != len(names):
            raise PreconditionViolated(
                f"{cid} takes {' '.join(names)}, got {len(params)} values"
            )
        vals = [p if n == "sign" else _int_param(p) for n, p in zip(names, params)]
        if cid == "height-residue":
            report = checks.verify_height_residue(*vals)
        elif cid == "coeffset-residue":
            report = checks.verify_coeffset_residue(*vals, relation=args.relation)
        elif cid == "recursive-bound":
            report = checks.verify_recursive_bound(*vals)
        elif cid == "absolute-bound":
            report = checks.verify_absolute_bound(*vals)
        else:
            report = checks.verify_iterated_bound(*vals)
        return _report_exit(report, args.json)
    raise PreconditionViolated(f"unknown check id {cid!r}")


def _parse_bound(token: str) -> tuple[int, int]:
    if ":" in token:
        lo, hi = token.split(":", 1)
        return _int_param(lo), _int_param(hi)
    return 3, _int_param(token)


def _cmd_search(args) -> int:
    ranges = tuple(_parse_bound(tok) for tok in args.bounds)
    out = args.out or f"iepoly-{args.kind}.jsonl"
    task = SearchTask(
        kind=args.kind,
        ranges=ranges,
        s=args.s,
        resume_from=out if args.resume else None,
    )
    workers = args.workers if args.workers else (os.cpu_count() or 1)
    summary = sweep_heights(task, out, workers=workers)
    print(
        f"{args.kind}: {summary.total} keys -> {summary.path} "
        f"(skipped {summary.skipped}, written {summary.written}, errors {summary.errors})"
    )
    if summary.solutions:
        print("solutions:", " ".join(str(k) for k in summary.solutions))
    return 0


def _cmd_sup(args) -> int:
    value, attained = checks.bounded_height_sup(args.s, args.p_max)
    if args.json:
        print(
            json.dumps(
                {"s": args.s, "p_max": args.p_max, "value": value,
                 "attained": [list(a) for a in attained], "lower_bound": True},
                separators=(",", ":"),
            )
        )
    else:
        shown = " ".join(f"({p},{q})" for p, q in attained) or "-"
        print(
            f"sup height for offset {args.s} over pairs <= {args.p_max}: "
            f">= {value} (attained at {shown})"
        )
    return 0


def _cmd_repro(args) -> int:
    reports = checks.verify_known_values()
    width = max(len(str(r.instance)) for r in reports)
    failed = 0
    for r in reports:
        status = "ok" if r.passed else "MISMATCH"
        inst = "{" + ",".join(str(x) for x in sorted(r.instance)) + "}"
        print(f"{r.check_id:<13} {inst:<{width + 2}} {r.detail:<28} {status}")
        if not r.passed:
            failed += 1
    print(f"{len(reports) - failed}/{len(reports)} reference values reproduced")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iepoly",
        description="Exact coefficient engines, verifiers, and searches for "
        "ternary inclusion-exclusion polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"iepoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_triple(sp):
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        sp.add_argument("r", type=int)

    def add_cap(sp):
        sp.add_argument(
            "--degree-cap",
            type=int,
            default=None,
            metavar="N",
            help=f"largest permitted polynomial degree (default from ${DEGREE_CAP_ENV})",
        )

    sp = sub.add_parser("coeffs", help="compute the coefficient vector")
    add_triple(sp)
    sp.add_argument("--engine", choices=(ENGINE_SERIES, ENGINE_WINDOW, "both"),
                    default=ENGINE_SERIES)
    sp.add_argument("--half", action="store_true",
                    help="emit only the first half (the rest follows by symmetry)")
    sp.add_argument("--format", choices=("text", "csv", "json", "bin"), default="text")
    sp.add_argument("--out", metavar="FILE")
    add_cap(sp)
    sp.set_defaults(func=_cmd_coeffs)

    sp = sub.add_parser("height", help="height and coefficient statistics")
    add_triple(sp)
    sp.add_argument("--json", action="store_true")
    add_cap(sp)
    sp.set_defaults(func=_cmd_height)

    sp = sub.add_parser("verify", help="run one verification check")
    sp.add_argument("check_id", metavar="check-id")
    sp.add_argument("params", nargs="*", help="check parameters (see README)")
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    sp.add_argument("--s", type=int, default=None,
                    help="companion offset override where applicable")
    sp.add_argument("--relation", choices=("auto", "same", "opposite"), default="auto")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("search", help="run a persisted parameter sweep")
    sp.add_argument("kind", choices=("height-sweep", "flat-hunt", "bound-attained", "sharp-step"))
    sp.add_argument("bounds", nargs="+", metavar="BOUND",
                    help="per-slot bound, either HI (lower bound 3) or LO:HI")
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--out", metavar="FILE")
    sp.add_argument("--resume", action="store_true",
                    help="trust complete lines already in the output file")
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("sup", help="bounded supremum of the height over pairs")
    sp.add_argument("s", type=int)
    sp.add_argument("p_max", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_sup)

    sp = sub.add_parser("repro", help="recompute all published reference values")
    sp.set_defaults(func=_cmd_repro)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors, 0 for --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DegreeCapExceeded, OverflowDetected) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except IEPolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
