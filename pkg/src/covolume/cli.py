"""Command-line interface.

Exit codes: 0 when the property holds (or no counterexample was found),
1 when it fails and a witness is printed, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import convexity
from .cone import Cone, ConeError, adjoint_from_triangulation, regular_triangulation, triangulate
from .linalg import MatrixError, RationalMatrix
from .lorentz import is_covolume_bivariate, is_lorentzian
from .ratpoly import (
    PolynomialError,
    dehomogenize,
    diagonalize,
    flip,
    homogenize,
    normalize,
    parse,
    substitute_matrix,
    support,
    to_json_obj,
    to_text,
    total_degree,
)
from .scan import ScanConfig, deterministic_view, run_scan
from .sectional import test_sectional
from .segrezeta import SpecError, evaluate_one_minus_zeta, integral_oracle, parse_spec, zeta_numerators, zeta_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_text(source: str) -> str:
    """``-`` reads stdin, an existing path reads the file, anything else is literal input."""
    if source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        return Path(source).read_text()
    return source


def parse_fraction_list(text: str) -> list[Fraction]:
    s = text.strip().strip("[]")
    try:
        return [Fraction(x.strip().strip('"')) for x in s.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse number list {text!r}") from exc


def parse_matrix(text: str) -> RationalMatrix:
    """Rows separated by ``;``, entries by ``,``; a JSON list of lists also works."""
    s = text.strip()
    if s.startswith("[["):
        return RationalMatrix.from_json_obj(json.loads(s))
    return RationalMatrix.from_rows([parse_fraction_list(r) for r in s.split(";")])


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _looks_like_sequence(text: str) -> bool:
    s = text.strip()
    return s.startswith("[") or ("t" not in s and "," in s)


def _sequence_input(text: str) -> list[Fraction]:
    if _looks_like_sequence(text):
        return parse_fraction_list(text)
    f = parse(text)
    if f.num_vars not in (1, 2):
        raise UsageError("sequence checks need a number list, a univariate polynomial or a binary form")
    return convexity.coefficient_sequence_bivariate(f)


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def cmd_check(args) -> int:
    text = load_text(args.input)
    kind = args.kind
    if kind in ("logconcave", "ultralc"):
        seq = _sequence_input(text)
        test = convexity.is_log_concave_no_internal_zeros if kind == "logconcave" else convexity.is_ultra_log_concave
        ok = test(seq)
        out = {"kind": kind, "holds": ok, "sequence": [str(x) for x in seq]}
        if not ok and kind == "logconcave":
            reason, i = convexity.log_concavity_violation(seq)
            out["witness"] = {"reason": reason, "index": i}
        emit(out)
        return EXIT_OK if ok else EXIT_FAIL
    f = parse(text)
    if kind == "lorentzian":
        v = is_lorentzian(f)
        emit({"kind": kind, "holds": v.is_lorentzian, "witness": v.witness})
        return EXIT_OK if v else EXIT_FAIL
    if kind == "mconvex":
        w = convexity.m_convexity_witness(support(f))
        out = {"kind": kind, "holds": w is None, "witness": None}
        if w is not None:
            out["witness"] = {"alpha": list(w[0]), "beta": list(w[1]), "i": w[2]}
        emit(out)
        return EXIT_OK if w is None else EXIT_FAIL
    if kind == "covol2":
        ok = is_covolume_bivariate(f)
        emit({"kind": kind, "holds": ok, "sequence": [str(x) for x in convexity.coefficient_sequence_bivariate(f)]})
        return EXIT_OK if ok else EXIT_FAIL
    if kind == "sectional":
        v = test_sectional(f, trials=args.trials, seed=args.seed)
        emit({"kind": kind, **v.to_json_obj()})
        return EXIT_FAIL if v.found else EXIT_OK
    raise UsageError(f"unknown check {kind}")


def cmd_transform(args) -> int:
    f = parse(load_text(args.input))
    kind = args.kind
    if kind == "normalize":
        g = normalize(f)
    elif kind == "flip":
        if not args.degrees:
            raise UsageError("flip needs --degrees")
        g = flip(f, parse_ints(args.degrees))
    elif kind == "homogenize":
        g = homogenize(f, args.degree if args.degree is not None else max(total_degree(f), 0))
    elif kind == "dehomogenize":
        g = dehomogenize(f, args.var)
    elif kind == "subst":
        if not args.matrix:
            raise UsageError("subst needs --matrix")
        g = substitute_matrix(f, parse_matrix(args.matrix))
    elif kind == "diag":
        g = diagonalize(f)
    else:
        raise UsageError(f"unknown transform {kind}")
    if args.format == "json":
        emit(to_json_obj(g))
    else:
        sys.stdout.write(to_text(g) + "\n")
    return EXIT_OK


def cmd_adjoint(args) -> int:
    text = load_text(args.input)
    try:
        cone = Cone.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed cone file: {exc}") from exc
    if args.regular_seed is None:
        T = triangulate(cone)
    else:
        T = regular_triangulation(cone, random.Random(args.regular_seed))
    A = adjoint_from_triangulation(T)
    emit({
        "adjoint": to_text(A),
        "adjoint_json": to_json_obj(A),
        "num_extreme_rays": len(T.rays),
        "rays": [[str(x) for x in r] for r in T.rays],
        "method": T.method,
        "pieces": [sorted(p.indices) for p in T.pieces],
        "num_pieces": len(T.pieces),
        "total_volume": str(T.total_volume),
    })
    return EXIT_OK


def cmd_segre(args) -> int:
    spec = parse_spec(load_text(args.input))
    nums = zeta_numerators(spec)
    out = nums.to_json_obj()
    out["text"] = {"R_reduced": to_text(nums.R_reduced), "R_full": to_text(nums.R_full), "P": to_text(nums.P)}
    if args.series_order is not None:
        if args.series_order < 0:
            raise UsageError("--series-order must be nonnegative")
        out["series"] = zeta_series(nums, args.series_order).to_json_obj()
    if args.oracle:
        t = [Fraction(args.t)] * spec.num_factors
        exact = evaluate_one_minus_zeta(nums, t)
        est = integral_oracle(spec, t, samples=args.samples, seed=args.seed)
        out["oracle"] = {"t": [str(x) for x in t], "exact": str(exact), "exact_float": float(exact),
                         "estimate": est, "relative_error": abs(est - float(exact)) / float(exact)}
    emit(out)
    return EXIT_OK


def cmd_scan(args) -> int:
    cfg = ScanConfig(
        num_factors_range=(args.min_factors, args.max_factors),
        max_exponent=args.max_exponent,
        num_generators_range=(args.min_generators, args.max_generators),
        count=args.count,
        master_seed=args.seed,
        workers=args.workers,
    )
    report = run_scan(cfg, Path(args.reproducers) if args.reproducers else None)
    if args.no_timing:
        report = deterministic_view(report)
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    s = report["summary"]
    ok = s["errors"] == 0 and s["suite_passed"] == cfg.count and s["conjecture_passed"] == cfg.count
    print(f"suite {s['suite_passed']}/{cfg.count}  conjecture {s['conjecture_passed']}/{cfg.count}  "
          f"errors {s['errors']}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_fixtures(args) -> int:
    from .fixtures import run_fixtures
    results = run_fixtures()
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}{'  ' + detail if detail else ''}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="covolume", description="Exact checks for covolume and Lorentzian polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="test a property of a polynomial or sequence")
    c.add_argument("kind", choices=["lorentzian", "mconvex", "logconcave", "ultralc", "sectional", "covol2"])
    c.add_argument("input", help="file path, '-' for stdin, or literal text")
    c.add_argument("--trials", type=int, default=200)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("transform", help="apply a polynomial transformation")
    t.add_argument("kind", choices=["normalize", "flip", "homogenize", "dehomogenize", "subst", "diag"])
    t.add_argument("input")
    t.add_argument("--degrees", help="per-variable degrees for flip, e.g. 7,4,1")
    t.add_argument("--degree", type=int, help="target degree for homogenize")
    t.add_argument("--var", type=int, default=0, help="variable set to 1 by dehomogenize")
    t.add_argument("--matrix", help="rows separated by ';', entries by ','")
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.set_defaults(func=cmd_transform)

    a = sub.add_parser("adjoint", help="adjoint polynomial of a cone file")
    a.add_argument("input")
    a.add_argument("--regular-seed", type=int, help="use a random regular triangulation with this seed")
    a.set_defaults(func=cmd_adjoint)

    s = sub.add_parser("segre", help="Segre zeta numerators of a monomial ideal")
    s.add_argument("input", help="JSON spec or monomial text like 'x1*x2, x1*x3'")
    s.add_argument("--series-order", type=int)
    s.add_argument("--oracle", action="store_true", help="compare with floating-point quadrature")
    s.add_argument("--t", default="1/10", help="evaluation point for the oracle (all coordinates)")
    s.add_argument("--samples", type=int, default=1 << 14)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_segre)

    sc = sub.add_parser("scan", help="random monomial ideal scan")
    sc.add_argument("--count", type=int, default=300)
    sc.add_argument("--min-factors", type=int, default=1)
    sc.add_argument("--max-factors", type=int, default=3)
    sc.add_argument("--max-exponent", type=int, default=6)
    sc.add_argument("--min-generators", type=int, default=2)
    sc.add_argument("--max-generators", type=int, default=6)
    sc.add_argument("--seed", type=int, default=ScanConfig.master_seed)
    sc.add_argument("--workers", type=int, default=1)
    sc.add_argument("--out")
    sc.add_argument("--reproducers", help="directory for conjecture-failure specs")
    sc.add_argument("--no-timing", action="store_true", help="omit the timing block")
    sc.set_defaults(func=cmd_scan)

    f = sub.add_parser("fixtures", help="run the worked-example corpus")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PolynomialError, SpecError, ConeError, MatrixError, ValueError, TypeError,
            json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
