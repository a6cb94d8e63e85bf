"""Command-line interface: ``edet det|check|bench|search|suite``.

Exit codes: 0 success, 1 negative outcome (no witness, failed check),
2 parse error (including a gamma list of the wrong length), 3 method/ring or claim/ring mismatch, 4 division unavailable,
5 bench order cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__, engines, kernels
from .combinatorics import GammaAssignment
from .errors import (
    DivisionUnavailable,
    EdetError,
    InadmissibleMethod,
    InvalidPairing,
    ParseError,
    PayloadLength,
    RingMismatch,
    SearchExhausted,
)
from .io import load_matrix, parse_value, ring_from_name
from .matrix import Matrix
from .verification import (
    CLAIMS,
    SUITES,
    dumps,
    measure,
    run_property_suite,
    search_counterexample,
    trial_rng,
)

EXIT_NEGATIVE, EXIT_PARSE, EXIT_INADMISSIBLE, EXIT_DIVISION, EXIT_CAP = 1, 2, 3, 4, 5
BENCH_CAP = 7


def default_seed():
    return int(os.environ.get("EDET_SEED", "0"))


def _emit(obj, output):
    text = dumps(obj)
    if output:
        Path(output).write_text(text + "\n")
    else:
        print(text)


def _gamma_from_args(args, A):
    ring = A.ring
    if args.gamma_seed is not None:
        return GammaAssignment.seeded(args.gamma_seed)
    if args.gamma_file:
        try:
            values = json.loads(Path(args.gamma_file).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read gamma file: {exc}") from exc
        return GammaAssignment.explicit([ring.decode(v) for v in values])
    if args.gamma is not None:
        return GammaAssignment.constant(parse_value(ring, args.gamma))
    return None


def cmd_det(args):
    A = load_matrix(args.input)
    gamma = _gamma_from_args(args, A)
    if args.method not in ("b3", "b4") and gamma is not None:
        raise InadmissibleMethod(f"method {args.method} takes no gamma")
    if args.count_ops:
        value, report = measure(args.method, A, gamma=gamma, workers=args.workers)
    else:
        value = engines.determinant(A, args.method, gamma=gamma, backend=args.backend, workers=args.workers)
    print(A.ring.format(value))
    if args.count_ops:
        _emit(report.to_json(), args.output)
    return 0


def cmd_check(args):
    A = load_matrix(args.input)
    ring = A.ring
    if args.corollary == 1:
        residuals = [engines.identity_residual(A, t, workers=args.workers) for t in range(1, A.n)]
        print("residuals: " + ", ".join(ring.format(r) for r in residuals))
        return 0 if all(ring.is_zero(r) for r in residuals) else EXIT_NEGATIVE
    lhs, rhs = engines.singularity_blocks(A, workers=args.workers)
    print("singular" if ring.equal(lhs, rhs) else "nonsingular")
    print(f"L_n even-odd: {ring.format(lhs)}")
    print(f"L_n-1 even-odd: {ring.format(rhs)}")
    return 0


def _parse_range(text):
    lo, sep, hi = text.partition("-")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise ParseError(f"bad order range {text!r}") from None
    if lo < 1 or hi < lo:
        raise ParseError(f"bad order range {text!r}")
    return range(lo, hi + 1)


def cmd_bench(args):
    orders = _parse_range(args.n)
    if orders[-1] > BENCH_CAP and not args.force:
        print(f"order {orders[-1]} exceeds the cap {BENCH_CAP}; pass --force", file=sys.stderr)
        return EXIT_CAP
    ring = ring_from_name(args.ring)
    rows = []
    header = f"{'n':>3} {'trial':>5} {'add+sub':>10} {'pred add':>10} {'ratio':>8} {'mul':>10} {'pred mul':>10} {'ratio':>8} {'loose':>8} {'outside':>7}"
    lines = [header]
    for n in orders:
        for t in range(args.trials):
            A = Matrix.random(ring, n, trial_rng(args.seed, "bench", ring.name, n, t))
            _, rep = measure(args.method, A, workers=args.workers)
            rows.append({"trial": str(t), **rep.to_json()})
            lines.append(
                f"{n:>3} {t:>5} {rep.additions + rep.subtractions:>10} {rep.predicted_additions:>10} "
                f"{rep.addition_ratio:>8.4f} {rep.multiplications:>10} {rep.predicted_multiplications:>10} "
                f"{rep.multiplication_ratio:>8.4f} {rep.loose_multiplication_ratio:>8.4f} {rep.mul_outside_pow:>7}"
            )
    print("\n".join(lines))
    if args.output:
        Path(args.output).write_text(dumps({"ring": ring.name, "method": args.method, "rows": rows}) + "\n")
    return 0


def cmd_search(args):
    ring = ring_from_name(args.ring)
    try:
        w = search_counterexample(args.claim, ring, args.n, seed=args.seed, max_trials=args.max_trials)
    except SearchExhausted as exc:
        print(str(exc), file=sys.stderr)
        if args.output:
            _emit({"claim": args.claim, "ring": ring.name, "found": False, "trials": str(exc.trials)}, args.output)
        return EXIT_NEGATIVE
    _emit({"found": True, **w.to_json()}, args.output)
    return 0


def cmd_suite(args):
    ring = ring_from_name(args.ring)
    reports = run_property_suite(args.suite, ring, args.n, trials=args.trials, seed=args.seed, workers=args.workers)
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        note = "" if r.asserted else " (not asserted)"
        print(f"{r.property_id} {r.ring} n={r.n} trials={r.trials} failures={r.failures} {status}{note}")
    if args.output:
        Path(args.output).write_text(dumps([r.to_json() for r in reports]) + "\n")
    return 0 if all(r.ok for r in reports) else EXIT_NEGATIVE


def build_parser():
    p = argparse.ArgumentParser(prog="edet", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"edet {__version__} (kernels: {kernels.BACKEND})")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=False):
        sp.add_argument("--workers", type=int, default=1)
        if seed:
            sp.add_argument("--seed", type=int, default=default_seed())

    d = sub.add_parser("det", help="evaluate a determinant")
    d.add_argument("--input", required=True)
    d.add_argument("--method", choices=engines.METHODS, default="b5")
    g = d.add_mutually_exclusive_group()
    g.add_argument("--gamma", help="single shift (b4) or constant shift for every permutation (b3)")
    g.add_argument("--gamma-seed", type=int, help="seeded random per-permutation shifts (b3)")
    g.add_argument("--gamma-file", help="JSON list of n! shifts in lexicographic rank order (b3)")
    d.add_argument("--count-ops", action="store_true")
    d.add_argument("--backend", choices=("auto", "kernel", "generic"), default="auto")
    d.add_argument("--output")
    common(d)
    d.set_defaults(func=cmd_det)

    c = sub.add_parser("check", help="power-sum identities: vanishing residuals (1) or the singularity criterion (2)")
    c.add_argument("--input", required=True)
    c.add_argument("--corollary", type=int, choices=(1, 2), required=True)
    common(c)
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("bench", help="operation counts vs predicted complexity")
    b.add_argument("--n", default="2-7", help="order or range, e.g. 4-7")
    b.add_argument("--ring", default="rational")
    b.add_argument("--method", choices=engines.METHODS, default="b5")
    b.add_argument("--trials", type=int, default=1)
    b.add_argument("--force", action="store_true")
    b.add_argument("--output")
    common(b, seed=True)
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("search", help="random search for counterexamples")
    s.add_argument("--claim", choices=CLAIMS, required=True)
    s.add_argument("--ring", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-trials", type=int, default=1000)
    s.add_argument("--output")
    common(s, seed=True)
    s.set_defaults(func=cmd_search)

    u = sub.add_parser("suite", help="run a property suite")
    u.add_argument("--suite", choices=tuple(SUITES), required=True)
    u.add_argument("--ring", required=True)
    u.add_argument("--n", type=int, required=True)
    u.add_argument("--trials", type=int, default=200)
    u.add_argument("--output")
    common(u, seed=True)
    u.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, PayloadLength) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InadmissibleMethod, InvalidPairing, RingMismatch) as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except DivisionUnavailable as exc:
        print(f"division unavailable: {exc}", file=sys.stderr)
        return EXIT_DIVISION
    except EdetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
