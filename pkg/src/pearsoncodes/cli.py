"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import __version__
from .channel import RNG_NAME, ChannelParams, run_experiment
from .codebook import enumerate_pearson, enumerate_t_constrained, verify_pearson
from .core import BudgetExceededError, Codebook, DomainError, read_codebook, write_codebook
from .counting import (
    count_1_constrained,
    count_2_constrained,
    count_pearson_closed,
    redundancy_report,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def parse_range(text: str) -> list[int]:
    """``"4"``, ``"4-6"`` or ``"4,6,9"`` (items may themselves be ranges)."""
    values: list[int] = []
    try:
        for item in text.split(","):
            lo, sep, hi = item.strip().partition("-")
            if sep:
                a, b = int(lo), int(hi)
                if b < a:
                    raise ValueError
                values.extend(range(a, b + 1))
            else:
                values.append(int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty range")
    return values


def parse_refs(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid symbol list {text!r}") from None


def fmt(x) -> str:
    if x is None:
        return "NA"
    if isinstance(x, (int, str)):
        return str(x)
    return f"{x:.6g}"


def _metadata(seed=None, rng=None) -> str:
    return f"# pearsoncodes {__version__}, seed={'-' if seed is None else seed}, rng={rng or '-'}\n"


def _emit(args, header: list[str], rows: list[list], seed=None, rng=None) -> None:
    buf = io.StringIO()
    if args.format == "human":
        cells = [header] + [[fmt(v) for v in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for i, r in enumerate(cells):
            buf.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
            if i == 0:
                buf.write("  ".join("-" * w for w in widths) + "\n")
    else:
        buf.write(_metadata(seed, rng))
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([[fmt(v) for v in row] for row in rows])
    _write_out(args, buf.getvalue())


def _write_out(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_codebook(args, q: int, n: int) -> Codebook:
    if args.family == "pearson":
        return Codebook(q, n, enumerate_pearson(q, n, args.budget))
    if not args.refs:
        raise DomainError("--family tconstrained needs --refs")
    return Codebook(q, n, enumerate_t_constrained(q, n, args.refs, args.budget))


def cmd_count(args) -> int:
    rows = []
    for n in args.n:
        for q in args.q:
            if q < 2 or n < 2:
                raise DomainError(f"need q >= 2 and n >= 2, got q={q}, n={n}")
            rep = redundancy_report(q, n)
            rows.append([
                q, n,
                count_1_constrained(q, n), count_2_constrained(q, n), count_pearson_closed(q, n),
                rep.r1, rep.r2, rep.rP, rep.r0_approx,
            ])
    _emit(args, ["q", "n", "N1", "N2", "P", "r1", "r2", "rP", "r0_approx"], rows)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cb = _family_codebook(args, args.q, args.n)
    label = "pearson" if args.family == "pearson" else "tconstrained refs=" + ",".join(map(str, args.refs))
    comment = f"pearsoncodes {__version__}: {label} q={args.q} n={args.n}"
    if args.output:
        write_codebook(cb, args.output, comment)
    else:
        write_codebook(cb, sys.stdout, comment)
    print(f"{len(cb)} words", file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    cb = read_codebook(args.file)
    violation = verify_pearson(cb)
    if violation is None:
        print(f"OK q={cb.q} n={cb.n} words={len(cb)}")
        return EXIT_OK
    print(violation.kind.value)
    print(f"witness_a {' '.join(map(str, violation.witness_a))}")
    if violation.witness_b is not None:
        print(f"witness_b {' '.join(map(str, violation.witness_b))}")
        print(f"c1 {violation.shift_c1}")
        print(f"c2 {violation.scale_c2}")
    return EXIT_FAIL


def cmd_simulate(args) -> int:
    cb = _family_codebook(args, args.q, args.n)
    params = ChannelParams(args.gain, args.offset, args.sigma, args.seed)
    stats = run_experiment(cb, params, args.trials, workers=args.workers)
    rows = []
    for det in ("pearson", "euclidean"):
        errors = getattr(stats, f"word_errors_{det}")
        rows.append([det, args.q, args.n, args.gain, args.offset, args.sigma, args.trials,
                     errors, errors / args.trials, stats.ci_halfwidth(det)])
    _emit(args, ["detector", "q", "n", "a", "b", "sigma", "trials", "errors", "wer", "ci"],
          rows, seed=args.seed, rng=RNG_NAME)
    return EXIT_OK


def cmd_redundancy(args) -> int:
    n_max = args.n_max if args.n_max is not None else args.n
    if args.q < 2 or args.n < 2 or n_max < args.n:
        raise DomainError("need q >= 2, n >= 2 and n <= n-max")
    rows = []
    for n in range(args.n, n_max + 1):
        rep = redundancy_report(args.q, n)
        rows.append([n, rep.r1, rep.r2, rep.rP, rep.r0_approx])
    _emit(args, ["n", "r1", "r2", "rP", "r0_approx"], rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pearson-codes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--format", choices=("csv", "human"), default="csv")

    def family(p):
        p.add_argument("--family", choices=("pearson", "tconstrained"), default="pearson")
        p.add_argument("--refs", type=parse_refs, help="reference symbols, e.g. 0,3")
        p.add_argument("--budget", type=int, default=None, help="max candidate words (default 1e9)")

    p = sub.add_parser("count", help="N1, N2, P and redundancies over (q, n) ranges")
    p.add_argument("--q", type=parse_range, required=True)
    p.add_argument("--n", type=parse_range, required=True)
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="write a codebook file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    family(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="verify Properties A and B of a codebook file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("simulate", help="Monte Carlo word error rates, Pearson vs Euclidean")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    family(p)
    p.add_argument("--gain", type=float, default=1.0)
    p.add_argument("--offset", type=float, default=0.0)
    p.add_argument("--sigma", type=float, default=0.1)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("redundancy", help="r1, r2, rP, r0 versus n for one q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--n-max", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_redundancy)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
