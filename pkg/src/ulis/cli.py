"""
Command-line front end.

    ulis count --pattern 231 --class perm --max-n 9 --method series
    ulis series --pattern 231 --terms 20
    ulis singularity --tol 1e-12
    ulis ratios --max-n 30 --format csv
    ulis sample --n 200 --trials 200000 --seed 1 --format json
    ulis verify --suite oeis --max-n 9
    ulis bijection f --perm 3,5,1,2,4,7,8,6

Exit status: 0 on success, 1 on a usage error, 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from collections.abc import Sequence

from . import bijections as bij
from .enumeration import (
    DEFAULT_CEILING, CountTable, count_avoiders,
    count_bidirectional_ballot, count_involution_avoiders, count_ulis_avoiders,
    count_ulis_involutions,
)
from .perm import parse_permutation
from .sampler import RNG_ALGORITHM, estimate_ank
from .series import U231_RADICAND, closed_form_u231, find_real_root, solve_u231
from .trees import catalan, ratio_flags, ratio_report, u132_fast
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser", "render_counts"]

PATTERNS = {"123": (1, 2, 3), "132": (1, 3, 2), "231": (2, 3, 1), "321": (3, 2, 1)}
CLASSES = {
    "perm": "permutations", "permutations": "permutations",
    "inv": "involutions", "involutions": "involutions",
    "ballot": "ballot",
    "total": "avoiders-total", "avoiders-total": "avoiders-total",
    "inv-total": "involution-avoiders-total", "involution-avoiders-total": "involution-avoiders-total",
}
FORMATS = ("table", "csv", "json", "bfile")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ulis", description="Pattern-avoiding permutations with a unique longest increasing subsequence.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=FORMATS):
        p.add_argument("--format", choices=formats, default="table")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("count", help="exact counts by n")
    p.add_argument("--pattern", choices=sorted(PATTERNS))
    p.add_argument("--class", dest="object_class", choices=sorted(CLASSES), default="perm")
    p.add_argument("--method", choices=("brute", "series", "tree-dp"), default="brute")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, help="first n (default 0, or 1 for involutions and ballot words)")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING, help="largest n allowed for brute force")
    p.add_argument("--threads", type=int, default=1)
    common(p)

    p = sub.add_parser("series", help="generating function coefficients")
    p.add_argument("--pattern", choices=["231"], default="231")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--form", choices=("equation", "closed"), default="equation")
    common(p)

    p = sub.add_parser("singularity", help="dominant singularity of the 231 generating function")
    p.add_argument("--tol", type=float, default=1e-12)
    common(p, ("table", "json"))

    p = sub.add_parser("ratios", help="u_n(132)/C_n by the tree count")
    p.add_argument("--max-n", type=int, required=True)
    common(p, ("table", "csv", "json"))

    p = sub.add_parser("sample", help="Monte Carlo deepest-leaf distribution of random plane trees")
    p.add_argument("--n", type=int, required=True, help="tree size in vertices")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--threads", type=int, default=1)
    common(p, ("table", "json"))

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-n", type=int)
    common(p, ("table", "json"))

    p = sub.add_parser("bijection", help="apply psi, phi, f or rs to a permutation")
    p.add_argument("map", choices=("psi", "phi", "f", "rs"))
    p.add_argument("--perm", required=True, help="one-line notation, e.g. 3,5,1,2,4")
    common(p, ("table", "json"))
    return parser


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items())}


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_counts(table: CountTable, fmt: str, config: dict | None = None) -> str:
    if fmt == "csv":
        return "n,count\n" + "".join(f"{n},{c}\n" for n, c in table.rows)
    if fmt == "bfile":
        return "".join(f"{n} {c}\n" for n, c in table.rows)
    if fmt == "json":
        return _dumps({
            "config": config or {},
            "method": table.method,
            "pattern": "".join(map(str, table.pattern)) if table.pattern else None,
            "object_class": table.object_class,
            "rows": [{"n": n, "count": str(c)} for n, c in table.rows],
        })
    width = max((len(str(c)) for _, c in table.rows), default=1)
    head = f"# {table.object_class}"
    if table.pattern:
        head += f" avoiding {''.join(map(str, table.pattern))}"
    head += f" ({table.method})\n"
    return head + "".join(f"{n:>4} {c:>{width}}\n" for n, c in table.rows)


def _count_table(args) -> CountTable:
    cls = CLASSES[args.object_class]
    method = args.method
    if cls != "ballot" and args.pattern is None:
        raise UsageError("--pattern is required for this class")
    q = PATTERNS.get(args.pattern) if args.pattern else None
    if method == "series" and (args.pattern != "231" or cls != "permutations"):
        raise UsageError("--method series is only available for --pattern 231 --class perm")
    if method == "tree-dp" and (args.pattern != "132" or cls != "permutations"):
        raise UsageError("--method tree-dp is only available for --pattern 132 --class perm")
    if cls == "ballot" and method != "brute":
        raise UsageError("ballot words are counted by --method brute only")
    lo = args.min_n
    if lo is None:
        lo = 1 if cls in ("involutions", "ballot") else 0
    hi = args.max_n
    if lo < 0 or hi < lo:
        raise UsageError(f"empty or negative range {lo}..{hi}")
    if cls == "ballot" and lo < 1:
        raise UsageError("ballot words need n >= 1")

    if method == "series":
        coeffs = solve_u231(hi).integer_coefficients()
        rows = [(n, coeffs[n]) for n in range(lo, hi + 1)]
    elif method == "tree-dp":
        rows = [(n, u132_fast(n)) for n in range(lo, hi + 1)]
    else:
        ceiling = args.ceiling
        if cls == "permutations":
            fn = lambda n: count_ulis_avoiders(q, n, ceiling=ceiling, workers=args.threads)
        elif cls == "involutions":
            fn = lambda n: count_ulis_involutions(q, n, ceiling=ceiling)
        elif cls == "avoiders-total":
            fn = lambda n: count_avoiders(q, n, ceiling=ceiling)
        elif cls == "involution-avoiders-total":
            fn = lambda n: count_involution_avoiders(q, n, ceiling=ceiling)
        else:
            fn = count_bidirectional_ballot
        rows = [(n, fn(n)) for n in range(lo, hi + 1)]
    return CountTable(q, cls, method, tuple(rows))


def cmd_count(args) -> tuple[str, int]:
    return render_counts(_count_table(args), args.format, _config(args)), 0


def cmd_series(args) -> tuple[str, int]:
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    order = args.terms - 1
    s = solve_u231(order) if args.form == "equation" else closed_form_u231(order)
    table = CountTable(PATTERNS["231"], "permutations", "series", tuple(enumerate(s.integer_coefficients())))
    return render_counts(table, args.format, _config(args)), 0


def cmd_singularity(args) -> tuple[str, int]:
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    root = find_real_root(U231_RADICAND, 0.0, 0.5, args.tol)
    if args.format == "json":
        return _dumps({"config": _config(args), "polynomial": list(U231_RADICAND),
                       "root": f"{root:.12f}", "growth_rate": f"{1 / root:.12f}"}), 0
    return f"root        {root:.12f}\ngrowth rate {1 / root:.12f}\n", 0


def cmd_ratios(args) -> tuple[str, int]:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    rows = ratio_report(args.max_n)
    flags = ratio_flags(rows)
    if args.format == "json":
        return _dumps({
            "config": _config(args),
            "rows": [{"n": r.n, "u": str(int(r.ratio * catalan(r.n))),
                      "catalan": str(catalan(r.n)), "ratio": str(r.ratio), "value": f"{r.value:.15g}"}
                     for r in rows],
            "flags": [{"n": n, "note": note} for n, note in flags],
        }), 0
    if args.format == "csv":
        return "n,ratio,value\n" + "".join(f"{r.n},{r.ratio},{r.value:.15g}\n" for r in rows), 0
    lines = [f"{r.n:>4} {r.value:.15f}" for r in rows]
    lines.append("flags: " + (", ".join(f"n={n} {note}" for n, note in flags) if flags else "none on this range"))
    return "\n".join(lines) + "\n", 0


def cmd_sample(args) -> tuple[str, int]:
    seed = args.seed
    note = ""
    if seed is None:
        if args.format == "json":
            raise UsageError("--seed is required with --format json")
        seed = secrets.randbits(64)
        note = f"# no --seed given, using {seed}\n"
    if args.n < 1 or args.trials < 1 or args.kmax < 1:
        raise UsageError("--n, --trials and --kmax must be positive")
    rep = estimate_ank(args.n, args.kmax, args.trials, seed, workers=args.threads)
    if args.format == "json":
        cfg = _config(args)
        cfg["seed"] = seed
        return _dumps({"config": cfg, "report": rep.as_dict()}), 0
    lines = [f"# n={rep.n} trials={rep.trials} seed={rep.seed} rng={RNG_ALGORITHM}",
             f"{'k':>4} {'count':>10} {'estimate':>10} {'stderr':>10} {'2^-k':>10}"]
    for k, (c, e, se) in enumerate(zip(rep.counts, rep.estimates, rep.stderr), start=1):
        lines.append(f"{k:>4} {c:>10} {e:>10.6f} {se:>10.6f} {2.0 ** -k:>10.6f}")
    lines.append(f"{'>' + str(rep.k_max):>4} {rep.overflow:>10} {rep.overflow_fraction:>10.6f}")
    return note + "\n".join(lines) + "\n", 0


def cmd_verify(args) -> tuple[str, int]:
    result = run_suite(args.suite, args.max_n)
    code = 0 if result.passed else 2
    if args.format == "json":
        return _dumps({"config": _config(args), "suite": result.suite, "checks": result.checks,
                       "passed": result.passed, "failure": result.failure}), code
    return str(result) + "\n", code


def cmd_bijection(args) -> tuple[str, int]:
    p = parse_permutation(args.perm)
    if args.map == "psi":
        image = str(bij.psi(p))
    elif args.map == "phi":
        image = str(bij.phi(p))
    elif args.map == "f":
        image = str(bij.ck_f(p))
    else:
        P, Q = bij.rs_insert(p)
        if args.format == "json":
            return _dumps({"config": _config(args), "P": [list(r) for r in P.rows],
                           "Q": [list(r) for r in Q.rows], "shape": list(P.shape)}), 0
        return f"P\n{P}\nQ\n{Q}\n" if p else "P\nQ\n", 0
    if args.format == "json":
        return _dumps({"config": _config(args), "image": image}), 0
    return image + "\n", 0


COMMANDS = {
    "count": cmd_count, "series": cmd_series, "singularity": cmd_singularity,
    "ratios": cmd_ratios, "sample": cmd_sample, "verify": cmd_verify, "bijection": cmd_bijection,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        # ValueError covers malformed permutations, pattern witnesses and size guards
        print(f"ulis {args.command}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
