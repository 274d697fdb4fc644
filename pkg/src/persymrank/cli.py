"""Command-line driver: ``persymrank census ...`` and ``persymrank verify ...``.

Exit codes: 0 success, 1 usage error, 2 enumeration budget refused,
3 a verification check failed.  Payload goes to stdout, logs to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from fractions import Fraction

from . import __version__, closedform, expsum, fitting, identities, polysys
from ._parallel import default_workers
from .census import BudgetExceeded, census
from .poly import frac_str

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_FAIL = 0, 1, 2, 3

log = logging.getLogger("persymrank")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"3"`` -> [3]; ``"1..8"`` -> [1, ..., 8]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or A..B") from None
    if lo > hi or lo < 0:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return list(range(lo, hi + 1))


def pow2_form(v: int) -> str:
    """Write ``v`` as ``m*2^e`` with ``m`` odd."""
    if v == 0:
        return "0"
    e = (v & -v).bit_length() - 1
    return f"{v >> e}*2^{e}"


def _check(name: str, lhs, rhs, **extra) -> dict:
    rec = {"name": name, "lhs": frac_str(Fraction(lhs)), "rhs": frac_str(Fraction(rhs)),
           "pass": lhs == rhs}
    rec.update(extra)
    return rec


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


def _emit(record: dict, timing: float | None, fmt: str = "json") -> None:
    if timing is not None:
        record["timing_s"] = round(timing, 6)
    if fmt == "json":
        sys.stdout.write(json.dumps(record, indent=2) + "\n")


def cmd_census(args) -> int:
    t0 = time.perf_counter()
    try:
        dist = census(args.n, args.k, workers=args.workers, force=args.force)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    elapsed = None if args.no_timing else time.perf_counter() - t0
    if args.format == "csv":
        sys.stdout.write("i,gamma\n")
        for i, c in enumerate(dist.counts):
            sys.stdout.write(f"{i},{c}\n")
    elif args.format == "table":
        width = max(len(str(c)) for c in dist.counts)
        sys.stdout.write(f"n={dist.n} k={dist.k}\n")
        for i, c in enumerate(dist.counts):
            sys.stdout.write(f"  Gamma_{i:<3d} {c:>{width}d}\n")
    else:
        record = {"command": "census", "version": __version__,
                  "params": {"n": args.n, "k": args.k, "workers": args.workers},
                  **dist.to_json()}
        _emit(record, elapsed)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites; each returns a list of check records
# ---------------------------------------------------------------------------


def suite_moments(args) -> list[dict]:
    k = args.k if args.k is not None else 10
    source = args.source or ("closedform" if k == 10 else "census")
    out = []
    for n in args.n_range or list(range(1, 9)):
        rep = identities.verify_moments(n, k, source, workers=args.workers)
        for c in rep.checks:
            out.append({**c.to_json(), "n": n, "k": k, "source": source})
    return out


def suite_census_vs_formula(args) -> list[dict]:
    k = args.k if args.k is not None else 10
    out = []
    for n in args.n_range or [1, 2]:
        counts = census(n, k, workers=args.workers, force=args.force).counts
        formula = closedform.closedform_counts(n, k)
        for i, (a, b) in enumerate(zip(counts, formula)):
            out.append(_check(f"Gamma_{i} census vs formula", a, b, n=n, k=k))
    return out


def suite_expsum(args) -> list[dict]:
    k = args.k if args.k is not None else 3
    ns = [args.n] if args.n is not None else (args.n_range or [1])
    out = []
    for n in ns:
        rep = expsum.verify_rank_identity(n, k)
        out.append({"name": "f_k = 2^(2n+k-rank) on every tuple", "n": n, "k": k,
                    "checked": rep.checked, "mismatches": len(rep.mismatches), "pass": rep.passed})
    return out


def suite_rq(args) -> list[dict]:
    q = args.q if args.q is not None else 4
    k = args.k if args.k is not None else 10
    source = args.source or "closedform"
    out = []
    for n in args.n_range or [1, 2]:
        gam = identities.gammas_from(n, k, source, workers=args.workers)
        r = identities.r_qnk(q, n, k, gam)
        if q == 4 and k == 10 and n in identities.R4_TARGETS:
            target = identities.R4_TARGETS[n]
            out.append(_check("R from rank counts vs worked example", r, target, n=n, q=q, k=k,
                              value=pow2_form(r)))
        if 2 * n * q <= polysys.MARGINALIZED_MAX_BITS:
            direct = polysys.count_solutions_marginalized(q, n, k, workers=args.workers)
            out.append(_check("R from rank counts vs direct solution count", r, direct,
                              n=n, q=q, k=k, value=pow2_form(r)))
        if q == 1:
            out.append(_check("R_1 closed form", r, identities.rhs_r1(n, k), n=n, q=q, k=k))
    return out


def suite_fit(args) -> list[dict]:
    out = []
    g7 = fitting.fit_gamma7()
    for name, poly in closedform.GAMMA7_FACTORS.items():
        out.append({"name": f"fitted {name}(k)", "pass": getattr(g7, name) == poly,
                    "fitted": [frac_str(c) for c in getattr(g7, name).x_coeffs()]})
    for name, poly in closedform.GAMMA7_COEFFS.items():
        out.append({"name": f"fitted {name}(k)", "pass": g7.coeffs[name] == poly,
                    "fitted": [frac_str(c) for c in g7.coeffs[name].x_coeffs()]})
    out.append({"name": "fitted Gamma_7 equals general formula",
                "pass": g7.gamma7 == closedform.gamma_formula(7)})
    k10 = fitting.fit_k10_high_ranks()
    out.append({"name": "k=10 system consistent", "pass": k10.consistent,
                "equations": len(k10.system.A), "unknowns": k10.system.ncols})
    for j in (8, 9, 10):
        out.append({"name": f"fitted k=10 rank {j} row", "pass": k10.rows[j] == closedform.K10_TABLE[j],
                    "fitted": [frac_str(c) for c in k10.rows[j].y_coeffs()]})
    return out


def suite_typos(args) -> list[dict]:
    out = []
    for rep in identities.adjudicate_r4_typos():
        rec = rep.to_json()
        rec["name"] = rep.label
        rec["pass"] = len(rep.consistent) == 1
        out.append(rec)
    return out


SUITES = {
    "moments": suite_moments,
    "census-vs-formula": suite_census_vs_formula,
    "expsum": suite_expsum,
    "rq": suite_rq,
    "fit": suite_fit,
    "typos": suite_typos,
}


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    try:
        checks = SUITES[args.suite](args)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (identities.UnsupportedSource, closedform.FormulaNotAsserted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ok = all(c["pass"] for c in checks)
    for c in checks:
        if not c["pass"]:
            print(f"FAIL {c['name']}: lhs={c.get('lhs')} rhs={c.get('rhs')}", file=sys.stderr)
    record = {"command": "verify", "version": __version__, "suite": args.suite,
              "pass": ok, "checks": checks}
    _emit(record, None if args.no_timing else time.perf_counter() - t0)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="persymrank", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--workers", type=int, default=default_workers(),
                        help="worker processes (default: $PERSYM_WORKERS or 1)")
    common.add_argument("--force", action="store_true", help="allow censuses above 2^28 leaves")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")

    c = sub.add_parser("census", parents=[common], help="exhaustive rank distribution")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--format", choices=("json", "csv", "table"), default="json")
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", parents=[common], help="run a family of identity checks")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--n-range", type=parse_range)
    v.add_argument("--source", choices=("census", "closedform"))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
