"""Command-line front end: ``permcheb <command> ...``.

Exit status is 0 on success, 1 when a verification or b-file comparison
fails, and 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bfile
from .cheb import SEQUENCES, cheb_u, sequence_terms, tilings
from .exact import VARS, parse_poly
from .hop import (
    cycle_string,
    foata_o,
    foata_o_inv,
    foata_o_prime,
    foata_o_prime_inv,
    phi_k,
    phi_s,
    theta_k,
    theta_s,
)
from .perms import STATS, Permutation, all_stats, classify_cyclic, classify_linear, distribution

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(a) for a in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a list of integers, got {text!r}") from None


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


# -- commands ---------------------------------------------------------------


def cmd_stats(args) -> int:
    p = args.perm
    lin = classify_linear(p)
    cyc = classify_cyclic(p)
    values = all_stats(p)
    rows = [
        {"position": i, "letter": a, "linear": str(lc), "cyclic": "fix" if cc is None else "c" + str(cc)}
        for i, (a, lc, cc) in enumerate(zip(p.word, lin, cyc), 1)
    ]
    lines = [f"{r['position']:>3} {r['letter']:>3}  {r['linear']:<5} {r['cyclic']}" for r in rows]
    lines.append(" ".join(f"{k}={values[k]}" for k in STATS))
    _emit(args, "\n".join(lines), {"perm": str(p), "letters": rows, "stats": values})
    return 0


def _default_vars(k: int) -> list[str]:
    return ["t"] if k == 1 else list(VARS[:k])


def cmd_dist(args) -> int:
    stats = [a for a in args.stats.split(",") if a]
    for name in stats:
        if name not in STATS:
            raise UsageError(f"unknown statistic {name!r}; choose from {', '.join(STATS)}")
    if args.vars:
        variables = [a for a in args.vars.split(",") if a]
        if len(variables) != len(stats):
            raise UsageError("--vars needs one variable per statistic")
        bad = [a for a in variables if a not in VARS]
        if bad:
            raise UsageError(f"unknown variable {bad[0]!r}; choose from {', '.join(VARS)}")
    else:
        if len(stats) > len(VARS):
            raise UsageError(f"at most {len(VARS)} statistics without --vars")
        variables = _default_vars(len(stats))
    if not 0 <= args.n <= 11:
        raise UsageError("--n must be in 0..11")
    poly = distribution(args.n, args.set, stats, variables, jobs=args.jobs)
    _emit(args, str(poly), {"n": args.n, "set": args.set, "stats": stats, "vars": variables, "poly": str(poly)})
    return 0


def cmd_hop(args) -> int:
    p = args.perm
    if (args.k is None) == (args.letters is None):
        raise UsageError("give exactly one of --k or --set")
    try:
        if args.cyclic:
            q = theta_k(p, args.k) if args.k is not None else theta_s(p, args.letters)
        else:
            q = phi_k(p, args.k) if args.k is not None else phi_s(p, args.letters)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, str(q), {"input": str(p), "output": str(q), "cyclic": args.cyclic})
    return 0


def cmd_foata(args) -> int:
    p = args.perm
    prime = args.variant == "prime"
    if args.inverse:
        q = (foata_o_prime_inv if prime else foata_o_inv)(p)
        cycles = cycle_string(q, smallest_first=prime)
    else:
        q = (foata_o_prime if prime else foata_o)(p)
        cycles = cycle_string(p, smallest_first=prime)
    _emit(args, f"{q}\ncycles: {cycles}", {"input": str(p), "output": str(q), "cycles": cycles})
    return 0


def _poly_arg(text: str | None, default: str):
    try:
        return parse_poly(text if text is not None else default)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_cheb(args) -> int:
    if not -1 <= args.n <= 200:
        raise UsageError("--n must be in -1..200")
    poly = cheb_u(args.n, _poly_arg(args.s, "s"), _poly_arg(args.t, "t"))
    _emit(args, str(poly), {"n": args.n, "poly": str(poly)})
    return 0


def cmd_tilings(args) -> int:
    if not 0 <= args.n <= 12:
        raise UsageError("--n must be in 0..12")
    rows = [(str(tl), str(tl.weight())) for tl in tilings(args.n)]
    total = cheb_u(args.n)
    lines = [f"{a:<{max(args.n, 1)}}  {b}" for a, b in rows] + [f"sum: {total}"]
    payload = {"n": args.n, "tilings": [{"tiling": a, "weight": b} for a, b in rows], "sum": str(total)}
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_seq(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    first, terms = sequence_terms(args.name, args.count)
    payload = {"name": args.name, "first_index": first, "terms": terms}
    lines = [" ".join(map(str, terms))]
    status = 0
    if args.bfile:
        try:
            entries = bfile.read_bfile(args.bfile)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read b-file: {exc}") from None
        cmp = bfile.compare_terms(entries, first, terms, args.offset)
        payload["bfile"] = {
            "compared": cmp.compared,
            "skipped": cmp.skipped,
            "mismatches": [list(m) for m in cmp.mismatches],
        }
        if cmp.ok:
            lines.append(f"b-file: {cmp.compared} terms match ({cmp.skipped} outside computed range)")
        else:
            m, k, want, got = cmp.mismatches[0]
            lines.append(
                f"b-file: {len(cmp.mismatches)} of {cmp.compared} terms differ; "
                f"first at file index {m} (term {k}): file {want}, computed {got}"
            )
            status = 1
    _emit(args, "\n".join(lines), payload)
    return status


def cmd_verify(args) -> int:
    from .verify.checks import CHECKS, CheckConfig, run_checks

    ids = list(CHECKS) if args.id == "all" else [args.id]
    config = CheckConfig(max_n=args.max_n, order=args.order, jobs=args.jobs)
    try:
        reports = run_checks(ids, config, workers=args.jobs if args.id == "all" else 1)
    except (KeyError, ValueError) as exc:
        raise UsageError(exc.args[0] if exc.args else str(exc)) from None
    for r in reports:
        print(r.to_json() if args.format == "json" else r.to_text(timing=args.timing))
    failed = [r.id for r in reports if not r.passed]
    if args.format == "text" and len(reports) > 1:
        print(f"{len(reports) - len(failed)}/{len(reports)} passed" + (f"; failed: {', '.join(failed)}" if failed else ""))
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")

    parser = argparse.ArgumentParser(prog="permcheb", description="Permutation statistics and Chebyshev identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="classify letters and list statistics")
    p.add_argument("perm", type=_perm)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("dist", parents=[common], help="distribution polynomial by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", required=True, help="comma-separated statistic names")
    p.add_argument("--vars", help="comma-separated variables, one per statistic")
    p.add_argument("--set", choices=("all", "derangements"), default="all")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("hop", parents=[common], help="valley-hopping (or its cyclic version)")
    p.add_argument("perm", type=_perm)
    p.add_argument("--k", type=int)
    p.add_argument("--set", dest="letters", type=_int_list)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(func=cmd_hop)

    p = sub.add_parser("foata", parents=[common], help="Foata's map o or its variant o'")
    p.add_argument("perm", type=_perm)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--variant", choices=("standard", "prime"), default="standard")
    p.set_defaults(func=cmd_foata)

    p = sub.add_parser("cheb", parents=[common], help="U_n(s, t), optionally with substitutions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", help="polynomial expression for s")
    p.add_argument("--t", help="polynomial expression for t")
    p.set_defaults(func=cmd_cheb)

    p = sub.add_parser("tilings", parents=[common], help="list weighted tilings of a strip")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_tilings)

    p = sub.add_parser("seq", parents=[common], help="integer sequences, optionally checked against a b-file")
    p.add_argument("name", choices=sorted(SEQUENCES))
    p.add_argument("--count", type=int, default=12)
    p.add_argument("--bfile")
    p.add_argument("--offset", type=int, default=0, help="file index m is compared with term m + offset")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("id", help="check id or 'all'")
    p.add_argument("--max-n", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--timing", action="store_true", help="append elapsed time (text output)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("permcheb: error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"permcheb: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
