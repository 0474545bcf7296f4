"""Command-line front end.

Output is one or more lines of space-separated ``key=value`` fields.  Exit
status: 0 for success or a true verdict, 1 for a false verdict or failed
verification, 2 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import lattice as L
from . import nilpotent, padic, profile
from .core import ChromalocError, Prime, format_extnat
from .expr import evaluate

__all__ = ["run", "main", "build_parser"]

OK, FALSE, USAGE = 0, 1, 2


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, float):
        return format_extnat(value)
    return str(value)


def _emit(**fields) -> None:
    print(" ".join(f"{k}={_fmt(v)}" for k, v in fields.items()))


def _lattice(args) -> int:
    if args.action == "cmp":
        if len(args.exprs) != 2:
            raise _Usage("lattice cmp takes exactly two expressions")
        F, G = evaluate(args.exprs[0]), evaluate(args.exprs[1])
        le, ge = L.g_leq(F, G), L.g_leq(G, F)
        _emit(cmp="eq" if le and ge else "le" if le else "ge" if ge else "incomparable")
        return OK
    F = evaluate(" ".join(args.exprs))
    if args.action == "eval":
        _emit(loc=F.to_text())
        return OK
    cc = L.is_compactly_central(F)
    _emit(cc=cc)
    return OK if cc else FALSE


def _profile(args) -> int:
    pr = profile.parse_profile(args.literal)
    m = profile.is_algebraically_central(pr)
    if args.action == "check":
        if m is None:
            _emit(central=False)
            return FALSE
        _emit(central=True, type=m)
        return OK
    if m is None:
        _emit(central=False)
        return FALSE
    if args.action == "type":
        _emit(type=m)
    else:
        _emit(type=m, loc=profile.induced_localisation(pr))
    return OK


def _val(args) -> int:
    nums = args.numbers
    need = {"digitsum": 1, "nufact": 1, "nubinom": 2, "pbinom": 3}[args.action]
    if len(nums) != need:
        raise _Usage(f"val {args.action} takes {need} integer argument(s), got {len(nums)}")
    if args.p is None:
        raise _Usage(f"val {args.action} needs -p")
    p = Prime(args.p)
    if args.action == "digitsum":
        _emit(digitsum=padic.digit_sum(nums[0], p))
        return OK
    if args.action == "nufact":
        nu, oracle = padic.nu_factorial(nums[0], p), padic.nu_factorial_oracle(nums[0], p)
        _emit(nufact=nu, oracle=oracle)
        return OK if nu == oracle else FALSE
    if args.action == "nubinom":
        n, k = nums
        nu = padic.nu_binom(n, k, p)
        carries = padic.carries_in_addition(k, n - k, p)
        _emit(nubinom=nu, carries=carries)
        return OK if nu == carries else FALSE
    n, k, m = nums
    _emit(nu=padic.nu_binom_power(n, k, m, p), expected=k)
    return OK


def _nilp(args) -> int:
    if args.action == "grid":
        primes = (args.p,) if args.p is not None else (2, 3, 5)
        j_max = 3 if args.j is None else args.j
        k_max = 3 if args.k is None else args.k
        slack = 2 if args.max is None else args.max
        cells = failures = 0
        for p in primes:
            for j in range(1, j_max + 1):
                for k in range(k_max + 1):
                    row = nilpotent.grid_row(p, j, k, slack)
                    bad = [c for c in row if not c.ok]
                    first = next((c.n for c in row if c.zero), None)
                    _emit(p=p, j=j, k=k, minimal=first, bound=j + k, agree=all(c.zero == c.termwise for c in row), ok=not bad)
                    cells += len(row)
                    failures += len(bad)
        _emit(cells=cells, failures=failures)
        return OK if failures == 0 else FALSE
    missing = [f for f in ("p", "j", "k") if getattr(args, f) is None]
    if args.action == "verify" and args.n is None:
        missing.append("n")
    if missing:
        raise _Usage(f"nilp {args.action} needs " + " ".join("-" + f for f in missing))
    if args.action == "verify":
        zero = nilpotent.verify_nilp_diff(args.p, args.j, args.k, args.n)
        _emit(zero=zero, bound_met=args.n >= args.j + args.k)
        return OK if zero else FALSE
    bound = args.j + args.k if args.max is None else args.max
    found = nilpotent.minimal_n(args.p, args.j, args.k, bound)
    _emit(minimal=found, bound=args.j + args.k)
    return OK if found is not None else FALSE


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromaloc", description="Finite localisation lattice, K(n) profiles, p-adic valuations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lat = sub.add_parser("lattice", help="evaluate, compare or classify localisation expressions")
    lat.add_argument("action", choices=["eval", "cmp", "cc"])
    lat.add_argument("exprs", nargs="+", metavar="expr")
    lat.set_defaults(func=_lattice)

    prof = sub.add_parser("profile", help="K(n) profile queries on literals like II/Z")
    prof.add_argument("action", choices=["check", "type", "loc"])
    prof.add_argument("literal")
    prof.set_defaults(func=_profile)

    val = sub.add_parser("val", help="p-adic valuations")
    val.add_argument("action", choices=["digitsum", "nufact", "nubinom", "pbinom"])
    val.add_argument("numbers", nargs="*", type=int, metavar="int")
    val.add_argument("-p", type=int)
    val.set_defaults(func=_val)

    nil = sub.add_parser("nilp", help="(y+eps)^(p^n) = y^(p^n) in the truncated ring")
    nil.add_argument("action", choices=["verify", "minimal", "grid"])
    nil.add_argument("-p", type=int)
    nil.add_argument("-j", type=int)
    nil.add_argument("-k", type=int)
    nil.add_argument("-n", type=int)
    nil.add_argument("--max", type=int)
    nil.set_defaults(func=_nilp)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except ChromalocError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE
    except ArithmeticError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return FALSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
