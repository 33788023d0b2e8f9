"""Command-line front end.

Exit codes: 0 success, 1 internal inconsistency, 2 validation/usage error,
3 enumeration budget exceeded. JSON is the default output; integers beyond
2^53 are written as decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import core, identity, oracle, search, semigroup, sylvester, weierstrass
from .config import Budget
from .errors import BudgetExceeded, InternalError, ValidationError
from .serialize import jsonable

MAX_INPUT = 2**63 - 1


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    for v in values:
        if abs(v) > MAX_INPUT:
            raise argparse.ArgumentTypeError(f"{v} exceeds the 64-bit input range")
    return values


def _rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _geo(text: str) -> tuple[int, int, int]:
    values = _int_list(text)
    if len(values) != 3:
        raise argparse.ArgumentTypeError("--geo takes a,b,k")
    return values


def _pair(args) -> core.SuitablePair:
    if getattr(args, "geo", None):
        a, b, k = args.geo
        if k < 0:
            raise ValidationError("k must be >= 0")
        return core.SuitablePair((a,) * k, (b,) * k)
    if args.a is None or args.b is None:
        raise ValidationError("give --a and --b, or --geo a,b,k")
    return core.validate_suitable(args.a, args.b)


def _budget(args) -> Budget:
    if args.budget is None:
        return Budget()
    return Budget(args.budget, args.budget, args.budget)


def _pair_fields(p: core.SuitablePair) -> dict:
    return {"a": p.a, "b": p.b, "generators": p.generators}


# -- subcommands -------------------------------------------------------------

def cmd_info(args):
    p = _pair(args)
    budget = _budget(args)
    s = semigroup.summarize(p, budget)
    n = core.normalize(p)
    out = _pair_fields(p) | {
        "sigma": core.sigma(p),
        "frobenius": s.frobenius,
        "genus": s.genus,
        "symmetric": s.symmetric,
        "gaps": s.gaps,
        "normalized": {"a": n.a, "b": n.b},
    }
    if args.oracle:
        limit = max(s.frobenius, 0)
        out["oracle_agree"] = oracle.oracle_gaps(p.generators, limit, budget.enumeration) == list(s.gaps)
    return out


METHODS = ("closed", "bernoulli", "enumerated")


def cmd_sylvester(args):
    p = _pair(args)
    budget = _budget(args)
    m = args.m
    routes = {
        "bernoulli": lambda: sylvester.s_bernoulli(p, m, budget),
        "enumerated": lambda: sylvester.s_enumerated(p, m, budget),
    }
    if m <= 3:
        if args.geo:
            a, b, k = args.geo
            routes["closed"] = lambda: sylvester.s_geometric(a, b, k, m)
        else:
            routes["closed"] = lambda: sylvester.s_closed(p, m)
    wanted = [x for x in METHODS if x in routes] if args.method == "all" else [args.method]
    if args.method == "closed" and "closed" not in routes:
        raise ValidationError("closed forms cover m = 0..3")
    values = {name: routes[name]() for name in wanted}
    first = values[wanted[0]]
    return _pair_fields(p) | {
        "m": m,
        "value": first,
        "values": values,
        "agree": all(v == first for v in values.values()),
    }


def _load_table(path: str) -> identity.TabulatedFunction:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = {int(k): int(v) for k, v in data.items()}
    elif isinstance(data, list):
        data = [int(v) for v in data]
    else:
        raise ValidationError("table must be a JSON array or object of integers")
    return identity.TabulatedFunction(data)


def cmd_identity(args):
    p = _pair(args)
    if args.f_table:
        f = _load_table(args.f_table)
        if f.max_argument < identity.required_domain(p, args.j):
            raise ValidationError(
                f"table covers 0..{f.max_argument}, needs 0..{identity.required_domain(p, args.j)}")
        f_desc = f"table:{args.f_table}"
    else:
        f = identity.monomial(args.f_power)
        f_desc = f"n^{args.f_power}"
    r = identity.tuenter_check(p, args.j, f, args.exclude_zero, _budget(args))
    return _pair_fields(p) | {
        "j": args.j, "f": f_desc, "exclude_zero": args.exclude_zero,
        "lhs": r.lhs, "rhs": r.rhs, "equal": r.equal,
    }


def cmd_weight(args):
    if args.geo:
        a, b, k = args.geo
        rep = weierstrass.q_weight_geometric(a, b, k, args.q)
    else:
        t = weierstrass.validate_tower(_pair(args))
        rep = weierstrass.q_weight(t, args.q)
    p = _pair(args)
    return _pair_fields(p) | {"genus": rep.genus, "q": rep.q, "d_q": rep.d_q, "weight": rep.weight}


def cmd_tower_check(args):
    p = _pair(args)
    t = weierstrass.validate_tower(p, args.c)
    return _pair_fields(p) | {
        "valid": True,
        "c": t.shifts,
        "genus": sylvester.s0_closed(p),
    }


def cmd_search(args):
    records = search.find_collisions(args.k, args.lo, args.hi, args.match_through, args.differ_at,
                                     workers=args.workers, budget=_budget(args))
    if args.out:
        search.write_jsonl(records, args.out)
    if args.csv:
        search.write_csv(records, args.csv)
    return {
        "k": args.k, "lo": args.lo, "hi": args.hi,
        "match_through": args.match_through, "differ_at": args.differ_at,
        "counts": search.count_conventions(records),
        "records": [search.record_dict(r) for r in records] if not args.out else None,
    }


def cmd_oracle(args):
    budget = _budget(args)
    if args.generators:
        gens = args.generators
        p = None
    else:
        p = _pair(args)
        gens = p.generators
    limit = args.limit
    if limit is None:
        if p is None:
            raise ValidationError("--limit is required with --generators")
        limit = max(semigroup.frobenius_closed(p), 0)
    gaps = oracle.oracle_gaps(gens, limit, budget.enumeration)
    out = {"generators": gens, "limit": limit, "gaps": gaps}
    if p is not None:
        out["apery_gaps_agree"] = [g for g in semigroup.gaps(p, budget) if g <= limit] == gaps
    return out


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--budget", type=int, default=None, help="cap for every explicit enumeration")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--a", type=_int_list, help="comma-separated A tuple")
    pair.add_argument("--b", type=_int_list, help="comma-separated B tuple")
    pair.add_argument("--geo", type=_geo, help="geometric pair a,b,k")

    parser = argparse.ArgumentParser(prog="compound-semigroups", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common, pair], help="generators, Frobenius number, genus, gaps")
    p.add_argument("--oracle", action="store_true", help="cross-check gaps against the DP oracle")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("sylvester", parents=[common, pair], help="Sylvester power sum S_m")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.set_defaults(func=cmd_sylvester)

    p = sub.add_parser("identity", parents=[common, pair], help="both sides of the Tuenter identity")
    p.add_argument("--j", type=int, default=0, help="pivot index 0..k")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--f-power", type=int, default=1, help="f(n) = n^M")
    g.add_argument("--f-table", help="JSON array (or object) giving f(n)")
    p.add_argument("--exclude-zero", action="store_true")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("weight", parents=[common, pair], help="q-Weierstrass weight at infinity")
    p.add_argument("--q", type=int, default=1)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("tower-check", parents=[common, pair], help="validate tower parameters")
    p.add_argument("--c", type=_rational_list, default=None, help="comma-separated rational shifts")
    p.set_defaults(func=cmd_tower_check)

    p = sub.add_parser("search", parents=[common], help="Sylvester-sum collision search")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--lo", type=int, default=2)
    p.add_argument("--hi", type=int, default=49)
    p.add_argument("--match-through", type=int, default=2)
    p.add_argument("--differ-at", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write records as JSON lines")
    p.add_argument("--csv", help="write records as CSV")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("oracle", parents=[common, pair], help="brute-force DP gap check")
    p.add_argument("--generators", type=_int_list, default=None)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_oracle)
    return parser


def _text(obj, indent=0) -> str:
    pad = " " * indent
    if isinstance(obj, dict):
        width = max((len(str(k)) for k in obj), default=0)
        lines = []
        for k, v in obj.items():
            if isinstance(v, dict) or (isinstance(v, list) and v and isinstance(v[0], dict)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 2))
            else:
                lines.append(f"{pad}{str(k).ljust(width)}  {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n\n".join(_text(x, indent) for x in obj)
    return pad + _scalar(obj)


def _scalar(v) -> str:
    if isinstance(v, (list, tuple)):
        if v and isinstance(v[0], (list, tuple)):
            return " ".join("(" + _scalar(x) + ")" for x in v)
        return ",".join(_scalar(x) for x in v) if v else "-"
    if v is None:
        return "-"
    return str(v).lower() if isinstance(v, bool) else str(v)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        return 3
    except oracle.OracleBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        return 3
    except InternalError as exc:
        print(f"internal error: {exc}", file=stderr)
        return 1
    result = {k: v for k, v in result.items() if v is not None}
    if args.format == "json":
        print(json.dumps(jsonable(result)), file=stdout)
    else:
        print(_text(jsonable(result)), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())
