"""Command-line surface: one subcommand per operation, reproducible reports.

Exit codes: 0 = verified / witness found / enumeration done, 1 = a check
failed or the scan contradicts the predicted outcome, 2 = inconclusive
(nothing found below the stated bound), 64 = usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .arith import PrimeSieve, SmoothnessPolicy, shifted_smooth_set, sieve, smooth_set
from .mwitness import multiplicative_witness
from .semigroup import (
    GammaSemigroup,
    SUnitEquation,
    enumerate_semigroup,
    h_family,
    l_set,
    mprimitivity_scan,
    solve_sunit,
    solve_two_term,
    two_term_min_exponent_bound,
    verify_exceptional_factorization,
)
from .sets import IntegerSet, decompose_search, verify_composite_decomposition
from .tuples import OffsetTuple, additive_witness, find_constellation, is_admissible, select_triple

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

_JSON_INT_CAP = 1 << 53
_LIST_CAP = 10000


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise _UsageError(f"{flag} expects a comma-separated integer list, got {text!r}")


def _parse_window(text: str) -> tuple[int, int]:
    parts = _parse_int_list(text, "--window")
    if len(parts) != 2 or parts[0] > parts[1]:
        raise _UsageError(f"--window expects LO,HI with LO <= HI, got {text!r}")
    return parts[0], parts[1]


def _jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _JSON_INT_CAP else obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return str(obj)


def _elements_payload(values) -> dict:
    values = list(values)
    payload = {"count": len(values)}
    if len(values) <= _LIST_CAP:
        payload["elements"] = values
    else:
        payload["elements_omitted"] = True
        payload["head"] = values[:20]
        payload["tail"] = values[-20:]
    return payload


def _policy_from_args(args) -> SmoothnessPolicy:
    if args.policy == "composites":
        return SmoothnessPolicy.composites()
    if args.policy == "fixed":
        if args.bound is None:
            raise _UsageError("--policy fixed needs --bound")
        return SmoothnessPolicy.fixed_bound(args.bound)
    if args.factor is None:
        raise _UsageError("--policy log needs --factor")
    return SmoothnessPolicy.log_factor(args.factor)


def _cmd_sieve(args):
    cache_used = False
    if args.cache and os.path.exists(args.cache):
        loaded = PrimeSieve.load(args.cache)
        if loaded.limit == args.limit:
            ps, cache_used = loaded, True
        else:
            ps = sieve(args.limit)
            ps.save(args.cache)
    else:
        ps = sieve(args.limit)
        if args.cache:
            ps.save(args.cache)
    primes = ps.primes()
    result = {
        "limit": args.limit,
        "prime_count": ps.count(),
        "largest_prime": int(primes[-1]) if len(primes) else None,
        "cache": args.cache,
        "cache_used": cache_used,
    }
    return EXIT_OK, result, []


def _cmd_smooth(args):
    policy = _policy_from_args(args)
    builder = shifted_smooth_set if args.shift else smooth_set
    values = builder(policy, args.limit)
    result = {"policy": policy.describe(), "limit": args.limit, "shifted": args.shift}
    result.update(_elements_payload(values.elements))
    if args.out:
        values.save_text(args.out)
        result["out"] = args.out
    return EXIT_OK, result, []


def _cmd_verify_thm1(args):
    report = verify_composite_decomposition(args.limit)
    return (EXIT_OK if report.passed else EXIT_FAIL), report.to_json_dict(), []


def _cmd_tuple_admissible(args):
    t = OffsetTuple.of(_parse_int_list(args.offsets, "--offsets"))
    ok = is_admissible(t)
    return (EXIT_OK if ok else EXIT_FAIL), {"offsets": list(t.offsets), "admissible": ok}, []


def _cmd_tuple_select(args):
    t, case = select_triple(args.b2, args.b3)
    result = {"b2": args.b2, "b3": args.b3, "case": case, "offsets": list(t.offsets)}
    return EXIT_OK, result, []


def _cmd_tuple_find(args):
    t = OffsetTuple.of(_parse_int_list(args.offsets, "--offsets"))
    lo, hi = _parse_window(args.window)
    hits = find_constellation(
        t, lo, hi,
        require_composite_center=args.composite_center,
        require_consecutive=args.consecutive,
    )
    result = {
        "offsets": list(t.offsets),
        "window": [lo, hi],
        "composite_center": args.composite_center,
        "consecutive": args.consecutive,
    }
    result.update(_elements_payload(hits))
    return (EXIT_OK if hits else EXIT_INCONCLUSIVE), result, []


def _cmd_witness_add(args):
    b = _parse_int_list(args.b, "--b")
    witness = additive_witness(b, args.n0, args.limit)
    if witness is None:
        return EXIT_INCONCLUSIVE, {"b": sorted(set(b)), "found": False, "search_hi": args.limit}, []
    return EXIT_OK, {"b": list(witness.b), "found": True, "n": witness.n}, [witness.to_json_dict()]


def _cmd_witness_mul(args):
    b = _parse_int_list(args.b, "--b")
    witness = multiplicative_witness(b, args.n0, args.t_hi)
    if witness is None:
        return EXIT_INCONCLUSIVE, {"b": sorted(set(b)), "found": False, "t_hi": args.t_hi}, []
    return EXIT_OK, {"b": list(witness.b), "found": True, "n": witness.n, "branch": witness.branch}, [witness.to_json_dict()]


def _cmd_semigroup_list(args):
    g = GammaSemigroup.of(_parse_int_list(args.gamma, "--gamma"))
    values = enumerate_semigroup(g, args.limit)
    result = {"generators": list(g.generators), "limit": args.limit}
    result.update(_elements_payload(values.elements))
    return EXIT_OK, result, []


def _cmd_hk(args):
    g = GammaSemigroup.of(_parse_int_list(args.gamma, "--gamma"))
    values = h_family(g, args.k, args.limit, cumulative=args.le)
    result = {
        "generators": list(g.generators),
        "k": args.k,
        "cumulative": args.le,
        "limit": args.limit,
    }
    result.update(_elements_payload(values.elements))
    return EXIT_OK, result, []


def _cmd_verify_exception(args):
    report = verify_exceptional_factorization(args.limit)
    return (EXIT_OK if report.passed else EXIT_FAIL), report.to_json_dict(), []


def _candidate_payload(cand):
    return {
        "b": list(cand.b),
        "coverage_window": list(cand.coverage_window),
        "c_count": len(cand.c),
        "c_head": list(cand.c.elements[:20]),
    }


def _cmd_decompose(args):
    if args.target_file:
        target = IntegerSet.load_text(args.target_file)
        source = args.target_file
    elif args.composites:
        if args.window is None:
            raise _UsageError("--composites needs --window LO,HI")
        lo, hi = _parse_window(args.window)
        mask = sieve(hi).mask()
        values = [n for n in range(max(lo, 2), hi + 1) if not mask[n]]
        target = IntegerSet(tuple(values), lo, hi)
        source = f"composites in [{lo}, {hi}]"
    else:
        raise _UsageError("decompose needs --target-file or --composites")
    candidates = decompose_search(
        target, args.kind, args.max_b_size, args.max_b_elem, full_window=args.full_window
    )
    result = {
        "target": source,
        "kind": args.kind,
        "max_b_size": args.max_b_size,
        "max_b_elem": args.max_b_elem,
        "full_window": args.full_window,
        "count": len(candidates),
        "candidates": [_candidate_payload(c) for c in candidates],
    }
    return EXIT_OK, result, []


def _cmd_sunit(args):
    try:
        coeffs = [Fraction(tok) for tok in args.coeffs.split(",") if tok.strip()]
    except ValueError:
        raise _UsageError(f"--coeffs expects integers or fractions, got {args.coeffs!r}")
    g = GammaSemigroup.of(_parse_int_list(args.gamma, "--gamma"))
    classes = solve_sunit(SUnitEquation.of(coeffs, g), args.height)
    result = {
        "coeffs": [str(c) for c in coeffs],
        "generators": list(g.generators),
        "height": args.height,
        "count": len(classes),
        "classes": [
            {"representative": list(c.representative), "degenerate": c.degenerate}
            for c in classes
        ],
    }
    return EXIT_OK, result, []


def _cmd_l_set(args):
    g = GammaSemigroup.of(_parse_int_list(args.gamma, "--gamma"))
    values = l_set(g, args.k, args.height, args.eps_height)
    result = {
        "generators": list(g.generators),
        "k": args.k,
        "height": args.height,
        "eps_height": args.eps_height,
    }
    result.update(_elements_payload(values.elements))
    return EXIT_OK, result, []


def _cmd_two_term(args):
    solutions = solve_two_term(args.t2, args.t1, args.n, args.c, args.cap)
    result = {
        "t2": args.t2,
        "t1": args.t1,
        "n": args.n,
        "c": args.c,
        "cap": args.cap,
        "solutions": [list(s) for s in solutions],
        "count": len(solutions),
        "min_exponent_bound": two_term_min_exponent_bound(args.n, args.c),
    }
    return EXIT_OK, result, []


def _cmd_mprim_scan(args):
    g = GammaSemigroup.of(_parse_int_list(args.gamma, "--gamma"))
    report = mprimitivity_scan(
        g, args.k, args.limit,
        cumulative=args.le,
        max_b_size=args.max_b_size,
        max_b_elem=args.max_b_elem,
    )
    return (EXIT_OK if report.consistent else EXIT_FAIL), report.to_json_dict(), []


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--threads", type=int, default=None,
                        help="worker cap (implementations are deterministic and single-threaded)")

    parser = _Parser(prog="decomplab", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("sieve", parents=[common])
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--cache", type=str, default=None)
    p.set_defaults(func=_cmd_sieve)

    p = sub.add_parser("smooth", parents=[common])
    p.add_argument("--policy", choices=["composites", "fixed", "log"], required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--factor", type=float, default=None)
    p.add_argument("--shift", action="store_true", help="shift the set by +1")
    p.add_argument("--out", type=str, default=None, help="write the set in text format")
    p.set_defaults(func=_cmd_smooth)

    p = sub.add_parser("verify-thm1", parents=[common])
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=_cmd_verify_thm1)

    tup = sub.add_parser("tuple", parents=[common])
    tsub = tup.add_subparsers(dest="tuple_command", parser_class=_Parser)

    p = tsub.add_parser("admissible", parents=[common])
    p.add_argument("--offsets", type=str, required=True)
    p.set_defaults(func=_cmd_tuple_admissible)

    p = tsub.add_parser("select-triple", parents=[common])
    p.add_argument("--b2", type=int, required=True)
    p.add_argument("--b3", type=int, required=True)
    p.set_defaults(func=_cmd_tuple_select)

    p = tsub.add_parser("find", parents=[common])
    p.add_argument("--offsets", type=str, required=True)
    p.add_argument("--window", type=str, required=True, help="LO,HI scan range")
    p.add_argument("--composite-center", action="store_true")
    p.add_argument("--consecutive", action="store_true")
    p.set_defaults(func=_cmd_tuple_find)

    wit = sub.add_parser("witness", parents=[common])
    wsub = wit.add_subparsers(dest="witness_command", parser_class=_Parser)

    p = wsub.add_parser("add", parents=[common])
    p.add_argument("--b", type=str, required=True)
    p.add_argument("--n0", type=int, default=9)
    p.add_argument("--limit", type=int, default=10**7, help="search ceiling for n")
    p.set_defaults(func=_cmd_witness_add)

    p = wsub.add_parser("mul", parents=[common])
    p.add_argument("--b", type=str, required=True)
    p.add_argument("--n0", type=int, default=1)
    p.add_argument("--t-hi", type=int, default=10**6, help="progression scan ceiling")
    p.set_defaults(func=_cmd_witness_mul)

    p = sub.add_parser("semigroup", parents=[common])
    ssub = p.add_subparsers(dest="semigroup_command", parser_class=_Parser)
    p = ssub.add_parser("list", parents=[common])
    p.add_argument("--gamma", type=str, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=_cmd_semigroup_list)

    p = sub.add_parser("hk", parents=[common])
    p.add_argument("--gamma", type=str, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--le", action="store_true", help="cumulative family (sums of up to k terms)")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=_cmd_hk)

    p = sub.add_parser("verify-exception", parents=[common])
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=_cmd_verify_exception)

    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("--kind", choices=["additive", "multiplicative"], required=True)
    p.add_argument("--target-file", type=str, default=None)
    p.add_argument("--composites", action="store_true")
    p.add_argument("--window", type=str, default=None)
    p.add_argument("--max-b-size", type=int, required=True)
    p.add_argument("--max-b-elem", type=int, required=True)
    p.add_argument("--full-window", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("sunit", parents=[common])
    p.add_argument("--coeffs", type=str, required=True)
    p.add_argument("--gamma", type=str, required=True)
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(func=_cmd_sunit)

    p = sub.add_parser("l-set", parents=[common])
    p.add_argument("--gamma", type=str, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--eps-height", type=int, required=True)
    p.set_defaults(func=_cmd_l_set)

    p = sub.add_parser("two-term", parents=[common])
    p.add_argument("--t2", type=int, required=True)
    p.add_argument("--t1", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--cap", type=int, required=True)
    p.set_defaults(func=_cmd_two_term)

    p = sub.add_parser("mprim-scan", parents=[common])
    p.add_argument("--gamma", type=str, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--le", action="store_true")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--max-b-size", type=int, default=3)
    p.add_argument("--max-b-elem", type=int, default=100)
    p.set_defaults(func=_cmd_mprim_scan)

    return parser


def _command_name(args) -> str:
    parts = [args.command]
    for attr in ("tuple_command", "witness_command", "semigroup_command"):
        if getattr(args, attr, None):
            parts.append(getattr(args, attr))
    return " ".join(parts)


def _params_record(args) -> dict:
    skip = {"func", "json", "command", "tuple_command", "witness_command", "semigroup_command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _print_human(report) -> None:
    print(f"command: {report['command']}")
    for key, value in report["params"].items():
        print(f"  param {key} = {value}")
    for key, value in report["result"].items():
        print(f"  {key} = {value}")
    for witness in report["witnesses"]:
        print(f"  witness: {witness}")
    print(f"  elapsed_ms = {report['elapsed_ms']}")


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            raise _UsageError("missing subcommand")
        if getattr(args, "threads", None) is not None and args.threads < 1:
            raise _UsageError("--threads must be >= 1")
        started = time.perf_counter()
        try:
            code, result, witnesses = args.func(args)
        except (ValueError, OSError) as exc:
            raise _UsageError(str(exc))
        elapsed = int((time.perf_counter() - started) * 1000)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": _command_name(args),
        "params": _params_record(args),
        "result": result,
        "witnesses": witnesses,
        "elapsed_ms": elapsed,
        "version": __version__,
    }
    if args.json:
        print(json.dumps(_jsonable(report), sort_keys=True, indent=2))
    else:
        _print_human(report)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
