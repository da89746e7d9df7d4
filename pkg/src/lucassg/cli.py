"""Command-line front end.

Classification queries print a single JSON object; the verification commands
(tables, counterexample, nonlocal, sweep) print one JSON line per check plus
a summary line, and exit 0 exactly when every check passed.  `--verify N`
re-runs the independent oracle up to N and compares.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import gcd

from . import tables
from .arith import is_prime, rational_from_str, valuation
from .classify import (
    classify_global,
    classify_local,
    oracle_global,
    oracle_local,
    realizability_verdict,
    run_sweep,
)
from .lucas import LucasParams, lucas_u, lucas_v, rank_of_appearance
from .matrices import (
    RationalMatrix,
    exponent_semigroup_2x2_detail,
    exponent_semigroup_bruteforce,
    realize,
)
from .semigroups import (
    NumericalCore,
    SemigroupDescriptor,
    descriptor_to_set,
    from_generators,
    is_lonely,
    is_plus_plus_minus_avoiding,
    minimal_generators,
    small_elements,
)


def _emit(obj) -> None:
    print(json.dumps(obj))


class Report:
    """Accumulates named checks and prints them as JSON lines."""

    def __init__(self, command: str):
        self.command = command
        self.checks: list[dict] = []

    def check(self, name: str, ok: bool, **detail) -> bool:
        rec = {"check": name, "pass": bool(ok)}
        rec.update(detail)
        self.checks.append(rec)
        return bool(ok)

    def finish(self) -> int:
        failed = [c for c in self.checks if not c["pass"]]
        for rec in self.checks:
            _emit(rec)
        _emit({
            "command": self.command,
            "checks": len(self.checks),
            "failed": len(failed),
            "first_failure": failed[0]["check"] if failed else None,
        })
        return 1 if failed else 0


def _verdict_json(v) -> dict:
    out = {"kind": v.kind, "reason": v.reason}
    out["matrix_witness"] = (
        [[str(x) for x in row] for row in v.matrix_witness]
        if v.matrix_witness else None
    )
    out["lucas_witness"] = (
        [v.lucas_witness[0], v.lucas_witness[1], str(v.lucas_witness[2])]
        if v.lucas_witness else None
    )
    return out


def _dimension_bounds(s: SemigroupDescriptor, verdict) -> list[int] | None:
    """[lower, upper] bounds on the matricial dimension."""
    if s.kind in ("zero", "all"):
        return [1, 1]
    upper = s.multiplicity
    if verdict.kind == "yes":
        return [2, 2]
    if verdict.kind == "no":
        return [3, upper]
    return [2, upper]


# ---------------------------------------------------------------------------
# Simple commands
# ---------------------------------------------------------------------------


def cmd_lucas_seq(args) -> int:
    params = LucasParams(args.P, args.Q)
    if args.json:
        rows = [
            {"n": n, "u": str(lucas_u(params, n)), "v": str(lucas_v(params, n))}
            for n in range(args.N + 1)
        ]
        _emit({"command": "lucas seq", "P": args.P, "Q": args.Q, "rows": rows})
        return 0
    u0, u1 = 0, 1
    v0, v1 = 2, args.P
    for n in range(args.N + 1):
        print(f"{n}\t{u0}\t{v0}")
        u0, u1 = u1, args.P * u1 - args.Q * u0
        v0, v1 = v1, args.P * v1 - args.Q * v0
    return 0


def cmd_lucas_rank(args) -> int:
    rank = rank_of_appearance(LucasParams(args.P, args.Q), args.p)
    nu = None if not isinstance(rank.nu, int) else rank.nu
    payload = {"command": "lucas rank", "P": args.P, "Q": args.Q, "p": args.p,
               "rho": rank.rho, "nu": nu}
    if args.json:
        _emit(payload)
    else:
        print(f"rho={rank.rho}\tnu={rank.nu}")
    return 0


def cmd_classify_local(args) -> int:
    params = LucasParams(args.P, args.Q)
    res = classify_local(params, args.p, args.r)
    payload = {
        "command": "classify local",
        "P": args.P, "Q": args.Q, "p": args.p, "r": args.r,
        "case": res.case.label,
        "case_data": res.case.to_json_dict(),
        "descriptor": res.descriptor.to_json_dict(),
        "set": res.member_set.to_json_dict(),
    }
    ok = True
    if args.verify is not None:
        if args.r >= 1:
            want = oracle_local(params, args.p, args.r, args.verify)
        else:
            want = set(range(args.verify + 1))
        got = set(res.member_set.members_up_to(args.verify))
        ok = want == got
        payload["verify"] = {
            "n": args.verify,
            "match": ok,
            "difference": sorted(want ^ got)[:10],
        }
    _emit(payload)
    return 0 if ok else 1


def cmd_classify_global(args) -> int:
    params = LucasParams(args.P, args.Q)
    R = rational_from_str(args.R)
    res = classify_global(params, R)
    payload = {
        "command": "classify global",
        "P": args.P, "Q": args.Q, "R": str(R),
        "components": [
            {"p": p, "r": r, "case": local.case.label,
             "descriptor": local.descriptor.to_json_dict()}
            for p, r, local in res.components
        ],
        "descriptor": res.descriptor.to_json_dict(),
        "set": res.member_set.to_json_dict(),
    }
    ok = True
    if args.verify is not None:
        want = oracle_global(params, R, args.verify)
        got = set(res.member_set.members_up_to(args.verify))
        ok = want == got
        payload["verify"] = {
            "n": args.verify,
            "match": ok,
            "difference": sorted(want ^ got)[:10],
        }
    _emit(payload)
    return 0 if ok else 1


def cmd_expsg(args) -> int:
    with open(args.matrix, "r", encoding="utf-8") as fh:
        A = RationalMatrix.from_json_dict(json.load(fh))
    payload: dict = {"command": "expsg", "matrix": A.to_json_dict()}
    exact = None
    if A.dim == 2:
        exact = exponent_semigroup_2x2_detail(A)
    limit = args.limit
    if limit is None:
        if exact is not None:
            eps = descriptor_to_set(exact.descriptor)
            limit = 4 * (eps.threshold + eps.period)
        else:
            limit = 200
    sample = exponent_semigroup_bruteforce(A, limit)
    payload["limit"] = limit
    payload["members"] = sorted(sample.members)
    ok = True
    if args.exact:
        if exact is None:
            print("error: --exact requires a 2x2 matrix", file=sys.stderr)
            return 2
        payload["exact"] = {
            "descriptor": exact.descriptor.to_json_dict(),
            "note": exact.note,
            "trace": exact.trace,
            "det": exact.det,
            "denominator": exact.denominator,
            "cases": [
                {"p": p, "r": r, "case": local.case.label}
                for p, r, local in exact.global_result.components
            ] if exact.global_result else [],
        }
        truncated = {
            n for n in descriptor_to_set(exact.descriptor).members_up_to(limit)
        }
        ok = truncated == set(sample.members)
        payload["exact"]["match"] = ok
    _emit(payload)
    return 0 if ok else 1


def cmd_realize(args) -> int:
    R = rational_from_str(args.R)
    A = realize(args.P, args.Q, R)
    res = classify_global(LucasParams(args.P, args.Q), R)
    payload = {
        "command": "realize",
        "P": args.P, "Q": args.Q, "R": str(R),
        "matrix": A.to_json_dict(),
        "semigroup": res.descriptor.to_json_dict(),
    }
    ok = True
    if args.verify is not None:
        sample = exponent_semigroup_bruteforce(A, args.verify)
        want = set(res.member_set.members_up_to(args.verify))
        ok = set(sample.members) == want
        payload["verify"] = {"n": args.verify, "match": ok}
    _emit(payload)
    return 0 if ok else 1


def cmd_check(args) -> int:
    s = from_generators(args.generators)
    verdict = realizability_verdict(s)
    payload: dict = {
        "command": "check",
        "generators": list(args.generators),
        "descriptor": s.to_json_dict(),
        "minimal_generators": minimal_generators(s),
        "plus_plus_minus_avoiding": is_plus_plus_minus_avoiding(s),
        "verdict": _verdict_json(verdict),
        "dimension_bounds": _dimension_bounds(s, verdict),
    }
    if s.kind == "scaled" and s.d == 1:
        small = small_elements(s)
        payload["frobenius"] = s.core.conductor - 1
        payload["small_elements"] = small
        payload["lonely"] = {str(n): is_lonely(s, n) for n in small}
    else:
        payload["frobenius"] = None
        payload["small_elements"] = None
        payload["lonely"] = None
    if args.json:
        _emit(payload)
    else:
        print(f"semigroup: {payload['descriptor']}")
        print(f"minimal generators: {payload['minimal_generators']}")
        print(f"frobenius: {payload['frobenius']}")
        print(f"small elements: {payload['small_elements']}")
        print(f"++- avoiding: {payload['plus_plus_minus_avoiding']}")
        print(f"verdict: {verdict.kind} ({verdict.reason})")
        print(f"dimension bounds: {payload['dimension_bounds']}")
    return 0


# ---------------------------------------------------------------------------
# Verification commands
# ---------------------------------------------------------------------------


def cmd_tables(args) -> int:
    report = Report(f"tables {args.which}")
    if args.which == 1:
        for fam in tables.TABLE1_FAMILIES:
            for k in fam.k_values:
                A = RationalMatrix.from_rows(fam.matrix(k))
                expected = fam.expected(k)
                bound = 4 * (k or 0) + 20
                sample = exponent_semigroup_bruteforce(A, bound)
                want = set(descriptor_to_set(expected).members_up_to(bound))
                name = f"table1/{fam.name}" + (f"/k={k}" if k else "")
                report.check(
                    name, set(sample.members) == want,
                    bound=bound,
                    members=sorted(sample.members),
                    expected=sorted(want),
                )
    elif args.which == 2:
        for row in tables.TABLE2_ROWS:
            params = LucasParams(row.P, row.Q)
            res = classify_local(params, row.p, row.r)
            expected = from_generators({row.m})
            n_verify = 20 * row.m
            oracle = oracle_local(params, row.p, row.r, n_verify)
            got = set(res.member_set.members_up_to(n_verify))
            report.check(
                f"table2/m={row.m}",
                res.descriptor == expected and oracle == got,
                P=row.P, Q=row.Q, p=row.p, r=row.r,
                case=res.case.label,
                descriptor=res.descriptor.to_json_dict(),
                oracle_match=oracle == got,
            )
    else:
        params = LucasParams(*tables.TABLE3_PARAMS)
        us = [lucas_u(params, n) for n in range(51)]
        disc = params.discriminant
        report.check("table3/discriminant", disc == tables.TABLE3_DISCRIMINANT,
                     value=disc)
        for row in tables.TABLE3_ROWS:
            report.check(
                f"table3/m={row.m}/u", us[row.m] == row.u_m,
                computed=us[row.m], printed=row.u_m,
            )
            for p, r in zip(row.primes, row.r):
                primitive = (
                    is_prime(p)
                    and us[row.m] % p == 0
                    and all(us[k] % p != 0 for k in range(1, row.m))
                    and disc % p != 0
                )
                report.check(
                    f"table3/m={row.m}/p={p}/primitive", primitive,
                    rank_exponent_ok=valuation(p, us[row.m]) == r,
                )
                res = classify_local(params, p, r)
                report.check(
                    f"table3/m={row.m}/p={p}/cyclic",
                    res.descriptor == from_generators({row.m}),
                    case=res.case.label,
                    descriptor=res.descriptor.to_json_dict(),
                )
    return report.finish()


def cmd_counterexample(_args) -> int:
    report = Report("counterexample")
    s = from_generators({5, 7, 16, 18})
    small = small_elements(s)
    report.check("small-elements", small == [5, 7, 10, 12], value=small)
    report.check("frobenius", s.core.conductor - 1 == 13,
                 value=s.core.conductor - 1)
    for n in small:
        report.check(f"lonely/{n}", is_lonely(s, n))
    report.check("plus-plus-minus-avoiding", is_plus_plus_minus_avoiding(s))
    verdict = realizability_verdict(s)
    report.check(
        "verdict-no", verdict.kind == "no", verdict=_verdict_json(verdict),
    )
    report.check("small-gcd-obstruction", gcd(*small) == 1, gcd=gcd(*small))
    bounds = _dimension_bounds(s, verdict)
    report.check("dimension-bounds", bounds == [3, 5], value=bounds)
    return report.finish()


def cmd_nonlocal(_args) -> int:
    report = Report("nonlocal")
    params = LucasParams(18, 8)
    n_verify = 200

    local3 = classify_local(params, 3, 1)
    report.check(
        "L(18,8,3^-1)=<2>",
        local3.descriptor == from_generators({2})
        and set(local3.member_set.members_up_to(n_verify))
        == oracle_local(params, 3, 1, n_verify),
        case=local3.case.label,
    )
    local2 = classify_local(params, 2, 5)
    s6 = SemigroupDescriptor.scaled(1, NumericalCore((0,), 6))
    report.check(
        "L(18,8,2^-5)=S_6",
        local2.descriptor == s6
        and set(local2.member_set.members_up_to(n_verify))
        == oracle_local(params, 2, 5, n_verify),
        case=local2.case.label,
    )
    combined = classify_global(params, Fraction(1, 96))
    expected = from_generators({6, 8, 10})
    report.check(
        "L(18,8,1/96)=<6,8,10>",
        combined.descriptor == expected
        and set(combined.member_set.members_up_to(n_verify))
        == oracle_global(params, Fraction(1, 96), n_verify),
        descriptor=combined.descriptor.to_json_dict(),
    )
    inter = local3.member_set.intersect(local2.member_set)
    report.check("intersection-of-locals", inter == combined.member_set)
    report.check("not-cyclic", not combined.descriptor.is_cyclic)
    report.check("not-numerical", not combined.descriptor.is_numerical)
    d = combined.descriptor
    pqzero_shape = (
        d.kind in ("zero", "all")
        or (d.kind == "scaled" and d.d == 1 and d.core.members == (0,))  # S_m
        or (d.kind == "scaled" and d.core.is_naturals and d.d == 2)  # <2>
        or (d.kind == "scaled" and d.d == 1
            and d.core.members == tuple(range(0, d.core.conductor, 2)))  # <2, m>
    )
    report.check("not-a-PQ-zero-shape", not pqzero_shape)
    return report.finish()


def cmd_sweep(args) -> int:
    report = Report("sweep")
    result = run_sweep(
        pq_max=args.pq_max,
        prime_max=args.prime_max,
        r_max=args.r_max,
        scan_cap=args.scan_cap,
        jobs=args.jobs,
    )
    report.check(
        "coverage", not result.missing_cases,
        instances=result.instances,
        cases={label: result.coverage[label] for label in sorted(result.coverage)},
        missing=result.missing_cases,
    )
    first = result.mismatches[0] if result.mismatches else None
    report.check(
        "oracle-equivalence", not result.mismatches,
        mismatches=len(result.mismatches),
        first={"P": first.P, "Q": first.Q, "p": first.p, "r": first.r,
               "kind": first.kind, "detail": list(first.detail)} if first else None,
    )
    return report.finish()


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsg",
        description="Lucas semigroups and exponent semigroups of rational "
                    "matrices, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lucas = sub.add_parser("lucas", help="Lucas sequence utilities")
    lucas_sub = lucas.add_subparsers(dest="subcommand", required=True)
    seq = lucas_sub.add_parser("seq", help="print n, U_n, V_n rows as TSV")
    seq.add_argument("P", type=int)
    seq.add_argument("Q", type=int)
    seq.add_argument("N", type=int)
    seq.add_argument("--json", action="store_true")
    seq.set_defaults(func=cmd_lucas_seq)
    rank = lucas_sub.add_parser("rank", help="rank of appearance and exponent")
    rank.add_argument("P", type=int)
    rank.add_argument("Q", type=int)
    rank.add_argument("p", type=int)
    rank.add_argument("--json", action="store_true")
    rank.set_defaults(func=cmd_lucas_rank)

    classify = sub.add_parser("classify", help="closed-form Lucas semigroups")
    csub = classify.add_subparsers(dest="subcommand", required=True)
    local = csub.add_parser("local", help="L(P, Q, p^-r)")
    local.add_argument("P", type=int)
    local.add_argument("Q", type=int)
    local.add_argument("p", type=int)
    local.add_argument("r", type=int)
    local.add_argument("--verify", type=int, metavar="N",
                       help="compare against the oracle up to N")
    local.set_defaults(func=cmd_classify_local)
    glob = csub.add_parser("global", help="L(P, Q, R)")
    glob.add_argument("P", type=int)
    glob.add_argument("Q", type=int)
    glob.add_argument("R", help='rational, e.g. "1/96"')
    glob.add_argument("--verify", type=int, metavar="N")
    glob.set_defaults(func=cmd_classify_global)

    expsg = sub.add_parser("expsg", help="exponent semigroup of a matrix")
    expsg.add_argument("--matrix", required=True,
                       help='JSON file {"entries": [["0","1/96"], ...]}')
    expsg.add_argument("--limit", type=int, metavar="N",
                       help="brute-force bound (default: adaptive)")
    expsg.add_argument("--exact", action="store_true",
                       help="also classify exactly (2x2 only) and compare")
    expsg.set_defaults(func=cmd_expsg)

    real = sub.add_parser("realize", help="witness matrix for L(P, Q, R)")
    real.add_argument("P", type=int)
    real.add_argument("Q", type=int)
    real.add_argument("R")
    real.add_argument("--verify", type=int, metavar="N")
    real.set_defaults(func=cmd_realize)

    check = sub.add_parser("check", help="invariants and verdict for generators")
    check.add_argument("generators", type=int, nargs="+")
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=cmd_check)

    tab = sub.add_parser("tables", help="reproduce a golden table")
    tab.add_argument("which", type=int, choices=(1, 2, 3))
    tab.set_defaults(func=cmd_tables)

    ce = sub.add_parser("counterexample",
                        help="the <5,7,16,18> obstruction pipeline")
    ce.set_defaults(func=cmd_counterexample)

    nl = sub.add_parser("nonlocal", help="the non-local Lucas semigroup pipeline")
    nl.set_defaults(func=cmd_nonlocal)

    sweep = sub.add_parser("sweep", help="oracle-equivalence sweep")
    sweep.add_argument("--pq-max", type=int, default=12)
    sweep.add_argument("--prime-max", type=int, default=13)
    sweep.add_argument("--r-max", type=int, default=6)
    sweep.add_argument("--scan-cap", type=int, default=1500)
    sweep.add_argument("--jobs", type=int, default=None,
                       help="worker processes (capped by LSG_SWEEP_JOBS)")
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
