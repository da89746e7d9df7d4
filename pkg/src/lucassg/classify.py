"""Closed-form classification of local and global Lucas semigroups.

The local semigroup L(P, Q, p^-r) = {n : v_p(U_n) >= r} falls into one of
three regimes -- PQ = 0, p regular (p not dividing gcd(P, Q)), or p special
-- and each regime splits further into explicit closed forms.  Every closed
form here is paired with `oracle_local`, an independent brute-force scan of
the recurrence, and `run_sweep` checks the two against each other across a
parameter grid while counting how often each branch fires.

Global semigroups L(P, Q, R) only see the denominator of R and factor as an
intersection of local ones, one per prime power in the denominator.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import INFINITY, PadicInfinity, Valuation, ceil_div, factorize, is_prime, valuation
from .lucas import LucasParams, RankData, lucas_u, lucas_u_mod, lucas_u_mod_at, rank_of_appearance
from .semigroups import (
    EventuallyPeriodicSet,
    SemigroupDescriptor,
    is_plus_plus_minus_avoiding,
    small_elements,
    to_descriptor,
)
from . import tables

# One label per closed-form branch; the sweep requires full coverage.
CASE_PQZERO = (
    "Thm3.1/Q0-coprime",
    "Thm3.1/Q0-divides",
    "Thm3.1/P0-coprime",
    "Thm3.1/P0-divides",
    "Thm3.1/PQ0",
)
CASE_REGULAR = (
    "Thm4.1/p-divides-Q",
    "Thm4.1/regular-odd-p",
    "Thm4.1/p2-even-P",
    "Thm4.1/p2-Q1mod4",
    "Thm4.1/p2-Q3mod4-r1",
    "Thm4.1/p2-Q3mod4",
)
CASE_SPECIAL = (
    "Thm5.2/b-gt-2a",
    "Cor5.4/b-eq-2a",
    "Thm5.5/lambda-infinite",
    "Thm5.5/lambda-finite",
    "Thm5.5/plain",
)
ALL_CASE_LABELS = CASE_PQZERO + CASE_REGULAR + CASE_SPECIAL
CASE_TRIVIAL = "r<=0"


@dataclass(frozen=True)
class LocalCase:
    """Which theorem branch produced a local result, with its working data."""

    label: str
    a: int | None = None
    b: int | None = None
    rank: RankData | None = None
    lam: Valuation | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"label": self.label}
        if self.a is not None:
            out["a"] = self.a
            out["b"] = self.b
        if self.rank is not None:
            out["rho"] = self.rank.rho
            out["nu"] = None if isinstance(self.rank.nu, PadicInfinity) else self.rank.nu
        if self.lam is not None:
            out["lambda"] = None if isinstance(self.lam, PadicInfinity) else self.lam
        return out


@dataclass(frozen=True)
class LocalResult:
    """A classified local Lucas semigroup: case tag, exact member set, descriptor."""

    case: LocalCase
    member_set: EventuallyPeriodicSet
    descriptor: SemigroupDescriptor


@dataclass(frozen=True)
class GlobalResult:
    """classify_global output: the intersection of per-prime local results."""

    descriptor: SemigroupDescriptor
    member_set: EventuallyPeriodicSet
    components: tuple[tuple[int, int, LocalResult], ...]  # (p, r, local)


def _clip(r: int, nu: Valuation) -> int:
    """(r - nu)_+ where nu may be INFINITY (then the result is 0)."""
    if isinstance(nu, PadicInfinity):
        return 0
    return max(r - nu, 0)


def _regular_generator(P: int, Q: int, p: int, r: int):
    """Generator of the cyclic semigroup L(P, Q, p^-r) for p coprime to Q.

    Returns (subcase, generator, rank_data).  Subcases follow the regular
    classification: 2 for odd p, 3-6 for p = 2 split on P and Q mod 4.
    Requires PQ != 0 and r >= 1.
    """
    params = LucasParams(P, Q)
    if p >= 3:
        rk = rank_of_appearance(params, p)
        return 2, p ** _clip(r, rk.nu) * rk.rho, rk
    # p = 2, Q odd
    if P % 2 == 0:
        return 3, 2 ** (1 + _clip(r, valuation(2, P))), None
    if Q % 4 == 1:
        u3 = lucas_u(params, 3)
        return 4, 3 * 2 ** _clip(r, valuation(2, u3)), None
    if r == 1:
        return 5, 3, None
    u6 = lucas_u(params, 6)
    return 6, 6 * 2 ** _clip(r, valuation(2, u6)), None


def _p_power_congruence(p: int, K: int, b: int) -> EventuallyPeriodicSet:
    """{n in <p> : v_p(n) >= K - b*n}, materialized.

    For n >= ceil((K - 1) / b) the requirement drops to v_p(n) >= 1, so past
    that point the set is just the multiples of p; below it the finitely many
    multiples of p are tested directly (n = 0 always qualifies).
    """
    cutoff = max(ceil_div(K - 1, b), 0)
    exceptional = {
        n for n in range(0, cutoff, p)
        if n == 0 or valuation(p, n) >= K - b * n
    }
    if cutoff > 0:
        exceptional.add(0)
    return EventuallyPeriodicSet(
        frozenset(exceptional), cutoff, p, frozenset({0})
    )


def _classify_pqzero(P: int, Q: int, p: int, r: int):
    if Q == 0 and P != 0:
        if P % p != 0:
            return LocalCase(CASE_PQZERO[0]), EventuallyPeriodicSet.only_zero()
        m = ceil_div(r, valuation(p, P)) + 1
        return LocalCase(CASE_PQZERO[1]), EventuallyPeriodicSet.tail(m)
    if P == 0 and Q != 0:
        if Q % p != 0:
            return LocalCase(CASE_PQZERO[2]), EventuallyPeriodicSet.cyclic(2)
        m = 2 * ceil_div(r, valuation(p, Q)) + 1
        eps = EventuallyPeriodicSet.cyclic(2).union(
            EventuallyPeriodicSet.tail_mod(m, 1, 2)
        )
        return LocalCase(CASE_PQZERO[3]), eps
    return LocalCase(CASE_PQZERO[4]), EventuallyPeriodicSet.tail(2)


def _classify_regular(P: int, Q: int, p: int, r: int):
    if Q % p == 0:
        return LocalCase(CASE_REGULAR[0]), EventuallyPeriodicSet.only_zero()
    subcase, g, rk = _regular_generator(P, Q, p, r)
    return LocalCase(CASE_REGULAR[subcase - 1], rank=rk), EventuallyPeriodicSet.cyclic(g)


def _classify_special(params: LucasParams, p: int, r: int):
    a, Pp, b, Qp = params.special_split(p)
    if b > 2 * a:
        return (
            LocalCase(CASE_SPECIAL[0], a=a, b=b),
            EventuallyPeriodicSet.tail(ceil_div(r + a, a)),
        )
    if b == 2 * a:
        # Union of S_i intersected with the cyclic semigroup of the reduced
        # sequence at level r + a - a*i; the level-<=0 terms degenerate to
        # the plain tail S_i.
        top = ceil_div(r + a, a)
        eps = EventuallyPeriodicSet.empty()
        for i in range(top + 1):
            level = r + a - a * i
            h = _regular_generator(Pp, Qp, p, level)[1] if level >= 1 else 1
            eps = eps.union(EventuallyPeriodicSet.tail_mod(i, 0, h))
        rk = rank_of_appearance(LucasParams(Pp, Qp), p)
        return LocalCase(CASE_SPECIAL[1], a=a, b=b, rank=rk), eps
    # b < 2a: even indices carry a tail plus a p-power congruence piece,
    # odd indices form an arithmetic tail on their own.
    m0 = max(ceil_div(r - a + b, b), 0)
    lam_applies = p <= 3 and 2 * a == b + 1
    disc = Pp * Pp - Qp
    if lam_applies and disc == 0:
        even_core = EventuallyPeriodicSet.tail(m0).union(
            EventuallyPeriodicSet.cyclic(p)
        )
        case = LocalCase(CASE_SPECIAL[2], a=a, b=b, lam=INFINITY)
    else:
        lam = valuation(p, disc) if lam_applies else 0
        even_core = EventuallyPeriodicSet.tail(m0).union(
            _p_power_congruence(p, r - a + b - lam, b)
        )
        label = CASE_SPECIAL[3] if lam_applies else CASE_SPECIAL[4]
        case = LocalCase(label, a=a, b=b, lam=lam if lam_applies else None)
    odd_part = EventuallyPeriodicSet.tail_mod(2 * ceil_div(r, b), 1, 2)
    return case, even_core.scale(2).union(odd_part)


def classify_local(params: LucasParams, p: int, r: int) -> LocalResult:
    """Closed-form L(P, Q, p^-r) = {n : v_p(U_n) >= r}.

    r <= 0 yields all of N (the valuation condition is vacuous); otherwise
    the result is the branch of the classification matching (P, Q, p).
    """
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")
    params = LucasParams(*params)
    P, Q = params
    if r <= 0:
        case, eps = LocalCase(CASE_TRIVIAL), EventuallyPeriodicSet.naturals()
    elif P == 0 or Q == 0:
        case, eps = _classify_pqzero(P, Q, p, r)
    elif gcd(P, Q) % p != 0:
        case, eps = _classify_regular(P, Q, p, r)
    else:
        case, eps = _classify_special(params, p, r)
    return LocalResult(case, eps, to_descriptor(eps))


def classify_global(params: LucasParams, R: Fraction | int | str) -> GlobalResult:
    """L(P, Q, R) as an intersection of local semigroups over primes dividing
    the denominator of R (only the denominator matters)."""
    params = LucasParams(*params)
    R = Fraction(R)
    if R.denominator == 1:
        return GlobalResult(
            SemigroupDescriptor.all_naturals(),
            EventuallyPeriodicSet.naturals(),
            (),
        )
    eps = EventuallyPeriodicSet.naturals()
    components = []
    for p, e in factorize(R.denominator):
        local = classify_local(params, p, e)
        components.append((p, e, local))
        eps = eps.intersect(local.member_set)
    return GlobalResult(to_descriptor(eps), eps, tuple(components))


def oracle_local(params: LucasParams, p: int, r: int, n_max: int) -> set[int]:
    """Brute-force {n <= n_max : U_n == 0 mod p**r}, straight off the recurrence.

    Shares no code with classify_local; this is the independent ground truth.
    """
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")
    if r < 1:
        raise ValueError("oracle needs r >= 1")
    params = LucasParams(*params)
    modulus = p**r
    return {
        n for n, u in enumerate(lucas_u_mod(params, modulus, n_max)) if u == 0
    }


def oracle_global(params: LucasParams, R: Fraction | int | str, n_max: int) -> set[int]:
    """Brute-force {n <= n_max : U_n * R is an integer}."""
    params = LucasParams(*params)
    R = Fraction(R)
    D = R.denominator
    if D == 1:
        return set(range(n_max + 1))
    return {n for n, u in enumerate(lucas_u_mod(params, D, n_max)) if u == 0}


# ---------------------------------------------------------------------------
# Realizability verdicts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Three-valued answer to "is this semigroup an exponent semigroup of a
    2x2 rational matrix?".

    "yes" carries an explicit witness; "no" carries the obstruction; anything
    the catalog cannot settle is "unknown".
    """

    kind: str  # "yes" | "no" | "unknown"
    reason: str
    matrix_witness: tuple[tuple[Fraction, ...], ...] | None = None
    lucas_witness: tuple[int, int, Fraction] | None = None


def _yes(reason, matrix=None, lucas=None) -> Verdict:
    entries = tuple(tuple(Fraction(x) for x in row) for row in matrix) if matrix else None
    return Verdict("yes", reason, entries, lucas)


def realizability_verdict(s: SemigroupDescriptor) -> Verdict:
    """Catalog-based verdict with proof obligations discharged by witnesses.

    Yes: {0}, N, tails S_m, cyclic <m>, <2, odd m>, and the documented
    non-local example <6,8,10>.  No: a numerical semigroup that either is not
    ++- avoiding or has small elements with gcd 1.  Everything else: unknown.
    """
    if s.kind == "zero":
        return _yes("the zero semigroup", [[Fraction(1, 2), 0], [0, 0]],
                    (2, 0, Fraction(1, 3)))
    if s.kind == "all":
        return _yes("all of N", [[1, 0], [0, 1]], (0, 0, Fraction(1)))
    core, d = s.core, s.d
    if d == 1 and core.members == (0,):
        m = core.conductor
        return _yes(f"ordinary semigroup S_{m}",
                    [[2, Fraction(1, 2 ** (m - 1))], [0, 0]],
                    (2, 0, Fraction(1, 2 ** (m - 1))))
    if core.is_naturals:
        m = d
        lucas = None
        for row in tables.TABLE2_ROWS:
            if row.m == m:
                lucas = (row.P, row.Q, Fraction(1, row.p**row.r))
                break
        return _yes(f"cyclic semigroup <{m}>", [[1, Fraction(1, m)], [0, 1]], lucas)
    if d == 1 and core.members == tuple(range(0, core.conductor, 2)):
        m = core.conductor + 1  # odd, >= 5 here (S_2 is caught above)
        return _yes(f"<2, {m}>",
                    [[0, Fraction(1, 2 ** ((m - 1) // 2))], [2 ** ((m + 1) // 2), 0]],
                    (0, 2, Fraction(1, 2 ** ((m - 1) // 2))))
    if d == 2 and core.members == (0,) and core.conductor == 3:
        return _yes("<6, 8, 10>, the non-local example",
                    [[0, Fraction(1, 96)], [-768, 18]],
                    (18, 8, Fraction(1, 96)))
    if s.is_numerical:
        if not is_plus_plus_minus_avoiding(s):
            return Verdict(
                "no",
                "not ++- avoiding: two consecutive members without the next, "
                "but a realizable semigroup containing n and n+1 contains the "
                "whole tail from n",
            )
        small = small_elements(s)
        if small and gcd(*small) == 1:
            return Verdict(
                "no",
                f"small elements {small} have gcd 1, but a numerical "
                "realizable semigroup has gcd of small elements >= 2 (or none)",
            )
    return Verdict("unknown", "outside the catalog of decided forms")


# ---------------------------------------------------------------------------
# Oracle-equivalence sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepMismatch:
    P: int
    Q: int
    p: int
    r: int
    kind: str  # "scan" | "probe"
    detail: tuple


@dataclass
class SweepResult:
    instances: int
    coverage: Counter
    mismatches: list[SweepMismatch]

    @property
    def missing_cases(self) -> list[str]:
        return [c for c in ALL_CASE_LABELS if self.coverage[c] == 0]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.missing_cases


def check_instance(params: LucasParams, p: int, r: int,
                   scan_cap: int = 1500) -> tuple[str, SweepMismatch | None]:
    """Compare classify_local against the oracle for one parameter tuple.

    The scan runs to 4 * (threshold + period) of the closed form, capped at
    scan_cap; when the cap truncates the scan, membership is additionally
    probed at the structural indices (multiples of the period and their
    neighbors, and period / p) with an O(log n) modular evaluation.
    """
    params = LucasParams(*params)
    res = classify_local(params, p, r)
    eps = res.member_set
    full = 4 * (eps.threshold + eps.period)
    n_max = min(full, scan_cap)
    got = set(eps.members_up_to(n_max))
    want = oracle_local(params, p, r, n_max)
    if got != want:
        diff = sorted(got ^ want)[:5]
        return res.case.label, SweepMismatch(*params, p, r, "scan", tuple(diff))
    if full > n_max:
        per = eps.period
        probes = {per - 1, per, per + 1, 2 * per, 2 * per + 1, 3 * per, 4 * per}
        if per % p == 0:
            probes.add(per // p)
        modulus = p**r
        for n in sorted(probes):
            if n <= n_max:
                continue
            claimed = n in eps
            actual = lucas_u_mod_at(params, n, modulus) == 0
            if claimed != actual:
                return res.case.label, SweepMismatch(
                    *params, p, r, "probe", (n, claimed, actual)
                )
    return res.case.label, None


def _sweep_slice(args) -> tuple[Counter, list[SweepMismatch]]:
    P, pq_max, prime_max, r_max, scan_cap = args
    coverage: Counter = Counter()
    mismatches: list[SweepMismatch] = []
    primes = [p for p in range(2, prime_max + 1) if is_prime(p)]
    for Q in range(-pq_max, pq_max + 1):
        for p in primes:
            for r in range(1, r_max + 1):
                label, bad = check_instance(LucasParams(P, Q), p, r, scan_cap)
                coverage[label] += 1
                if bad is not None:
                    mismatches.append(bad)
    return coverage, mismatches


def run_sweep(pq_max: int = 12, prime_max: int = 13, r_max: int = 6,
              scan_cap: int = 1500, jobs: int | None = None) -> SweepResult:
    """Oracle-equivalence sweep over |P|, |Q| <= pq_max, primes <= prime_max,
    1 <= r <= r_max.  The LSG_SWEEP_JOBS environment variable caps `jobs`."""
    if jobs is None:
        jobs = int(os.environ.get("LSG_SWEEP_JOBS", "1"))
    cap = os.environ.get("LSG_SWEEP_JOBS")
    if cap is not None:
        jobs = min(jobs, max(int(cap), 1))
    work = [
        (P, pq_max, prime_max, r_max, scan_cap)
        for P in range(-pq_max, pq_max + 1)
    ]
    coverage: Counter = Counter()
    mismatches: list[SweepMismatch] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_slice, work))
    else:
        results = [_sweep_slice(w) for w in work]
    for cov, bad in results:
        coverage.update(cov)
        mismatches.extend(bad)
    mismatches.sort(key=lambda m: (m.P, m.Q, m.p, m.r))
    instances = sum(coverage.values())
    return SweepResult(instances, coverage, mismatches)
