"""Exact arithmetic for Lucas semigroups and exponent semigroups of rational
matrices: closed-form classification, brute-force oracles, golden tables and
realizability verdicts."""

from .arith import (
    INFINITY,
    PadicInfinity,
    factorize,
    is_prime,
    rational_from_str,
    rational_to_str,
    valuation,
    valuation_rational,
)
from .classify import (
    GlobalResult,
    LocalCase,
    LocalResult,
    SweepResult,
    Verdict,
    classify_global,
    classify_local,
    oracle_global,
    oracle_local,
    realizability_verdict,
    run_sweep,
)
from .lucas import (
    LucasParams,
    RankData,
    lucas_u,
    lucas_u_mod,
    lucas_u_mod_at,
    lucas_v,
    rank_of_appearance,
)
from .matrices import (
    ExpSemigroupSample,
    RationalMatrix,
    exponent_semigroup_2x2_exact,
    exponent_semigroup_bruteforce,
    power,
    realize,
)
from .semigroups import (
    EventuallyPeriodicSet,
    NotASemigroupError,
    NumericalCore,
    SemigroupDescriptor,
    descriptor_to_set,
    frobenius,
    from_generators,
    is_lonely,
    is_plus_plus_minus_avoiding,
    minimal_generators,
    small_elements,
    to_descriptor,
)

__all__ = [
    "INFINITY",
    "PadicInfinity",
    "factorize",
    "is_prime",
    "rational_from_str",
    "rational_to_str",
    "valuation",
    "valuation_rational",
    "LucasParams",
    "RankData",
    "lucas_u",
    "lucas_v",
    "lucas_u_mod",
    "lucas_u_mod_at",
    "rank_of_appearance",
    "EventuallyPeriodicSet",
    "NotASemigroupError",
    "NumericalCore",
    "SemigroupDescriptor",
    "descriptor_to_set",
    "frobenius",
    "from_generators",
    "is_lonely",
    "is_plus_plus_minus_avoiding",
    "minimal_generators",
    "small_elements",
    "to_descriptor",
    "GlobalResult",
    "LocalCase",
    "LocalResult",
    "SweepResult",
    "Verdict",
    "classify_global",
    "classify_local",
    "oracle_global",
    "oracle_local",
    "realizability_verdict",
    "run_sweep",
    "ExpSemigroupSample",
    "RationalMatrix",
    "exponent_semigroup_2x2_exact",
    "exponent_semigroup_bruteforce",
    "power",
    "realize",
]

__version__ = "0.1.0"
