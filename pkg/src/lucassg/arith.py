"""Exact integer and rational arithmetic: p-adic valuations, primality, factoring.

Integers are plain Python ints (arbitrary precision); rationals are
``fractions.Fraction`` (always stored reduced, positive denominator).
Everything here is deterministic and exact; floats never appear.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


class PadicInfinity:
    """The valuation of zero.  A singleton that compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return isinstance(other, PadicInfinity)

    def __hash__(self):
        return hash("lucassg.PadicInfinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, PadicInfinity)

    def __gt__(self, other):
        return not isinstance(other, PadicInfinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INFINITY = PadicInfinity()

Valuation = int | PadicInfinity


def ceil_div(a: int, b: int) -> int:
    """ceil(a / b) for integers, b > 0."""
    return -((-a) // b)


# Primes used both for trial division and as Miller-Rabin witnesses.
# These twelve witnesses give a deterministic verdict for every
# n < 3_317_044_064_679_887_385_961_981 (about 2**81), far beyond anything
# this library factors or classifies.
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _miller_rabin(n: int, witnesses) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in witnesses:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality verdict for |n|.

    Trial division below 2**32, fixed Miller-Rabin witnesses above.
    """
    n = abs(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < (1 << 32):
        f = 41
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    return _miller_rabin(n, _SMALL_PRIMES)


def _require_prime(p: int) -> None:
    if p < 2 or not is_prime(p):
        raise ValueError(f"expected a prime >= 2, got {p}")


def valuation(p: int, x: int) -> Valuation:
    """p-adic valuation of x: the largest k with p**k | x, INFINITY for x = 0.

    Rejects non-prime p loudly; a composite base here is always a caller bug.
    """
    _require_prime(p)
    if x == 0:
        return INFINITY
    x = abs(x)
    if p == 2:
        return (x & -x).bit_length() - 1
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def valuation_rational(p: int, x: Fraction | int) -> Valuation:
    """Signed p-adic valuation of a rational: v_p(num) - v_p(den), INFINITY at 0."""
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return valuation(p, x.numerator) - valuation(p, x.denominator)


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant).

    Deterministic: the polynomial offset c is stepped 1, 2, 3, ... until a
    factor appears.
    """
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise RuntimeError(f"pollard rho failed to split {n}")


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> list[tuple[int, int]]:
    """Complete prime factorization of |n| as (prime, exponent) pairs, ascending.

    factorize(1) == [].  Zero is rejected.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    found: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            n //= p
            found[p] = found.get(p, 0) + 1
    f = 41
    while f * f <= n and f < (1 << 20):
        while n % f == 0:
            n //= f
            found[f] = found.get(f, 0) + 1
        f += 2
    if n > 1:
        _factor_into(n, found)
    return sorted(found.items())


def rational_to_str(x: Fraction) -> str:
    """Serialize a rational as "num/den", or "num" when the denominator is 1."""
    return str(Fraction(x))


def rational_from_str(s: str) -> Fraction:
    """Parse the "num/den" (or "num") rational format."""
    return Fraction(s.strip())
