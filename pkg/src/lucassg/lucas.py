"""Lucas sequences U_n, V_n: exact terms, modular streams, rank of appearance.

U is the fundamental sequence (U_0 = 0, U_1 = 1), V the companion
(V_0 = 2, V_1 = P), both satisfying x_{n+2} = P x_{n+1} - Q x_n.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .arith import Valuation, is_prime, valuation


class LucasParams(NamedTuple):
    """Coefficient pair of the recurrence U_{n+2} = P U_{n+1} - Q U_n."""

    P: int
    Q: int

    @property
    def discriminant(self) -> int:
        return self.P * self.P - 4 * self.Q

    def special_split(self, p: int) -> tuple[int, int, int, int]:
        """Decompose P = p**a * P', Q = p**b * Q' with p dividing neither P' nor Q'.

        Returns (a, P', b, Q').  Requires P and Q nonzero and p dividing both
        (that is, p is a special prime for this sequence).
        """
        if self.P == 0 or self.Q == 0:
            raise ValueError("special decomposition needs P and Q nonzero")
        a = valuation(p, self.P)
        b = valuation(p, self.Q)
        if a == 0 or b == 0:
            raise ValueError(f"{p} is not a special prime for {self}")
        return a, self.P // p**a, b, self.Q // p**b


def lucas_u(params: LucasParams, n: int) -> int:
    """Exact U_n by iterating the recurrence."""
    if n < 0:
        raise ValueError("index must be a natural number")
    P, Q = params
    u0, u1 = 0, 1
    for _ in range(n):
        u0, u1 = u1, P * u1 - Q * u0
    return u0


def lucas_v(params: LucasParams, n: int) -> int:
    """Exact companion term V_n."""
    if n < 0:
        raise ValueError("index must be a natural number")
    P, Q = params
    v0, v1 = 2, P
    for _ in range(n):
        v0, v1 = v1, P * v1 - Q * v0
    return v0


def lucas_u_mod(params: LucasParams, modulus: int, n_max: int) -> Iterator[int]:
    """Yield U_0, ..., U_{n_max} mod modulus, reducing at every step.

    O(n_max) time and O(1) state; this is the oracle backbone.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    P, Q = params.P % modulus, params.Q % modulus
    u0, u1 = 0, 1 % modulus
    for _ in range(n_max + 1):
        yield u0
        u0, u1 = u1, (P * u1 - Q * u0) % modulus


def lucas_u_mod_at(params: LucasParams, n: int, modulus: int) -> int:
    """U_n mod modulus in O(log n) multiplications (recurrence-matrix squaring).

    The n-th power of [[P, -Q], [1, 0]] has U_n in its bottom-left entry.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if n < 0:
        raise ValueError("index must be a natural number")
    P, nQ = params.P % modulus, (-params.Q) % modulus
    ra, rb, rc, rd = 1, 0, 0, 1
    ma, mb, mc, md = P, nQ, 1, 0
    e = n
    while e:
        if e & 1:
            ra, rb, rc, rd = (
                (ra * ma + rb * mc) % modulus,
                (ra * mb + rb * md) % modulus,
                (rc * ma + rd * mc) % modulus,
                (rc * mb + rd * md) % modulus,
            )
        ma, mb, mc, md = (
            (ma * ma + mb * mc) % modulus,
            (ma * mb + mb * md) % modulus,
            (mc * ma + md * mc) % modulus,
            (mc * mb + md * md) % modulus,
        )
        e >>= 1
    return rc


class RankData(NamedTuple):
    """Rank of appearance rho of a prime p (least n >= 2 with p | U_n) and the
    rank exponent nu = v_p(U_rho).  nu is INFINITY when U_rho = 0 exactly,
    which happens for the degenerate parameter pairs whose sequence has
    infinitely many zero terms."""

    rho: int
    nu: Valuation


def rank_of_appearance(params: LucasParams, p: int) -> RankData:
    """Find the rank of appearance of p by scanning U_n mod p from n = 2.

    Requires p prime and p not dividing Q (otherwise the rank may not exist).
    The scan is guaranteed to succeed by n = p + 1; exceeding that bound is an
    arithmetic bug, not bad input, and fails loudly.
    """
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")
    if params.Q % p == 0:
        raise ValueError(f"rank of appearance may not exist: {p} divides Q")
    P, Q = params.P % p, params.Q % p
    u_prev, u = 1 % p, P  # U_1, U_2 mod p
    for n in range(2, p + 2):
        if u == 0:
            return RankData(n, valuation(p, lucas_u(params, n)))
        u_prev, u = u, (P * u - Q * u_prev) % p
    raise AssertionError(
        f"rank of appearance of {p} not found by n = p + 1 for {params}"
    )
