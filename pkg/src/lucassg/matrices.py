"""Exact rational matrices and their exponent semigroups.

The exponent semigroup of a square rational matrix A is the set of n with
A**n entrywise integral.  For 2x2 matrices with integer characteristic
polynomial this reduces exactly to a Lucas semigroup: with P = tr A,
Q = det A and b != 0, the power identity A^n = U_n A - Q U_{n-1} I turns
integrality of A^n into divisibility conditions on U_n against the entries
a, b and p_A(a)/b.  Everything else is served by the exact brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple

from .classify import GlobalResult, classify_global
from .lucas import LucasParams
from .semigroups import SemigroupDescriptor


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(str(x))


@dataclass(frozen=True)
class RationalMatrix:
    """A square matrix of exact rationals (entries always stored reduced)."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_fraction(x) for x in row) for row in self.entries)
        d = len(rows)
        if d == 0 or any(len(row) != d for row in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, dim: int) -> "RationalMatrix":
        return cls(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(dim))
                for i in range(dim)
            )
        )

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    @property
    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.dim)), Fraction(0))

    @property
    def det(self) -> Fraction:
        if self.dim == 1:
            return self.entries[0][0]
        if self.dim == 2:
            (a, b), (c, d) = self.entries
            return a * d - b * c
        raise ValueError("determinant implemented for dimensions 1 and 2 only")

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.entries)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        n = self.dim
        return RationalMatrix(
            tuple(
                tuple(
                    sum(
                        (self.entries[i][k] * other.entries[k][j] for k in range(n)),
                        Fraction(0),
                    )
                    for j in range(n)
                )
                for i in range(n)
            )
        )

    def to_json_dict(self) -> dict:
        return {"entries": [[str(x) for x in row] for row in self.entries]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "RationalMatrix":
        return cls.from_rows(data["entries"])


def power(A: RationalMatrix, n: int) -> RationalMatrix:
    """Exact A**n (A**0 = I) by repeated multiplication."""
    if n < 0:
        raise ValueError("exponent must be a natural number")
    result = RationalMatrix.identity(A.dim)
    for _ in range(n):
        result = result @ A
    return result


class ExpSemigroupSample(NamedTuple):
    """Brute-force exponent-semigroup sample: members n <= bound with A**n integral."""

    bound: int
    members: frozenset[int]


def exponent_semigroup_bruteforce(A: RationalMatrix, bound: int) -> ExpSemigroupSample:
    """Test integrality of A**n for n = 0..bound, one multiplication per step.

    Internally walks c*A as an integer matrix (c the common denominator) and
    checks divisibility of the n-th power by c**n; that is the same exact
    computation without per-step rational reduction.
    """
    if bound < 0:
        raise ValueError("bound must be a natural number")
    d = A.dim
    c = 1
    for row in A.entries:
        for x in row:
            c = lcm(c, x.denominator)
    scaled = [[int(x * c) for x in row] for row in A.entries]
    cur = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    c_pow = 1
    members = set()
    for n in range(bound + 1):
        if all(x % c_pow == 0 for row in cur for x in row):
            members.add(n)
        cur = [
            [sum(cur[i][k] * scaled[k][j] for k in range(d)) for j in range(d)]
            for i in range(d)
        ]
        c_pow *= c
    return ExpSemigroupSample(bound, frozenset(members))


@dataclass(frozen=True)
class ExactExpResult:
    """exponent_semigroup_2x2_exact with its working: how the matrix reduced."""

    descriptor: SemigroupDescriptor
    note: str
    trace: int | None = None
    det: int | None = None
    denominator: int | None = None
    global_result: GlobalResult | None = None


def exponent_semigroup_2x2_detail(A: RationalMatrix) -> ExactExpResult:
    """Exact exponent semigroup of a 2x2 rational matrix, with diagnostics.

    Non-integer characteristic polynomial forces {0}; a diagonal matrix is
    integral or not all at once; otherwise (transposing so b != 0) the
    answer is the Lucas semigroup L(P, Q, 1/D) where D is the least common
    denominator of a, b and p_A(a)/b.
    """
    if A.dim != 2:
        raise ValueError("exact classification is for 2x2 matrices")
    tr, det = A.trace, A.det
    if tr.denominator != 1 or det.denominator != 1:
        return ExactExpResult(
            SemigroupDescriptor.zero(), "characteristic polynomial not integral"
        )
    P, Q = int(tr), int(det)
    work = A
    if work.entries[0][1] == 0 and work.entries[1][0] != 0:
        work = work.transpose()
    if work.entries[0][1] == 0:  # diagonal
        if work.is_integral:
            return ExactExpResult(
                SemigroupDescriptor.all_naturals(), "diagonal, integral", P, Q
            )
        return ExactExpResult(
            SemigroupDescriptor.zero(), "diagonal, non-integral", P, Q
        )
    a, b = work.entries[0][0], work.entries[0][1]
    char_at_a = a * a - tr * a + det
    third = char_at_a / b
    D = lcm(a.denominator, b.denominator, third.denominator)
    glob = classify_global(LucasParams(P, Q), Fraction(1, D))
    return ExactExpResult(
        glob.descriptor, "Lucas semigroup of the entry denominators",
        P, Q, D, glob,
    )


def exponent_semigroup_2x2_exact(A: RationalMatrix) -> SemigroupDescriptor:
    """Exact {n : A**n integral} for 2x2 rational A, as a canonical descriptor."""
    return exponent_semigroup_2x2_detail(A).descriptor


def realize(P: int, Q: int, R: Fraction | int | str) -> RationalMatrix:
    """A 2x2 matrix whose exponent semigroup is L(P, Q, R).

    The construction [[0, 1/D], [-Q*D, P]] (D the reduced denominator of R)
    needs P*Q != 0; the PQ = 0 semigroups have their own fixed witnesses.
    """
    if P * Q == 0:
        raise ValueError("the witness construction requires P*Q != 0")
    D = Fraction(R).denominator
    return RationalMatrix.from_rows(
        [[Fraction(0), Fraction(1, D)], [Fraction(-Q * D), Fraction(P)]]
    )
