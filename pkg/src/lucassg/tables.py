"""Golden data: the three reference tables embedded as constants.

Table 1: four matrix families with known exponent semigroups.
Table 2: (P, Q, p, r) with L(P, Q, p^-r) = <m> for m = 2..30.
Table 3: U_m(1, 2) and its primitive prime divisors for m = 31..50,
giving <m> for every m >= 31 via the rank of appearance.

The values are data, fixed with the code; the table commands and the
acceptance tests recompute everything and compare.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .semigroups import NumericalCore, SemigroupDescriptor, from_generators


class Table2Row(NamedTuple):
    m: int
    P: int
    Q: int
    p: int
    r: int


TABLE2_ROWS: tuple[Table2Row, ...] = (
    Table2Row(2, 3, 5, 3, 1),
    Table2Row(3, 3, 2, 7, 1),
    Table2Row(4, 1, 2, 3, 1),
    Table2Row(5, 3, 1, 5, 1),
    Table2Row(6, 1, 2, 5, 1),
    Table2Row(7, 1, 2, 7, 1),
    Table2Row(8, 4, 3, 41, 1),
    Table2Row(9, 1, 2, 17, 1),
    Table2Row(10, 1, 2, 11, 1),
    Table2Row(11, 1, 2, 23, 1),
    Table2Row(12, 3, 1, 23, 1),
    Table2Row(13, 3, 2, 8191, 1),
    Table2Row(14, 1, 2, 13, 1),
    Table2Row(15, 3, 1, 31, 1),
    Table2Row(16, 1, 2, 31, 1),
    Table2Row(17, 4, 1, 67, 1),
    Table2Row(18, 3, 1, 107, 1),
    Table2Row(19, 3, 1, 37, 1),
    Table2Row(20, 1, 2, 19, 1),
    Table2Row(21, 3, 2, 337, 1),
    Table2Row(22, 3, 1, 43, 1),
    Table2Row(23, 13, 1, 47, 1),
    Table2Row(24, 11, 1, 47, 1),
    Table2Row(25, 3, 2, 1801, 1),
    Table2Row(26, 3, 2, 2731, 1),
    Table2Row(27, 3, 1, 53, 1),
    Table2Row(28, 1, 2, 29, 1),
    Table2Row(29, 3, 1, 59, 1),
    Table2Row(30, 3, 2, 331, 1),
)


class Table3Row(NamedTuple):
    m: int
    u_m: int  # U_m(1, 2)
    primes: tuple[int, ...]  # listed primitive divisors
    r: tuple[int, ...]  # chosen exponent per prime (the rank exponent)


TABLE3_ROWS: tuple[Table3Row, ...] = (
    Table3Row(31, -7193, (7193,), (1,)),
    Table3Row(32, 41757, (449,), (1,)),
    Table3Row(33, 56143, (2441,), (1,)),
    Table3Row(34, -27371, (101,), (1,)),
    Table3Row(35, -139657, (71, 281), (1, 1)),
    Table3Row(36, -84915, (37,), (1,)),
    Table3Row(37, 194399, (73, 2663), (1, 1)),
    Table3Row(38, 364229, (797,), (1,)),
    Table3Row(39, -24569, (79, 311), (1, 1)),
    Table3Row(40, -753027, (1201,), (1,)),
    Table3Row(41, -703889, (409, 1721), (1, 1)),
    Table3Row(42, 802165, (43,), (1,)),
    Table3Row(43, 2209943, (257, 8599), (1, 1)),
    Table3Row(44, 605613, (131,), (1,)),
    Table3Row(45, -3814273, (2521,), (1,)),
    Table3Row(46, -5025499, (5197,), (1,)),
    Table3Row(47, 2603047, (2603047,), (1,)),
    Table3Row(48, 12654045, (193,), (1,)),
    Table3Row(49, 7447951, (97, 1567), (1, 1)),
    Table3Row(50, -17860139, (401,), (1,)),
)

TABLE3_PARAMS = (1, 2)  # the (P, Q) generating Table 3
TABLE3_DISCRIMINANT = -7  # P*P - 4*Q for (1, 2)


class Table1Family(NamedTuple):
    name: str
    k_values: tuple[int | None, ...]  # None for the parameterless families
    matrix: object  # k -> 2x2 entry rows
    expected: object  # k -> SemigroupDescriptor


def _zero_matrix(_k=None):
    return ((Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(0)))


def _tail_matrix(k: int):
    return ((Fraction(2), Fraction(1, 2 ** (k - 1))), (Fraction(0), Fraction(0)))


def _even_matrix(_k=None):
    return ((Fraction(1), Fraction(1, 2)), (Fraction(0), Fraction(1)))


def _two_odd_matrix(k: int):
    return (
        (Fraction(0), Fraction(1, 2 ** ((k - 1) // 2))),
        (Fraction(2 ** ((k + 1) // 2)), Fraction(0)),
    )


def _tail_descriptor(k: int) -> SemigroupDescriptor:
    return SemigroupDescriptor.scaled(1, NumericalCore((0,), k))


TABLE1_FAMILIES: tuple[Table1Family, ...] = (
    Table1Family("zero", (None,), _zero_matrix,
                 lambda _k: SemigroupDescriptor.zero()),
    Table1Family("tail", tuple(range(2, 10)), _tail_matrix, _tail_descriptor),
    Table1Family("even", (None,), _even_matrix,
                 lambda _k: from_generators({2})),
    Table1Family("two-odd", (3, 5, 7, 9), _two_odd_matrix,
                 lambda k: from_generators({2, k})),
)
