import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucassg.arith import INFINITY, valuation
from lucassg.lucas import (
    LucasParams,
    lucas_u,
    lucas_u_mod,
    lucas_u_mod_at,
    lucas_v,
    rank_of_appearance,
)


def test_lucas_u_known_sequences():
    p12 = LucasParams(1, 2)
    assert [lucas_u(p12, n) for n in range(10)] == [0, 1, 1, -1, -3, -1, 5, 7, -3, -17]
    p32 = LucasParams(3, 2)
    assert [lucas_u(p32, n) for n in range(6)] == [0, 1, 3, 7, 15, 31]


def test_lucas_u_initial_conditions():
    rng = random.Random(3)
    for _ in range(50):
        params = LucasParams(rng.randint(-20, 20), rng.randint(-20, 20))
        assert lucas_u(params, 0) == 0
        assert lucas_u(params, 1) == 1
        assert lucas_v(params, 0) == 2
        assert lucas_v(params, 1) == params.P


def test_lucas_v_values():
    assert lucas_v(LucasParams(1, 2), 2) == -3
    assert [lucas_v(LucasParams(3, 2), n) for n in range(4)] == [2, 3, 5, 9]


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        lucas_u(LucasParams(1, 1), -1)
    with pytest.raises(ValueError):
        lucas_v(LucasParams(1, 1), -2)


def test_lucas_u_mod_streams():
    assert list(lucas_u_mod(LucasParams(1, 2), 2, 8)) == [0, 1, 1, 1, 1, 1, 1, 1, 1]
    assert list(lucas_u_mod(LucasParams(18, 8), 3, 4)) == [0, 1, 0, 1, 0]
    assert list(lucas_u_mod(LucasParams(0, 5), 4, 4)) == [0, 1, 0, 3, 0]


def test_lucas_u_mod_rejects_small_modulus():
    with pytest.raises(ValueError):
        list(lucas_u_mod(LucasParams(1, 1), 1, 5))


def test_lucas_u_mod_agrees_with_exact():
    rng = random.Random(99)
    for _ in range(1000):
        params = LucasParams(rng.randint(-15, 15), rng.randint(-15, 15))
        modulus = rng.randint(2, 1000)
        n = rng.randint(0, 40)
        stream = list(lucas_u_mod(params, modulus, n))
        assert stream[n] == lucas_u(params, n) % modulus


def test_lucas_u_mod_at_agrees_with_stream():
    rng = random.Random(5)
    for _ in range(300):
        params = LucasParams(rng.randint(-12, 12), rng.randint(-12, 12))
        modulus = rng.randint(2, 10**6)
        n = rng.randint(0, 60)
        assert lucas_u_mod_at(params, n, modulus) == lucas_u(params, n) % modulus
    # spot-check large indices against the linear stream
    params = LucasParams(7, -3)
    stream = list(lucas_u_mod(params, 99991, 5000))
    for n in (0, 1, 2, 997, 4999, 5000):
        assert lucas_u_mod_at(params, n, 99991) == stream[n]


def test_q_zero_powers():
    for P in (-5, -2, 2, 3, 7):
        params = LucasParams(P, 0)
        for n in range(1, 12):
            assert lucas_u(params, n) == P ** (n - 1)


def test_p_zero_flip_flop():
    for Q in (-6, -1, 1, 2, 5):
        params = LucasParams(0, Q)
        for i in range(8):
            assert lucas_u(params, 2 * i) == 0
            assert lucas_u(params, 2 * i + 1) == (-Q) ** i


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=50),
    st.integers(min_value=1, max_value=50),
)
def test_addition_identity(P, Q, m, n):
    params = LucasParams(P, Q)
    lhs = lucas_u(params, m + n)
    rhs = lucas_u(params, m) * lucas_u(params, n + 1) - Q * lucas_u(params, m - 1) * lucas_u(params, n)
    assert lhs == rhs


def test_special_prime_growth():
    rng = random.Random(17)
    for p in (2, 3, 5):
        for _ in range(30):
            P = p * rng.randint(1, 9) * rng.choice([-1, 1])
            Q = p * rng.randint(1, 9) * rng.choice([-1, 1])
            params = LucasParams(P, Q)
            for n in range(1, 61):
                assert valuation(p, lucas_u(params, n)) >= n // 2


def test_rank_of_appearance_examples():
    assert rank_of_appearance(LucasParams(1, 2), 7).rho == 7
    assert rank_of_appearance(LucasParams(3, 1), 5).rho == 5
    rank = rank_of_appearance(LucasParams(1, 2), 3)
    assert rank == (4, 1)


def test_rank_rejects_p_dividing_q():
    with pytest.raises(ValueError):
        rank_of_appearance(LucasParams(3, 10), 5)
    with pytest.raises(ValueError):
        rank_of_appearance(LucasParams(1, 2), 9)  # not prime


def test_rank_degenerate_sequence_has_infinite_exponent():
    # U(1, 1) vanishes at every third index, so U_rho = 0 exactly
    rank = rank_of_appearance(LucasParams(1, 1), 5)
    assert rank.rho == 3
    assert rank.nu is INFINITY


def test_rank_is_first_divisible_index():
    rng = random.Random(23)
    primes = (2, 3, 5, 7, 11, 13)
    for _ in range(200):
        params = LucasParams(rng.randint(-12, 12), rng.randint(-12, 12))
        p = rng.choice(primes)
        if params.Q % p == 0:
            continue
        rank = rank_of_appearance(params, p)
        us = [lucas_u(params, n) for n in range(rank.rho + 1)]
        assert us[rank.rho] % p == 0
        assert all(us[k] % p != 0 for k in range(2, rank.rho))
        assert rank.nu == valuation(p, us[rank.rho])
        assert rank.rho >= 2
