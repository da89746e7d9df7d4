import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucassg.semigroups import (
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

EPS = EventuallyPeriodicSet


# -- descriptors ------------------------------------------------------------


def test_from_generators_two_seven():
    s = from_generators({2, 7})
    # <2,7> = {0,2,4,6,7,8,...}: conductor 6, members strictly below it
    assert s.core.members == (0, 2, 4)
    assert s.core.conductor == 6
    assert s.d == 1
    assert 6 in s and 5 not in s


def test_from_generators_counterexample_semigroup():
    s = from_generators({5, 7, 16, 18})
    assert s.core.members == (0, 5, 7, 10, 12)
    assert s.core.conductor == 14


def test_from_generators_scaled():
    s = from_generators({6, 8, 10})
    assert s.d == 2
    assert s.core == NumericalCore((0,), 3)  # the core is the tail from 3


def test_from_generators_degenerate():
    assert from_generators({0}) == SemigroupDescriptor.zero()
    assert from_generators({1}) == SemigroupDescriptor.all_naturals()
    assert from_generators({3, 0, 1}) == SemigroupDescriptor.all_naturals()
    assert from_generators({4}) == SemigroupDescriptor.scaled(4, NumericalCore((), 0))
    with pytest.raises(ValueError):
        from_generators({-2, 3})


def test_descriptor_membership():
    s = from_generators({5, 7, 16, 18})
    members = {n for n in range(30) if n in s}
    assert members == {0, 5, 7, 10, 12} | set(range(14, 30))
    g = from_generators({6, 8, 10})
    assert 6 in g and 8 in g and 4 not in g and 7 not in g


def test_frobenius():
    assert frobenius(from_generators({2, 7})) == 5
    assert frobenius(from_generators({5, 7, 16, 18})) == 13
    with pytest.raises(ValueError):
        frobenius(SemigroupDescriptor.all_naturals())
    with pytest.raises(ValueError):
        frobenius(from_generators({6, 8, 10}))
    with pytest.raises(ValueError):
        frobenius(SemigroupDescriptor.zero())


def test_small_elements_and_lonely():
    s = from_generators({5, 7, 16, 18})
    assert small_elements(s) == [5, 7, 10, 12]
    assert is_lonely(s, 5)
    assert all(is_lonely(s, n) for n in small_elements(s))
    t = from_generators({3, 4})
    assert not is_lonely(t, 3)  # 4 is a member
    with pytest.raises(ValueError):
        small_elements(from_generators({6, 8, 10}))


def test_minimal_generators():
    assert minimal_generators(from_generators({3, 4, 5})) == [3, 4, 5]
    assert minimal_generators(from_generators({2, 7})) == [2, 7]
    assert minimal_generators(from_generators({5, 7, 16, 18})) == [5, 7, 16, 18]
    assert minimal_generators(from_generators({6, 8, 10})) == [6, 8, 10]
    assert minimal_generators(SemigroupDescriptor.all_naturals()) == [1]
    assert minimal_generators(SemigroupDescriptor.zero()) == []
    assert minimal_generators(from_generators({4})) == [4]


def test_generator_round_trip():
    rng = random.Random(42)
    done = 0
    while done < 500:
        gens = {rng.randint(2, 40) for _ in range(rng.randint(1, 5))}
        s = from_generators(gens)
        if s.kind != "scaled":
            continue
        assert from_generators(minimal_generators(s)) == s
        done += 1


def test_plus_plus_minus_avoiding():
    assert is_plus_plus_minus_avoiding(from_generators({3, 5, 7}))
    assert not is_plus_plus_minus_avoiding(from_generators({3, 4}))
    assert is_plus_plus_minus_avoiding(from_generators({5, 7, 16, 18}))
    assert is_plus_plus_minus_avoiding(SemigroupDescriptor.zero())
    assert is_plus_plus_minus_avoiding(SemigroupDescriptor.all_naturals())
    assert is_plus_plus_minus_avoiding(from_generators({6, 8, 10}))


def test_descriptor_closure_exhaustive():
    rng = random.Random(11)
    for _ in range(100):
        gens = {rng.randint(2, 25) for _ in range(rng.randint(1, 4))}
        s = from_generators(gens)
        bound = (s.core.conductor if s.kind == "scaled" else 0) + max(gens) + 1
        members = [n for n in range(bound * 2) if n in s]
        mset = set(members)
        for a in members:
            for b in members:
                if a + b < 2 * bound:
                    assert (a + b) in mset


def test_descriptor_json_schema():
    g = from_generators({6, 8, 10})
    assert g.to_json_dict() == {
        "kind": "scaled",
        "d": 2,
        "members_below_conductor": [0],
        "conductor": 3,
        "generators": [6, 8, 10],
        "frobenius": None,
    }
    assert SemigroupDescriptor.zero().to_json_dict()["kind"] == "zero"
    all_json = SemigroupDescriptor.all_naturals().to_json_dict()
    assert all_json["generators"] == [1] and all_json["frobenius"] is None
    s27 = from_generators({2, 7}).to_json_dict()
    assert s27["frobenius"] == 5 and s27["conductor"] == 6


# -- eventually periodic sets ------------------------------------------------


def test_eps_constructors_and_membership():
    assert [n in EPS.naturals() for n in range(4)] == [True] * 4
    assert [n in EPS.only_zero() for n in range(4)] == [True, False, False, False]
    c3 = EPS.cyclic(3)
    assert [n in c3 for n in range(7)] == [True, False, False, True, False, False, True]
    t4 = EPS.tail(4)
    assert [n in t4 for n in range(6)] == [True, False, False, False, True, True]
    st_ = EPS.tail_mod(4, 1, 2)
    assert st_.members_up_to(10) == [5, 7, 9]


def test_eps_canonical_equality():
    # same set described redundantly: threshold inside the periodic zone,
    # period doubled, residues shifted
    a = EPS(frozenset(), 0, 2, frozenset({0}))
    b = EPS(frozenset({0, 2, 4}), 5, 4, frozenset({0, 2}))
    assert a == b
    assert a.period == 2 and a.threshold == 0


def test_eps_canonical_minimality():
    e = EPS(frozenset({0}), 6, 3, frozenset({0, 1, 2}))
    # tail is everything: period collapses to 1; threshold walks down to 6?
    # members: {0} then all n >= 6 -> canonical threshold 6, exceptional {0}
    assert e.period == 1
    assert e.residues == frozenset({0})
    assert e.threshold == 6
    assert e.exceptional == frozenset({0})


def test_eps_intersect_examples():
    inter = EPS.cyclic(2).intersect(EPS.tail(6))
    assert inter == descriptor_to_set(from_generators({6, 8, 10}))
    assert inter.members_up_to(14) == [0, 6, 8, 10, 12, 14]
    s = EPS.tail_mod(7, 2, 5)
    assert s.intersect(EPS.naturals()) == s
    # S_3(2) cap S_5(3) = S_5(6)
    lhs = EPS.tail_mod(3, 0, 2).intersect(EPS.tail_mod(5, 0, 3))
    rhs = EPS.tail_mod(5, 0, 6)
    assert lhs == rhs
    brute = {n for n in range(100) if n in EPS.tail_mod(3, 0, 2) and n in EPS.tail_mod(5, 0, 3)}
    assert set(lhs.members_up_to(99)) == brute


def test_eps_union_and_scale():
    evens_or_late_odds = EPS.cyclic(2).union(EPS.tail_mod(5, 1, 2))
    assert evens_or_late_odds.members_up_to(8) == [0, 2, 4, 5, 6, 7, 8]
    doubled = EPS.tail(3).scale(2)
    assert doubled.members_up_to(12) == [0, 6, 8, 10, 12]
    assert doubled.unscale(2) == EPS.tail(3)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=0, max_value=8),
    st.integers(min_value=1, max_value=8),
    st.sets(st.integers(min_value=0, max_value=7), max_size=8),
    st.sets(st.integers(min_value=0, max_value=7), max_size=4),
    st.integers(min_value=0, max_value=8),
    st.integers(min_value=1, max_value=8),
    st.sets(st.integers(min_value=0, max_value=7), max_size=8),
    st.sets(st.integers(min_value=0, max_value=7), max_size=4),
)
def test_eps_combinations_pointwise(t1, p1, r1, e1, t2, p2, r2, e2):
    a = EPS(frozenset(x for x in e1 if x < t1), t1, p1, frozenset(x % p1 for x in r1))
    b = EPS(frozenset(x for x in e2 if x < t2), t2, p2, frozenset(x % p2 for x in r2))
    bound = 4 * (a.period * b.period + max(a.threshold, b.threshold))
    inter = a.intersect(b)
    union = a.union(b)
    for n in range(bound + 1):
        assert (n in inter) == ((n in a) and (n in b))
        assert (n in union) == ((n in a) or (n in b))


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=0, max_value=12),
    st.integers(min_value=1, max_value=10),
    st.sets(st.integers(min_value=0, max_value=9), max_size=10),
    st.sets(st.integers(min_value=0, max_value=11), max_size=6),
)
def test_eps_canonical_form_is_unique(threshold, period, residues, exceptional):
    e = EPS(
        frozenset(x for x in exceptional if x < threshold),
        threshold,
        period,
        frozenset(r % period for r in residues),
    )
    # rebuild the same set from a redundant description
    pad = 3
    big_t = e.threshold + 2 * e.period + pad
    redundant = EPS(
        frozenset(n for n in range(big_t) if n in e),
        big_t,
        e.period * 3,
        frozenset(
            s
            for s in range(e.period * 3)
            if (s % e.period) in e.residues
        ),
    )
    assert redundant == e
    bound = 10 * e.period * 3 + big_t
    assert e.members_up_to(bound) == redundant.members_up_to(bound)


def test_eps_bitmask_matches_members():
    rng = random.Random(31)
    for _ in range(100):
        t = rng.randint(0, 10)
        p = rng.randint(1, 9)
        e = EPS(
            frozenset(x for x in {rng.randint(0, 9) for _ in range(3)} if x < t),
            t,
            p,
            frozenset(rng.randint(0, p - 1) for _ in range(rng.randint(0, p))),
        )
        bound = rng.randint(0, 60)
        mask = e.bitmask(bound)
        assert [n for n in range(bound + 1) if (mask >> n) & 1] == e.members_up_to(bound)


def test_gcd_content():
    assert EPS.cyclic(6).gcd_content() == 6
    assert EPS.only_zero().gcd_content() == 0
    assert descriptor_to_set(from_generators({6, 8, 10})).gcd_content() == 2
    assert EPS.naturals().gcd_content() == 1


# -- conversions --------------------------------------------------------------


def test_to_descriptor_examples():
    assert to_descriptor(EPS.tail(4)) == SemigroupDescriptor.scaled(
        1, NumericalCore((0,), 4)
    )
    two_five = EPS.cyclic(2).union(EPS.tail_mod(5, 1, 2))
    d = to_descriptor(two_five)
    assert d == from_generators({2, 5})
    assert d.core.members == (0, 2)
    assert d.core.conductor == 4
    assert to_descriptor(EPS.only_zero()) == SemigroupDescriptor.zero()
    assert to_descriptor(EPS.naturals()) == SemigroupDescriptor.all_naturals()


def test_to_descriptor_rejects_non_semigroups():
    bad = EPS(frozenset({0, 2, 3}), 6, 1, frozenset())
    with pytest.raises(NotASemigroupError) as exc:
        to_descriptor(bad)
    m, n, total = exc.value.witness
    assert m + n == total
    assert m in (2, 3) and n in (2, 3)
    with pytest.raises(ValueError):
        to_descriptor(EPS.tail_mod(4, 1, 2))  # 0 missing


def test_descriptor_set_round_trip():
    rng = random.Random(8)
    for _ in range(200):
        gens = {rng.randint(1, 30) for _ in range(rng.randint(1, 4))}
        s = from_generators(gens)
        assert to_descriptor(descriptor_to_set(s)) == s


def test_frobenius_consistency():
    rng = random.Random(13)
    for _ in range(200):
        gens = {rng.randint(2, 30) for _ in range(rng.randint(1, 4))}
        s = from_generators(gens)
        if s.kind != "scaled" or s.d != 1:
            continue
        g = frobenius(s)
        assert g not in s
        for k in range(1, 10):
            assert (g + k) in s


def test_content_gcd_matches_definition():
    rng = random.Random(77)
    for _ in range(100):
        gens = {rng.randint(1, 40) for _ in range(rng.randint(1, 4))}
        s = from_generators(gens)
        if s.kind != "scaled":
            continue
        eps = descriptor_to_set(s)
        members = [n for n in eps.members_up_to(500) if n > 0]
        assert eps.gcd_content() == gcd(*members)
