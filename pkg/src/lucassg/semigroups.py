"""Canonical subsemigroups of the naturals and eventually periodic subsets.

Two representations cooperate here.  EventuallyPeriodicSet is the workhorse
for set algebra (union, intersection, scaling): it stores any eventually
periodic subset of N in a canonical form, so structural equality coincides
with equality as sets.  SemigroupDescriptor is the canonical answer format
for semigroups: {0}, all of N, or d times a numerical semigroup with content
gcd 1.  The numerical part carries its members below the conductor, which is
enough for Frobenius numbers, small elements and minimal generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .arith import ceil_div, factorize


class NotASemigroupError(ValueError):
    """Raised when a set fails the additive-closure check.

    Carries a witness triple (m, n, m + n) with m, n members and m + n not.
    """

    def __init__(self, m: int, n: int, total: int):
        super().__init__(f"not additively closed: {m} + {n} = {total} is missing")
        self.witness = (m, n, total)


def _sorted_divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _progression_bits(count: int, step: int) -> int:
    """Integer with `count` one-bits at positions 0, step, 2*step, ...

    Built by doubling; sparse progressions (few bits, huge step) just set
    bits one at a time.
    """
    if count <= 0:
        return 0
    if step == 1:
        return (1 << count) - 1
    if count <= 128:
        bits = 0
        for i in range(count):
            bits |= 1 << (i * step)
        return bits
    bits = 1
    have = 1
    while have * 2 <= count:
        bits |= bits << (have * step)
        have *= 2
    rem = count - have
    if rem:
        low = bits & ((1 << ((rem - 1) * step + 1)) - 1)
        bits |= low << (have * step)
    return bits


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    """A subset of N: explicit below `threshold`, periodic from it onward.

    Membership: n in exceptional for n < threshold, else (n mod period) in
    residues.  Construction canonicalizes, making period and then threshold
    minimal, so equal sets always compare (and hash) equal.
    """

    exceptional: frozenset[int]
    threshold: int
    period: int
    residues: frozenset[int]

    def __post_init__(self):
        threshold, period = self.threshold, self.period
        if period < 1:
            raise ValueError("period must be >= 1")
        if threshold < 0:
            raise ValueError("threshold must be >= 0")
        residues = frozenset(s % period for s in self.residues)
        exceptional = frozenset(self.exceptional)
        if any(e < 0 or e >= threshold for e in exceptional):
            raise ValueError("exceptional members must lie in [0, threshold)")

        # Minimal period: smallest divisor q of period whose shift fixes the
        # residue pattern on Z/period.
        if not residues:
            q = 1
        elif len(residues) == period:
            q = 1
            residues = frozenset({0})
        else:
            for q in _sorted_divisors(period):
                if frozenset((s + q) % period for s in residues) == residues:
                    break
            residues = frozenset(s % q for s in residues)

        # Minimal threshold: absorb boundary values that already match the
        # periodic pattern.
        exc = set(exceptional)
        t = threshold
        while t > 0:
            n = t - 1
            if (n in exc) == ((n % q) in residues):
                t -= 1
                exc.discard(n)
            else:
                break

        object.__setattr__(self, "exceptional", frozenset(exc))
        object.__setattr__(self, "threshold", t)
        object.__setattr__(self, "period", q)
        object.__setattr__(self, "residues", residues)

    # -- constructors -------------------------------------------------

    @classmethod
    def empty(cls) -> "EventuallyPeriodicSet":
        return cls(frozenset(), 0, 1, frozenset())

    @classmethod
    def naturals(cls) -> "EventuallyPeriodicSet":
        return cls(frozenset(), 0, 1, frozenset({0}))

    @classmethod
    def only_zero(cls) -> "EventuallyPeriodicSet":
        return cls(frozenset({0}), 1, 1, frozenset())

    @classmethod
    def cyclic(cls, m: int) -> "EventuallyPeriodicSet":
        """All multiples of m (with cyclic(0) = {0} and cyclic(1) = N)."""
        if m < 0:
            raise ValueError("generator must be a natural number")
        if m == 0:
            return cls.only_zero()
        return cls(frozenset(), 0, m, frozenset({0}))

    @classmethod
    def tail(cls, m: int) -> "EventuallyPeriodicSet":
        """The ordinary semigroup {0} with everything from m onward."""
        if m <= 1:
            return cls.naturals()
        return cls(frozenset({0}), m, 1, frozenset({0}))

    @classmethod
    def tail_mod(cls, m: int, a: int, n: int) -> "EventuallyPeriodicSet":
        """Scaled tail: members of tail(m) congruent to a mod n."""
        if n < 1:
            raise ValueError("modulus must be >= 1")
        if m <= 1:
            return cls(frozenset(), 0, n, frozenset({a % n}))
        exceptional = frozenset({0}) if a % n == 0 else frozenset()
        return cls(exceptional, m, n, frozenset({a % n}))

    # -- membership and enumeration ------------------------------------

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.threshold:
            return n in self.exceptional
        return (n % self.period) in self.residues

    def members_up_to(self, bound: int) -> list[int]:
        """Sorted members in [0, bound]."""
        out = [e for e in self.exceptional if e <= bound]
        for s in self.residues:
            start = self.threshold + ((s - self.threshold) % self.period)
            out.extend(range(start, bound + 1, self.period))
        return sorted(out)

    def bitmask(self, bound: int) -> int:
        """Membership of [0, bound] packed into an int (bit i set iff i in self)."""
        mask = 0
        for e in self.exceptional:
            if e <= bound:
                mask |= 1 << e
        for s in self.residues:
            start = self.threshold + ((s - self.threshold) % self.period)
            if start <= bound:
                count = (bound - start) // self.period + 1
                mask |= _progression_bits(count, self.period) << start
        return mask

    @property
    def is_finite(self) -> bool:
        return not self.residues

    # -- set algebra ----------------------------------------------------

    def _combine_exceptional(self, other, t, want) -> set[int]:
        return {n for n in range(t) if want(n in self, n in other)}

    def union(self, other: "EventuallyPeriodicSet") -> "EventuallyPeriodicSet":
        q = self.period * other.period // gcd(self.period, other.period)
        t = max(self.threshold, other.threshold)
        residues: set[int] = set()
        for side in (self, other):
            for s in side.residues:
                residues.update(range(s, q, side.period))
        exceptional = self._combine_exceptional(other, t, lambda a, b: a or b)
        return EventuallyPeriodicSet(frozenset(exceptional), t, q, frozenset(residues))

    def intersect(self, other: "EventuallyPeriodicSet") -> "EventuallyPeriodicSet":
        """Exact intersection: period lcm, threshold max, then canonicalize."""
        q = self.period * other.period // gcd(self.period, other.period)
        t = max(self.threshold, other.threshold)
        a, b = self, other
        # Walk the sparser side's residue classes across [0, q).
        if len(a.residues) * (q // a.period) > len(b.residues) * (q // b.period):
            a, b = b, a
        residues: set[int] = set()
        for s in a.residues:
            residues.update(
                x for x in range(s, q, a.period) if (x % b.period) in b.residues
            )
        exceptional = self._combine_exceptional(other, t, lambda x, y: x and y)
        return EventuallyPeriodicSet(frozenset(exceptional), t, q, frozenset(residues))

    def scale(self, k: int) -> "EventuallyPeriodicSet":
        """The set {k * x : x in self}."""
        if k < 1:
            raise ValueError("scale factor must be >= 1")
        if k == 1:
            return self
        return EventuallyPeriodicSet(
            frozenset(k * e for e in self.exceptional),
            k * self.threshold,
            k * self.period,
            frozenset(k * s for s in self.residues),
        )

    def unscale(self, k: int) -> "EventuallyPeriodicSet":
        """The set {x // k : x in self, k | x} (left inverse of scale)."""
        if k < 1:
            raise ValueError("scale factor must be >= 1")
        if k == 1:
            return self
        t = ceil_div(self.threshold, k)
        q = self.period // gcd(self.period, k)
        residues = set()
        for s in range(q):
            rep = t + ((s - t) % q)
            if (k * rep) in self:
                residues.add(s)
        exceptional = frozenset(
            e // k for e in self.exceptional if e % k == 0 and e // k < t
        )
        return EventuallyPeriodicSet(exceptional, t, q, frozenset(residues))

    def gcd_content(self) -> int:
        """gcd of all nonzero members (0 when the set has none)."""
        g = 0
        for e in self.exceptional:
            g = gcd(g, e)
        for s in self.residues:
            start = self.threshold + ((s - self.threshold) % self.period)
            # gcd of the whole class {start, start+period, ...}
            g = gcd(g, start, self.period)
        return g

    def to_json_dict(self) -> dict:
        return {
            "exceptional": sorted(self.exceptional),
            "threshold": self.threshold,
            "period": self.period,
            "residues": sorted(self.residues),
        }


@dataclass(frozen=True)
class NumericalCore:
    """A numerical semigroup (gcd 1): sorted members below the conductor.

    The conductor is the least c with [c, oo) contained in the semigroup;
    the Frobenius number is c - 1.  The full set N has conductor 0 and no
    listed members.
    """

    members: tuple[int, ...]
    conductor: int

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        c = self.conductor
        if c < 0:
            raise ValueError("conductor must be >= 0")
        if c == 0:
            if members:
                raise ValueError("conductor 0 admits no members below it")
        else:
            if not members or members[0] != 0:
                raise ValueError("0 must be a member")
            if members[-1] >= c:
                raise ValueError("members must lie below the conductor")
            if c - 1 in members or c == 1:
                raise ValueError("conductor is not minimal")
        object.__setattr__(self, "_member_set", frozenset(members))

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.conductor or n in self._member_set

    @property
    def is_naturals(self) -> bool:
        return self.conductor == 0

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero member."""
        if self.conductor == 0:
            return 1
        for n in self.members:
            if n > 0:
                return n
        return self.conductor


@dataclass(frozen=True)
class SemigroupDescriptor:
    """Canonical form of a subsemigroup of N.

    kind "zero" is {0}; kind "all" is N; kind "scaled" is d * core where d
    is the gcd of the nonzero members and core is numerical.  Numerical
    semigroups other than N are exactly the d = 1 case.
    """

    kind: str
    d: int = 0
    core: NumericalCore | None = None

    @classmethod
    def zero(cls) -> "SemigroupDescriptor":
        return cls("zero")

    @classmethod
    def all_naturals(cls) -> "SemigroupDescriptor":
        return cls("all")

    @classmethod
    def scaled(cls, d: int, core: NumericalCore) -> "SemigroupDescriptor":
        if d < 1:
            raise ValueError("scale must be >= 1")
        if d == 1 and core.is_naturals:
            return cls.all_naturals()
        return cls("scaled", d, core)

    def __contains__(self, n: int) -> bool:
        if self.kind == "zero":
            return n == 0
        if self.kind == "all":
            return n >= 0
        return n >= 0 and n % self.d == 0 and (n // self.d) in self.core

    @property
    def is_numerical(self) -> bool:
        """Finite complement in N."""
        return self.kind == "all" or (self.kind == "scaled" and self.d == 1)

    @property
    def is_cyclic(self) -> bool:
        """Of the form <m> (including the trivial {0} = <0> and N = <1>)."""
        if self.kind in ("zero", "all"):
            return True
        return self.core.is_naturals

    @property
    def multiplicity(self) -> int | None:
        """Smallest nonzero member, None for {0}."""
        if self.kind == "zero":
            return None
        if self.kind == "all":
            return 1
        return self.d * self.core.multiplicity

    def to_json_dict(self) -> dict:
        gens = minimal_generators(self)
        if self.kind == "zero":
            return {"kind": "zero", "d": 0, "members_below_conductor": [],
                    "conductor": 0, "generators": [], "frobenius": None}
        if self.kind == "all":
            return {"kind": "all", "d": 1, "members_below_conductor": [],
                    "conductor": 0, "generators": gens, "frobenius": None}
        frob = self.core.conductor - 1 if self.d == 1 else None
        return {
            "kind": "scaled",
            "d": self.d,
            "members_below_conductor": list(self.core.members),
            "conductor": self.core.conductor,
            "generators": gens,
            "frobenius": frob,
        }


def from_generators(gens: Iterable[int]) -> SemigroupDescriptor:
    """Canonical descriptor of the semigroup generated by `gens`.

    Zeros are ignored; an all-zero input yields {0}.  The numerical core is
    found by dynamic programming with a doubling bound, stopping once the
    reachable set ends in a run at least as long as the multiplicity (from
    there on every larger value is reachable).
    """
    pos = sorted({int(g) for g in gens if g != 0})
    if any(g < 0 for g in pos):
        raise ValueError("generators must be natural numbers")
    if not pos:
        return SemigroupDescriptor.zero()
    d = gcd(*pos)
    core_gens = [g // d for g in pos]
    if core_gens[0] == 1:
        return SemigroupDescriptor.scaled(d, NumericalCore((), 0))
    m = core_gens[0]
    bound = 2 * (core_gens[-1] + m)
    while True:
        reach = bytearray(bound + 1)
        reach[0] = 1
        for n in range(core_gens[0], bound + 1):
            for g in core_gens:
                if g > n:
                    break
                if reach[n - g]:
                    reach[n] = 1
                    break
        i = bound
        while i >= 0 and reach[i]:
            i -= 1
        conductor = i + 1
        if conductor <= bound and bound - conductor + 1 >= m:
            members = tuple(n for n in range(conductor) if reach[n])
            return SemigroupDescriptor.scaled(d, NumericalCore(members, conductor))
        bound *= 2


def frobenius(s: SemigroupDescriptor) -> int:
    """Largest natural number not in s; defined only for numerical s != N."""
    if s.kind != "scaled" or s.d != 1:
        raise ValueError("Frobenius number requires a numerical semigroup with gaps")
    return s.core.conductor - 1


def small_elements(s: SemigroupDescriptor) -> list[int]:
    """Nonzero members below the Frobenius number."""
    if s.kind != "scaled" or s.d != 1:
        raise ValueError("small elements require a numerical semigroup with gaps")
    return [n for n in s.core.members if n > 0]


def is_lonely(s: SemigroupDescriptor, n: int) -> bool:
    """True when n is a member and neither neighbor n - 1, n + 1 is."""
    return (n in s) and (n - 1 not in s) and (n + 1 not in s)


def minimal_generators(s: SemigroupDescriptor) -> list[int]:
    """The unique minimal generating set (nonzero members that are not sums)."""
    if s.kind == "zero":
        return []
    if s.kind == "all":
        return [1]
    core = s.core
    if core.is_naturals:
        return [s.d]
    bound = core.conductor + core.multiplicity
    elems = [n for n in core.members if n > 0]
    elems += list(range(core.conductor, bound))
    elem_set = set(elems)
    gens = [
        n for n in elems
        if not any(0 < x < n and (n - x) in elem_set for x in elems)
    ]
    return [s.d * g for g in gens]


def is_plus_plus_minus_avoiding(s: SemigroupDescriptor) -> bool:
    """Whether n, n+1 in s always forces n+2 in s.

    Beyond the conductor the implication is automatic, and a scaled
    semigroup with d >= 2 has no two consecutive members at all.
    """
    if s.kind in ("zero", "all") or s.d >= 2:
        return True
    core = s.core
    for n in range(core.conductor + 1):
        if n in core and (n + 1) in core and (n + 2) not in core:
            return False
    return True


def _check_closure(e: EventuallyPeriodicSet, bound: int) -> None:
    if 0 not in e:
        raise ValueError("not a semigroup: 0 is missing")
    mask = e.bitmask(bound)
    gaps = ((1 << (bound + 1)) - 1) & ~mask
    for m in e.members_up_to(bound):
        if m == 0:
            continue
        bad = (mask << m) & gaps
        if bad:
            total = (bad & -bad).bit_length() - 1
            raise NotASemigroupError(m, total - m, total)


def to_descriptor(e: EventuallyPeriodicSet) -> SemigroupDescriptor:
    """Canonical SemigroupDescriptor equal to e as a set.

    Verifies 0 in e and additive closure up to 2 * (threshold + period),
    raising NotASemigroupError with a witness pair otherwise.
    """
    bound = 2 * (e.threshold + e.period)
    _check_closure(e, bound)
    g = e.gcd_content()
    if g == 0:
        return SemigroupDescriptor.zero()
    core_eps = e.unscale(g)
    if core_eps.period != 1 or core_eps.residues != frozenset({0}):
        raise AssertionError("closed set with content gcd 1 must be numerical")
    core = NumericalCore(tuple(sorted(core_eps.exceptional)), core_eps.threshold)
    return SemigroupDescriptor.scaled(g, core)


def descriptor_to_set(s: SemigroupDescriptor) -> EventuallyPeriodicSet:
    """The EventuallyPeriodicSet with the same members as s."""
    if s.kind == "zero":
        return EventuallyPeriodicSet.only_zero()
    if s.kind == "all":
        return EventuallyPeriodicSet.naturals()
    core_eps = EventuallyPeriodicSet(
        frozenset(s.core.members), s.core.conductor, 1, frozenset({0})
    )
    return core_eps.scale(s.d)
