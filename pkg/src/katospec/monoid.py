"""Finite commutative monoids, their prime ideals and Kato spectra."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from . import bits
from .bits import Mask
from .errors import (
    BadUnit,
    CarrierTooLarge,
    EmptyFamily,
    EntryOutOfRange,
    NotAssociative,
    NotCommutative,
)
from .space import BasedSpace, FinitePoset, FiniteSpace, from_open_family


@dataclass(frozen=True)
class FiniteMonoid:
    order: int
    unit: int
    table: tuple

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def multiples(self) -> tuple:
        """``multiples[x]`` is the principal ideal ``xM`` as a mask."""
        return tuple(bits.mask_of(row) for row in self.table)

    @cached_property
    def divisors(self) -> tuple:
        """``divisors[x]`` is ``{y : y*t = x for some t}``."""
        out = [0] * self.order
        for y, row in enumerate(self.table):
            for z in row:
                out[z] |= 1 << y
        return tuple(out)

    def ideal_generated(self, s: Mask) -> Mask:
        acc = 0
        for x in bits.members(s):
            acc |= self.multiples[x]
        return acc

    def to_json(self) -> dict:
        return {"order": self.order, "unit": self.unit, "table": [list(r) for r in self.table]}


def validate_monoid(order: int, unit: int, table: Sequence[Sequence[int]]) -> FiniteMonoid:
    """Check shape, range, unit, commutativity and associativity, in that order."""
    if not isinstance(order, int) or order < 1:
        raise EntryOutOfRange(f"order must be a positive integer, got {order!r}")
    if order > bits.MAX_WIDTH:
        raise CarrierTooLarge(f"order {order} exceeds {bits.MAX_WIDTH}")
    if len(table) != order or any(len(row) != order for row in table):
        raise EntryOutOfRange(f"table is not {order}x{order}")
    if not 0 <= unit < order:
        raise EntryOutOfRange(f"unit {unit} outside 0..{order - 1}")
    for row in table:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < order:
                raise EntryOutOfRange(f"entry {v!r} outside 0..{order - 1}")
    t = tuple(tuple(row) for row in table)
    for i in range(order):
        if t[unit][i] != i or t[i][unit] != i:
            raise BadUnit(i)
    for i in range(order):
        for j in range(i):
            if t[i][j] != t[j][i]:
                raise NotCommutative(j, i)
    for i in range(order):
        ti = t[i]
        for j in range(order):
            tij = t[ti[j]]
            tj = t[j]
            for k in range(order):
                if tij[k] != ti[tj[k]]:
                    raise NotAssociative(i, j, k)
    return FiniteMonoid(order, unit, t)


def monoid_from_json(doc: dict) -> FiniteMonoid:
    return validate_monoid(doc["order"], doc["unit"], doc["table"])


def is_prime_ideal(m: FiniteMonoid, s: Mask) -> bool:
    if s >> m.unit & 1:
        return False
    for x in bits.members(s):
        if not bits.subset(m.multiples[x], s):
            return False
    comp = bits.full(m.order) & ~s
    for x in bits.members(comp):
        row = m.table[x]
        for y in bits.members(comp):
            if s >> row[y] & 1:
                return False
    return True


def _face_closure(m: FiniteMonoid, s: Mask) -> Mask:
    """Smallest submonoid containing ``s`` and 1 that is closed under divisors."""
    s |= 1 << m.unit
    while True:
        grown = s
        for x in bits.members(s):
            grown |= m.divisors[x]
            row = m.table[x]
            for y in bits.members(s):
                grown |= 1 << row[y]
        if grown == s:
            return s
        s = grown


def enumerate_primes(m: FiniteMonoid) -> list:
    """All prime ideals, sorted by mask value.

    The search runs over complements: a prime's complement is a submonoid
    whose complement is an ideal, i.e. a divisor-closed submonoid. Each branch
    either forces an element into the complement (closing under products and
    divisors) or into the ideal (closing under multiples).
    """
    whole = bits.full(m.order)
    out = []

    def search(keep, drop):
        keep = _face_closure(m, keep)
        drop = m.ideal_generated(drop)
        if keep & drop:
            return
        undecided = whole & ~(keep | drop)
        if not undecided:
            out.append(drop)
            return
        x = (undecided & -undecided).bit_length() - 1
        search(keep | 1 << x, drop)
        search(keep, drop | 1 << x)

    search(0, 0)
    return sorted(out)


@dataclass(frozen=True)
class SpecSpace:
    monoid: FiniteMonoid
    points: tuple
    d_base: tuple

    @cached_property
    def space(self) -> FiniteSpace:
        return from_open_family(len(self.points), self.d_base)

    @cached_property
    def based(self) -> BasedSpace:
        return BasedSpace(self.space, tuple(sorted(set(self.d_base))))

    @cached_property
    def order(self) -> FinitePoset:
        """Inclusion of prime ideals."""
        n = len(self.points)
        down = tuple(
            bits.mask_of(i for i in range(n) if bits.subset(self.points[i], self.points[j]))
            for j in range(n)
        )
        return FinitePoset(n, down)

    def D(self, f: int) -> Mask:
        return self.d_base[f]

    def to_json(self) -> dict:
        return {
            "points": [bits.to_list(p) for p in self.points],
            "d_base": {str(f): bits.to_list(d) for f, d in enumerate(self.d_base)},
            "order": [list(pair) for pair in self.order.pairs()],
        }


def spec(m: FiniteMonoid) -> SpecSpace:
    points = tuple(enumerate_primes(m))
    d_base = tuple(
        bits.mask_of(i for i, p in enumerate(points) if not p >> f & 1) for f in range(m.order)
    )
    s = SpecSpace(m, points, d_base)
    s.based  # validates that the D(f) form a monoidal base
    return s


def closed_sets(s: SpecSpace) -> list:
    """Pairs ``(I, V)`` for every closed set ``V``.

    ``I`` is the intersection of the primes in ``V`` and satisfies
    ``V = {p : p contains I}``. The empty closed set has no such ideal among
    intersections of primes, so it is paired with ``None``.
    """
    out = []
    whole = bits.full(s.monoid.order)
    for v in s.space.closed_sets():
        if not v:
            out.append((None, 0))
            continue
        ideal = whole
        for i in bits.members(v):
            ideal &= s.points[i]
        recovered = bits.mask_of(i for i, p in enumerate(s.points) if bits.subset(ideal, p))
        assert recovered == v, "closed set is not V(I) for its own ideal"
        out.append((ideal, v))
    return out


@dataclass(frozen=True)
class StarWitness:
    contained: bool
    indices: Optional[tuple] = None
    witness_prime: Optional[Mask] = None


def star_witness(m: FiniteMonoid, family: Sequence[int], g: int) -> StarWitness:
    """Decide ``D(f_1) & D(f_2) & ... <= D(g)`` constructively.

    Builds the saturation ``q = {h : t*h is a product of family members}``.
    If ``g`` is in ``q`` the family members used in that product give a finite
    subfamily; otherwise ``M - q`` is a prime in every ``D(f)`` but not in ``D(g)``.
    """
    if not family:
        raise EmptyFamily("family must be nonempty")
    # Products of family members, each tagged with one index set that produces it;
    # smaller sets replace larger ones so the returned subfamily is short, not minimal.
    gens = {m.unit: frozenset()}
    frontier = [m.unit]
    while frontier:
        new = []
        for h in frontier:
            for idx, f in enumerate(family):
                p = m.mul(h, f)
                used = gens[h] | {idx}
                old = gens.get(p)
                if old is None or (len(used), sorted(used)) < (len(old), sorted(old)):
                    gens[p] = used
                    new.append(p)
        frontier = new
    q = 0
    for p in gens:
        q |= m.divisors[p]
    if not q >> g & 1:
        return StarWitness(False, witness_prime=bits.full(m.order) & ~q)
    best = None
    for p, used in gens.items():
        if m.divisors[p] >> g & 1:
            key = (len(used), sorted(used))
            if best is None or key < best:
                best = key
    indices = tuple(best[1]) or (0,)
    return StarWitness(True, indices=indices)
