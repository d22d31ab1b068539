"""Finite products of Z/n: Zariski spectra versus spectra of the multiplicative monoid."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import bits
from .bits import Mask
from .errors import CarrierTooLarge, InputError
from .exponential import exponential
from .monoid import FiniteMonoid, spec, validate_monoid
from .space import BasedSpace, m_isomorphic


@dataclass(frozen=True)
class FiniteRing:
    factors: tuple

    def __post_init__(self):
        if not self.factors or any(not isinstance(n, int) or n < 2 for n in self.factors):
            raise InputError(f"moduli must be integers >= 2, got {list(self.factors)}")
        size = 1
        for n in self.factors:
            size *= n
        if size > bits.MAX_WIDTH:
            raise CarrierTooLarge(f"ring has {size} elements, more than {bits.MAX_WIDTH}")

    @cached_property
    def elements(self) -> tuple:
        return tuple(itertools.product(*(range(n) for n in self.factors)))

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def one(self) -> int:
        return self.index[tuple(1 for _ in self.factors)]

    def _op(self, op) -> tuple:
        return tuple(
            tuple(
                self.index[tuple(op(a, b) % n for a, b, n in zip(x, y, self.factors))]
                for y in self.elements
            )
            for x in self.elements
        )

    @cached_property
    def add(self) -> tuple:
        return self._op(lambda a, b: a + b)

    @cached_property
    def mul(self) -> tuple:
        return self._op(lambda a, b: a * b)

    def label(self, i: int) -> str:
        e = self.elements[i]
        return str(e[0]) if len(e) == 1 else "(" + ",".join(map(str, e)) + ")"


def ring_from_json(doc: dict) -> FiniteRing:
    return FiniteRing(tuple(doc["factors"]))


def ideals(r: FiniteRing) -> list:
    """All ideals: every ideal of a finite ring is a finite sum of principal ideals."""
    principal = {bits.mask_of(row) for row in r.mul}

    def ideal_sum(a: Mask, b: Mask) -> Mask:
        return bits.mask_of(r.add[x][y] for x in bits.members(a) for y in bits.members(b))

    found = set(principal)
    frontier = list(found)
    while frontier:
        new = []
        for a in frontier:
            for b in principal:
                c = ideal_sum(a, b)
                if c not in found:
                    found.add(c)
                    new.append(c)
        frontier = new
    return sorted(found)


def is_ring_prime(r: FiniteRing, p: Mask) -> bool:
    if p >> r.one & 1:
        return False
    return all(
        not p >> r.mul[x][y] & 1
        for x in range(r.size) if not p >> x & 1
        for y in range(r.size) if not p >> y & 1
    )


def ring_spec(r: FiniteRing) -> list:
    """Prime ideals, sorted by mask."""
    return [p for p in ideals(r) if is_ring_prime(r, p)]


def mult_monoid(r: FiniteRing) -> FiniteMonoid:
    return validate_monoid(r.size, r.one, r.mul)


def check_unions_of_primes(r: FiniteRing) -> bool:
    primes = ring_spec(r)
    unions = set()
    for k in range(len(primes) + 1):
        for fam in itertools.combinations(primes, k):
            acc = 0
            for p in fam:
                acc |= p
            unions.add(acc)
    return sorted(unions) == list(spec(mult_monoid(r)).points)


def zariski_based(r: FiniteRing) -> BasedSpace:
    """``Spec(R)`` with the base ``{D(f) : f in R}``."""
    primes = ring_spec(r)
    base = {bits.mask_of(i for i, p in enumerate(primes) if not p >> f & 1) for f in range(r.size)}
    return BasedSpace.generated(len(primes), base)


def check_exp_example(r: FiniteRing) -> bool:
    e = exponential(zariski_based(r))
    return m_isomorphic(e.based, spec(mult_monoid(r)).based)
