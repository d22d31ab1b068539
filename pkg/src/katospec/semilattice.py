"""Complete join semilattice structure on based spaces and the universal semilattice."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import bits
from .bits import Mask
from .errors import CarrierTooLarge, EmptyFamily, ImageNotPrime, NotPrime
from .monoid import FiniteMonoid, is_prime_ideal, spec, validate_monoid
from .space import BasedSpace, FinitePoset, specialization_order

MAX_SUP_TABLE = 16


@dataclass(frozen=True)
class JoinStructure:
    poset: FinitePoset
    sup_table: tuple = field(repr=False)

    def sup(self, a: Mask) -> int:
        return self.sup_table[a]


@dataclass(frozen=True)
class MCJSWitness:
    based: BasedSpace
    join: JoinStructure

    def sup(self, a: Mask) -> int:
        return self.join.sup_table[a]


@dataclass(frozen=True)
class MCJSFailure:
    """Why a based space is not M-complete: a subset without a supremum,
    or a pair ``(A, U)`` where ``A <= U`` and ``sup(A) in U`` disagree."""

    subset: Mask
    base_member: Optional[Mask] = None


def join_structure(p: FinitePoset):
    """Tabulate suprema of every subset, or return the first subset lacking one."""
    if p.size > MAX_SUP_TABLE:
        raise CarrierTooLarge(f"sup table limited to {MAX_SUP_TABLE} points")
    least = p.lub(0)
    if least is None:
        return None, 0
    join = [[None] * p.size for _ in range(p.size)]
    for x in range(p.size):
        for y in range(x, p.size):
            j = p.lub(1 << x | 1 << y)
            if j is None:
                return None, 1 << x | 1 << y
            join[x][y] = join[y][x] = j
    table = [least] * (1 << p.size)
    for a in range(1, 1 << p.size):
        low = (a & -a).bit_length() - 1
        table[a] = join[table[a & (a - 1)]][low]
    return JoinStructure(p, tuple(table)), None


def check_mcjs(a: BasedSpace):
    """Return ``(witness, None)`` if ``a`` is M-complete, else ``(None, failure)``."""
    p = specialization_order(a.space)
    join, missing = join_structure(p)
    if join is None:
        return None, MCJSFailure(missing)
    for u in a.base:
        for s in range(1 << p.size):
            if bits.subset(s, u) != bool(u >> join.sup_table[s] & 1):
                return None, MCJSFailure(s, u)
    return MCJSWitness(a, join), None


@dataclass(frozen=True)
class UniversalSemilattice:
    """The monoid ``(B, &)``; ``legend[i]`` is the base mask carried by element ``i``."""

    monoid: FiniteMonoid
    legend: tuple

    def to_json(self) -> dict:
        doc = self.monoid.to_json()
        doc["legend"] = [bits.to_list(u) for u in self.legend]
        return doc


def universal_semilattice(base) -> UniversalSemilattice:
    members = tuple(sorted(set(base)))
    index = {u: i for i, u in enumerate(members)}
    table = [[index[u & v] for v in members] for u in members]
    unit = index[max(members)]
    return UniversalSemilattice(validate_monoid(len(members), unit, table), members)


def phi(a: BasedSpace, us: Optional[UniversalSemilattice] = None) -> tuple:
    """``x -> {U in B : x not in U}`` as masks over the carrier of ``(B, &)``."""
    us = us or universal_semilattice(a.base)
    out = []
    for x in range(a.size):
        p = bits.mask_of(i for i, u in enumerate(us.legend) if not u >> x & 1)
        if not is_prime_ideal(us.monoid, p):
            raise ImageNotPrime(f"phi({x}) is not a prime of (B, &)")
        out.append(p)
    return tuple(out)


def theta(w: MCJSWitness, p: Mask, us: Optional[UniversalSemilattice] = None) -> int:
    """Supremum of the intersection of all base members outside ``p``."""
    us = us or universal_semilattice(w.based.base)
    acc = w.based.space.whole
    for i, u in enumerate(us.legend):
        if not p >> i & 1:
            acc &= u
    return w.sup(acc)


def check_spec_homeomorphism(a: BasedSpace) -> bool:
    """phi is a bijection onto spec((B, &)) sending each V in B onto D(V)."""
    us = universal_semilattice(a.base)
    try:
        images = phi(a, us)
    except ImageNotPrime:
        return False
    target = spec(us.monoid)
    if sorted(images) != list(target.points) or len(set(images)) != len(images):
        return False
    where = {p: i for i, p in enumerate(target.points)}
    for v_idx, v in enumerate(us.legend):
        phi_v = bits.mask_of(where[images[x]] for x in bits.members(v))
        if phi_v != target.d_base[v_idx]:
            return False
    return True


def weakprop2_prime(a: BasedSpace, family, us: Optional[UniversalSemilattice] = None) -> Mask:
    """Base members containing no finite intersection of ``family``, as a prime of ``(B, &)``."""
    if not family:
        raise EmptyFamily("family must be nonempty")
    us = us or universal_semilattice(a.base)
    finite_meets = set(family)
    frontier = list(finite_meets)
    while frontier:
        new = []
        for c in frontier:
            for f in family:
                d = c & f
                if d not in finite_meets:
                    finite_meets.add(d)
                    new.append(d)
        frontier = new
    p = bits.mask_of(
        i
        for i, u in enumerate(us.legend)
        if not any(bits.subset(c, u) for c in finite_meets)
    )
    if not is_prime_ideal(us.monoid, p):
        raise NotPrime("set of non-containing base members is not prime")
    return p
