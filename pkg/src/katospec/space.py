"""Finite topological spaces, monoidal bases and specialization posets.

Orientation used throughout: ``x <= y`` iff every open set containing ``y``
also contains ``x``, equivalently ``y`` lies in the closure of ``{x}``.
Open sets are then exactly the down-sets, and the blob (minimal open
neighbourhood) of ``a`` is ``{x : x <= a}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from . import bits
from .bits import Mask
from .errors import (
    CarrierTooLarge,
    InputError,
    NoTop,
    NotMeetSemilattice,
    NotMonoidalBase,
    NotT0,
    SearchSpaceTooLarge,
)


def _intersection_closure(family: Iterable[Mask]) -> set:
    closed = set(family)
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                c = a & b
                if c not in closed:
                    closed.add(c)
                    new.append(c)
        frontier = new
    return closed


def _union_closure(family: Iterable[Mask]) -> set:
    closed = set(family)
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                c = a | b
                if c not in closed:
                    closed.add(c)
                    new.append(c)
        frontier = new
    return closed


def image(m: Mask, mapping: Sequence[int]) -> Mask:
    out = 0
    for i in bits.members(m):
        out |= 1 << mapping[i]
    return out


def preimage(m: Mask, mapping: Sequence[int]) -> Mask:
    out = 0
    for i, j in enumerate(mapping):
        if m >> j & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class FinitePoset:
    """A partial order on ``0..size-1``; ``down[y]`` is the mask of all ``x <= y``."""

    size: int
    down: tuple

    def __post_init__(self):
        for y, d in enumerate(self.down):
            if not d >> y & 1:
                raise InputError(f"relation not reflexive at {y}")
            for x in bits.members(d):
                if x != y and self.down[x] >> y & 1:
                    raise InputError(f"relation not antisymmetric at ({x}, {y})")
                if not bits.subset(self.down[x], d):
                    raise InputError(f"relation not transitive through {x} <= {y}")

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[Sequence[int]]) -> "FinitePoset":
        """Reflexive-transitive closure of the pairs ``(x, y)`` meaning ``x <= y``."""
        down = [1 << y for y in range(size)]
        for x, y in pairs:
            if not (0 <= x < size and 0 <= y < size):
                raise InputError(f"pair ({x}, {y}) outside carrier")
            down[y] |= 1 << x
        changed = True
        while changed:
            changed = False
            for y in range(size):
                acc = down[y]
                for x in bits.members(down[y]):
                    acc |= down[x]
                if acc != down[y]:
                    down[y] = acc
                    changed = True
        return cls(size, tuple(down))

    def le(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    @cached_property
    def up(self) -> tuple:
        up = [0] * self.size
        for y, d in enumerate(self.down):
            for x in bits.members(d):
                up[x] |= 1 << y
        return tuple(up)

    @cached_property
    def top(self) -> Optional[int]:
        f = bits.full(self.size)
        return next((y for y in range(self.size) if self.down[y] == f), None)

    @cached_property
    def bottom(self) -> Optional[int]:
        f = bits.full(self.size)
        return next((x for x in range(self.size) if self.up[x] == f), None)

    @property
    def has_top(self) -> bool:
        return self.top is not None

    def pairs(self, strict: bool = True) -> list:
        return [
            (x, y)
            for y in range(self.size)
            for x in bits.members(self.down[y])
            if not (strict and x == y)
        ]

    def covers(self) -> list:
        """Hasse diagram edges ``(x, y)`` with ``x < y`` and nothing strictly between."""
        out = []
        for x, y in self.pairs():
            between = self.up[x] & self.down[y] & ~(1 << x | 1 << y)
            if not between:
                out.append((x, y))
        return sorted(out)

    def upper_bounds(self, a: Mask) -> Mask:
        ub = bits.full(self.size)
        for x in bits.members(a):
            ub &= self.up[x]
        return ub

    def lub(self, a: Mask) -> Optional[int]:
        ub = self.upper_bounds(a)
        for y in bits.members(ub):
            if bits.subset(ub, self.up[y]):
                return y
        return None

    def glb(self, a: Mask) -> Optional[int]:
        lb = bits.full(self.size)
        for x in bits.members(a):
            lb &= self.down[x]
        for y in bits.members(lb):
            if bits.subset(lb, self.down[y]):
                return y
        return None

    def down_sets(self) -> list:
        return sorted(_union_closure([0, *self.down]))

    def to_space(self) -> "FiniteSpace":
        """The space whose open sets are the down-sets of this order."""
        return FiniteSpace(self.size, tuple(self.down_sets()))

    def invariants(self) -> list:
        return [(bits.popcount(self.down[x]), bits.popcount(self.up[x])) for x in range(self.size)]

    def relabel(self, perm: Sequence[int]) -> "FinitePoset":
        """Poset on the same size with point ``x`` renamed ``perm[x]``."""
        down = [0] * self.size
        for y in range(self.size):
            down[perm[y]] = image(self.down[y], perm)
        return FinitePoset(self.size, tuple(down))


@dataclass(frozen=True)
class FiniteSpace:
    size: int
    opens: tuple

    def __post_init__(self):
        if self.size > bits.MAX_WIDTH:
            raise CarrierTooLarge(f"{self.size} points exceeds {bits.MAX_WIDTH}")

    @property
    def whole(self) -> Mask:
        return bits.full(self.size)

    @cached_property
    def open_set(self) -> frozenset:
        return frozenset(self.opens)

    def is_open(self, m: Mask) -> bool:
        return m in self.open_set

    @cached_property
    def blob(self) -> tuple:
        """``blob[a]`` is the intersection of all opens containing ``a``."""
        out = []
        for a in range(self.size):
            acc = self.whole
            for u in self.opens:
                if u >> a & 1:
                    acc &= u
            out.append(acc)
        return tuple(out)

    @cached_property
    def closure(self) -> tuple:
        """``closure[y]`` is the closure of ``{y}``, i.e. ``{z : y in blob(z)}``."""
        return tuple(
            bits.mask_of(z for z in range(self.size) if self.blob[z] >> y & 1)
            for y in range(self.size)
        )

    def closed_sets(self) -> list:
        return sorted(self.whole ^ u for u in self.opens)


def from_open_family(size: int, generators: Iterable[Mask]) -> FiniteSpace:
    """Topology on ``size`` points generated by ``generators`` (a subbase)."""
    if size > bits.MAX_WIDTH:
        raise CarrierTooLarge(f"{size} points exceeds {bits.MAX_WIDTH}")
    whole = bits.full(size)
    gens = list(generators)
    for g in gens:
        if g & ~whole or g < 0:
            raise InputError(f"mask {g:#x} has points outside a {size}-point carrier")
    opens = _union_closure(_intersection_closure([whole, *gens]) | {0})
    return FiniteSpace(size, tuple(sorted(opens)))


def is_t0(x: FiniteSpace) -> bool:
    b = x.blob
    return all(not (b[i] >> j & 1 and b[j] >> i & 1) for i in range(x.size) for j in range(i))


def specialization_order(x: FiniteSpace) -> FinitePoset:
    if not is_t0(x):
        raise NotT0("space is not T0")
    return FinitePoset(x.size, x.blob)


def blobs(x: FiniteSpace) -> tuple:
    """Return ``(blob per point, sorted distinct open blobs)``."""
    per_point = x.blob
    return per_point, tuple(sorted({b for b in per_point if x.is_open(b)}))


def _irreducible(x: FiniteSpace, c: Mask) -> bool:
    if not c:
        return False
    meeting = [u for u in x.opens if u & c]
    return all(u & v & c for u in meeting for v in meeting)


def irreducible_closed_sets(x: FiniteSpace) -> list:
    return [c for c in x.closed_sets() if _irreducible(x, c)]


def intersections_of_irreducibles_are_point_closures(x: FiniteSpace):
    """Check every intersection of irreducible closed sets is a point closure.

    Returns ``(ok, counterexample)`` where the counterexample is the list of
    irreducible closed sets whose intersection is not the closure of any
    point. The empty family counts; its intersection is the whole space.
    """
    if not is_t0(x):
        raise NotT0("space is not T0")
    closures = set(x.closure)
    witness = {x.whole: ()}
    frontier = [x.whole]
    irr = irreducible_closed_sets(x)
    while frontier:
        new = []
        for c in frontier:
            for k in irr:
                d = c & k
                if d not in witness:
                    witness[d] = witness[c] + (k,)
                    new.append(d)
        frontier = new
    for c in sorted(witness):
        if c not in closures:
            return False, list(witness[c])
    return True, None


def soberify(p: FinitePoset) -> FiniteSpace:
    """Space of irreducible closed sets of ``p`` under its down-set topology."""
    if not p.has_top:
        raise NoTop("poset has no greatest element")
    for a, b in itertools.combinations(range(p.size), 2):
        if p.glb(1 << a | 1 << b) is None:
            raise NotMeetSemilattice(f"{a} and {b} have no meet")
    base = p.to_space()
    generic = {c: y for y, c in reversed(list(enumerate(base.closure)))}
    points = sorted(irreducible_closed_sets(base), key=lambda c: (generic.get(c, p.size), c))
    opens = {bits.mask_of(i for i, c in enumerate(points) if c & u) for u in base.opens}
    return FiniteSpace(len(points), tuple(sorted(opens)))


def isomorphisms(p: FinitePoset, q: FinitePoset) -> Iterator[tuple]:
    """Order isomorphisms ``p -> q`` in lexicographic order of the image tuple."""
    if p.size != q.size:
        return
    inv_p, inv_q = p.invariants(), q.invariants()
    if sorted(inv_p) != sorted(inv_q):
        return
    n = p.size
    mapping = [-1] * n
    used = [False] * n

    def extend(x):
        if x == n:
            yield tuple(mapping)
            return
        for y in range(n):
            if used[y] or inv_q[y] != inv_p[x]:
                continue
            ok = True
            for z in range(x):
                w = mapping[z]
                if p.le(z, x) != q.le(w, y) or p.le(x, z) != q.le(y, w):
                    ok = False
                    break
            if ok:
                mapping[x] = y
                used[y] = True
                yield from extend(x + 1)
                used[y] = False
        mapping[x] = -1

    yield from extend(0)


def homeomorphic(x: FiniteSpace, y: FiniteSpace) -> Optional[tuple]:
    """Lexicographically least homeomorphism ``x -> y``, or ``None``."""
    if x.size != y.size or len(x.opens) != len(y.opens):
        return None
    return next(isomorphisms(specialization_order(x), specialization_order(y)), None)


@dataclass(frozen=True)
class BasedSpace:
    """A nonempty T0 space paired with a monoidal base (an object of the category)."""

    space: FiniteSpace
    base: tuple

    def __post_init__(self):
        x = self.space
        if x.size == 0:
            raise InputError("a based space needs at least one point")
        if not is_t0(x):
            raise NotT0("space is not T0")
        members = set(self.base)
        if tuple(sorted(members)) != self.base:
            object.__setattr__(self, "base", tuple(sorted(members)))
        if x.whole not in members:
            raise NotMonoidalBase("base does not contain the whole space")
        for u in members:
            if not x.is_open(u):
                raise NotMonoidalBase(f"base member {bits.to_list(u)} is not open")
        for u, v in itertools.combinations(members, 2):
            if u & v not in members:
                raise NotMonoidalBase(
                    f"{bits.to_list(u)} & {bits.to_list(v)} is missing from the base"
                )
        if set(from_open_family(x.size, members).opens) != x.open_set:
            raise NotMonoidalBase("base does not generate the topology")

    @classmethod
    def generated(cls, size: int, base: Iterable[Mask]) -> "BasedSpace":
        base = list(base)
        return cls(from_open_family(size, base), tuple(sorted(set(base))))

    @property
    def size(self) -> int:
        return self.space.size

    @cached_property
    def index(self) -> dict:
        return {u: i for i, u in enumerate(self.base)}


def is_m_morphism(f: Sequence[int], a: BasedSpace, b: BasedSpace) -> bool:
    """``f^-1(V)`` lies in the base of ``a`` for every ``V`` in the base of ``b``."""
    return all(preimage(v, f) in a.index for v in b.base)


def m_isomorphisms(a: BasedSpace, b: BasedSpace) -> Iterator[tuple]:
    if a.size != b.size or len(a.base) != len(b.base):
        return
    target = set(b.base)
    for f in isomorphisms(specialization_order(a.space), specialization_order(b.space)):
        if all(image(u, f) in target for u in a.base):
            yield f


def m_isomorphic(a: BasedSpace, b: BasedSpace) -> bool:
    return next(m_isomorphisms(a, b), None) is not None


def monoidal_bases(x: FiniteSpace, max_free: int = 16, max_members: Optional[int] = None) -> list:
    """Every monoidal base of ``x``, each as a sorted tuple of masks.

    Any base of a finite space must contain every open blob, so the search
    starts from the intersection closure of the blobs and the whole space and
    decides the remaining opens one at a time. ``max_members`` drops bases
    larger than the cap; without a cap the number of undecided opens is
    limited to ``max_free``.
    """
    if not is_t0(x):
        raise NotT0("space is not T0")
    required = _intersection_closure({*blobs(x)[1], x.whole})
    free = [u for u in x.opens if u not in required]
    cap = len(x.opens) if max_members is None else max_members
    if len(required) > cap:
        return []
    if max_members is None and len(free) > max_free:
        raise SearchSpaceTooLarge(f"{len(free)} optional opens exceeds {max_free}")
    out = []

    def search(i, family, excluded):
        if len(family) > cap:
            return
        if i == len(free):
            out.append(tuple(sorted(family)))
            return
        u = free[i]
        if u in family:
            search(i + 1, family, excluded)
            return
        search(i + 1, family, excluded | {u})
        grown = _intersection_closure(family | {u})
        if not grown & excluded:
            search(i + 1, grown, excluded)

    search(0, frozenset(required), frozenset())
    return sorted(out)


def poset_canonical_form(p: FinitePoset) -> tuple:
    """Minimum relabelled down-set tuple over invariant-respecting relabellings."""
    inv = p.invariants()
    order = sorted(range(p.size), key=lambda x: inv[x])
    groups = [list(g) for _, g in itertools.groupby(order, key=lambda x: inv[x])]
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        seq = [x for g in choice for x in g]
        perm = [0] * p.size
        for new, old in enumerate(seq):
            perm[old] = new
        form = p.relabel(perm).down
        if best is None or form < best:
            best = form
    return (p.size, best)


def to_dot(p: FinitePoset, labels: Optional[Sequence[str]] = None, name: str = "order") -> str:
    """Hasse diagram in DOT; edges run from smaller to larger points."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in range(p.size):
        label = labels[x] if labels else str(x)
        lines.append(f'  {x} [label="{label}"];')
    for x, y in p.covers():
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
