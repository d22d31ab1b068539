"""The exponential completion E(X, B) of a based finite space.

A class ``[A]`` of the power set is identified with its filter
``{U in B : A <= U}``. Membership of ``A`` in any open of the power-set
topology is decided by membership in the generators ``P(U)``, and
``P(U) & P(V) = P(U & V)``, so two subsets are equivalent exactly when
their filters agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from . import bits
from .bits import Mask
from .errors import BaseTooLarge, NotMMorphism, TargetNotMCJS
from .semilattice import MCJSWitness, check_mcjs
from .space import BasedSpace, image, is_m_morphism


@dataclass(frozen=True)
class ExpPoint:
    filter: Mask  # over base indices of the source
    rep: Mask  # largest representative subset of the source


@dataclass(frozen=True)
class ExpSpace:
    source: BasedSpace
    points: tuple
    tilde_base: tuple  # per source base index, mask over class indices
    i_map: tuple

    @cached_property
    def based(self) -> BasedSpace:
        return BasedSpace.generated(len(self.points), self.tilde_base)

    @cached_property
    def by_filter(self) -> dict:
        return {p.filter: k for k, p in enumerate(self.points)}

    @property
    def bottom(self) -> int:
        """Index of ``[empty set]``."""
        return self.by_filter[bits.full(len(self.source.base))]

    def to_json(self) -> dict:
        return {
            "classes": [
                {"filter": bits.to_list(p.filter), "rep": bits.to_list(p.rep)} for p in self.points
            ],
            "tilde_base": [bits.to_list(t) for t in self.tilde_base],
            "i": list(self.i_map),
        }


def _filter_of(base: Sequence[Mask], a: Mask) -> Mask:
    return bits.mask_of(i for i, u in enumerate(base) if bits.subset(a, u))


def exponential(a: BasedSpace) -> ExpSpace:
    base = a.base
    if len(base) > bits.MAX_WIDTH:
        raise BaseTooLarge(f"{len(base)} base members exceeds {bits.MAX_WIDTH}")
    top = bits.full(len(base))
    singles = [_filter_of(base, 1 << x) for x in range(a.size)]
    # filter([A]) is the intersection of its points' filters; close under that.
    filters = {top}
    frontier = [top]
    while frontier:
        new = []
        for f in frontier:
            for s in singles:
                g = f & s
                if g not in filters:
                    filters.add(g)
                    new.append(g)
        frontier = new
    points = []
    for f in filters:
        rep = bits.mask_of(x for x in range(a.size) if bits.subset(f, singles[x]))
        points.append(ExpPoint(f, rep))
    points.sort(key=lambda p: (bits.popcount(p.rep), p.rep))
    tilde = tuple(
        bits.mask_of(k for k, p in enumerate(points) if p.filter >> i & 1) for i in range(len(base))
    )
    index = {p.filter: k for k, p in enumerate(points)}
    i_map = tuple(index[s] for s in singles)
    return ExpSpace(a, tuple(points), tilde, i_map)


def class_of(e: ExpSpace, a: Mask) -> int:
    """Index of the class ``[a]``."""
    return e.by_filter[_filter_of(e.source.base, a)]


def e_on_map(
    f: Sequence[int], src: BasedSpace, dst: BasedSpace,
    e_src: Optional[ExpSpace] = None, e_dst: Optional[ExpSpace] = None,
) -> tuple:
    """``E(f)([A]) = [f(A)]`` as a map on class indices."""
    if not is_m_morphism(f, src, dst):
        raise NotMMorphism("preimage of a target base member is not a source base member")
    e_src = e_src or exponential(src)
    e_dst = e_dst or exponential(dst)
    return tuple(class_of(e_dst, image(p.rep, f)) for p in e_src.points)


def hat_theta(
    theta: Sequence[int], src: BasedSpace, target: MCJSWitness, e_src: Optional[ExpSpace] = None,
) -> tuple:
    """The extension ``[A] -> sup(theta(A))`` of ``theta`` along ``i``."""
    if target is None:
        raise TargetNotMCJS("target has no M-complete join semilattice witness")
    if not is_m_morphism(theta, src, target.based):
        raise NotMMorphism("theta is not a morphism of based spaces")
    e_src = e_src or exponential(src)
    return tuple(target.sup(image(p.rep, theta)) for p in e_src.points)


def check_idempotent(a: BasedSpace) -> bool:
    """``i: E(A) -> E(E(A))`` is an isomorphism of based spaces."""
    e1 = exponential(a)
    e2 = exponential(e1.based)
    i = e2.i_map
    if sorted(i) != list(range(len(e2.points))):
        return False
    inverse = [0] * len(i)
    for k, v in enumerate(i):
        inverse[v] = k
    return is_m_morphism(i, e1.based, e2.based) and is_m_morphism(inverse, e2.based, e1.based)


def exp_mcjs(e: ExpSpace) -> MCJSWitness:
    w, failure = check_mcjs(e.based)
    if w is None:
        raise AssertionError(f"exponential is not M-complete: {failure}")
    return w
