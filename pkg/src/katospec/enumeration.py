"""Exhaustive generation of small commutative monoids, posets and based spaces."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import InputError
from .monoid import FiniteMonoid
from .space import BasedSpace, FinitePoset, monoidal_bases, poset_canonical_form

MAX_MONOID_ORDER = 5
MAX_POSET_SIZE = 6


class OrderTooLarge(InputError):
    pass


class SizeTooLarge(InputError):
    pass


@lru_cache(maxsize=None)
def labeled_monoids(order: int) -> tuple:
    """Every commutative monoid table on ``0..order-1`` with unit 0, lexicographically.

    Only cells ``(i, j)`` with ``1 <= i <= j`` are free. After each assignment,
    every associativity triple whose four products are already defined is
    checked, so dead branches are cut early. With commutativity, triples with
    ``a <= c`` suffice.
    """
    if order < 1:
        raise OrderTooLarge(f"order must be positive, got {order}")
    if order > MAX_MONOID_ORDER:
        raise OrderTooLarge(f"order {order} exceeds {MAX_MONOID_ORDER}")
    n = order
    t = [[-1] * n for _ in range(n)]
    for i in range(n):
        t[0][i] = t[i][0] = i
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    triples = [(a, b, c) for a in range(1, n) for b in range(1, n) for c in range(a, n)]
    out = []

    def consistent():
        for a, b, c in triples:
            ab, bc = t[a][b], t[b][c]
            if ab < 0 or bc < 0:
                continue
            left, right = t[ab][c], t[a][bc]
            if left >= 0 and right >= 0 and left != right:
                return False
        return True

    def search(k):
        if k == len(cells):
            if _associative(t, n):
                out.append(tuple(tuple(r) for r in t))
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = t[j][i] = v
            if consistent():
                search(k + 1)
        t[i][j] = t[j][i] = -1

    search(0)
    return tuple(out)


def _associative(t, n) -> bool:
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def monoid_canonical_form(table) -> tuple:
    """Least relabelled table over permutations fixing the unit at 0."""
    n = len(table)
    best = None
    for rest in itertools.permutations(range(1, n)):
        perm = (0, *rest)
        new = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                new[perm[a]][perm[b]] = perm[table[a][b]]
        form = tuple(tuple(r) for r in new)
        if best is None or form < best:
            best = form
    return best


@lru_cache(maxsize=None)
def enumerate_monoids(order: int) -> tuple:
    """Commutative monoids of the given order up to isomorphism, in canonical form."""
    forms = sorted({monoid_canonical_form(t) for t in labeled_monoids(order)})
    return tuple(FiniteMonoid(order, 0, f) for f in forms)


@lru_cache(maxsize=None)
def enumerate_posets(size: int) -> tuple:
    """Posets on ``size`` points up to isomorphism, each in canonical labelling.

    Every poset arises from a smaller one by adjoining a maximal element
    above some down-set, so the classes of size ``n`` are grown from those
    of size ``n - 1`` and deduplicated by canonical form.
    """
    if size < 0 or size > MAX_POSET_SIZE:
        raise SizeTooLarge(f"size {size} outside 0..{MAX_POSET_SIZE}")
    if size == 0:
        return (FinitePoset(0, ()),)
    forms = set()
    for p in enumerate_posets(size - 1):
        for d in p.down_sets():
            q = FinitePoset(size, (*p.down, d | 1 << (size - 1)))
            forms.add(poset_canonical_form(q))
    return tuple(FinitePoset(n, down) for n, down in sorted(forms))


def based_spaces(size: int, max_free: int = 16) -> list:
    """``(poset, BasedSpace)`` for every poset class of ``size`` and every monoidal base."""
    out = []
    for p in enumerate_posets(size):
        x = p.to_space()
        for b in monoidal_bases(x, max_free=max_free):
            out.append((p, BasedSpace(x, b)))
    return out
