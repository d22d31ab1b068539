"""Subsets of a finite carrier stored as plain ints (bit i set <=> i in subset)."""

from typing import Iterable, Iterator

MAX_WIDTH = 64

Mask = int


def full(n: int) -> Mask:
    return (1 << n) - 1


def mask_of(items: Iterable[int]) -> Mask:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def members(m: Mask) -> Iterator[int]:
    i = 0
    while m:
        if m & 1:
            yield i
        m >>= 1
        i += 1


def to_list(m: Mask) -> list:
    return list(members(m))


def popcount(m: Mask) -> int:
    return bin(m).count("1")


def subset(a: Mask, b: Mask) -> bool:
    return a & ~b == 0


def submasks(m: Mask) -> Iterator[Mask]:
    """All submasks of ``m``, ascending."""
    s = 0
    while True:
        yield s
        if s == m:
            return
        s = (s - m) & m
