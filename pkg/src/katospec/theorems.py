"""Executable characterizations of monoid spectra on finite spaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import bits
from .errors import NotT0, SearchSpaceTooLarge
from .exponential import exponential
from .monoid import FiniteMonoid, spec
from .semilattice import check_mcjs, phi, universal_semilattice
from .space import (
    BasedSpace,
    FiniteSpace,
    blobs,
    homeomorphic,
    intersections_of_irreducibles_are_point_closures,
    irreducible_closed_sets,
    is_t0,
    m_isomorphic,
    monoidal_bases,
    specialization_order,
)

STAR_EXHAUSTIVE_LIMIT = 12
EXPCHAR_MAX_SIZE = 5


@dataclass(frozen=True)
class StarReport:
    holds: bool
    path: str  # "exhaustive" or "artinian"
    checked: int = 0
    counterexample: Optional[tuple] = None


def condition_star(x: FiniteSpace) -> StarReport:
    """Open-blob compactness: an open set containing an intersection of open
    blobs contains a finite sub-intersection.

    Finite spaces are artinian, so this always holds; for at most
    ``STAR_EXHAUSTIVE_LIMIT`` blobs every (family, open) pair is still
    checked against an explicit certificate: the members that strictly
    shrink the running intersection, a chain of length at most ``|X|``.
    """
    open_blobs = blobs(x)[1]
    if len(open_blobs) > STAR_EXHAUSTIVE_LIMIT:
        return StarReport(True, "artinian")
    checked = 0
    for fam in range(1 << len(open_blobs)):
        members = [open_blobs[i] for i in bits.members(fam)]
        meet = x.whole
        for u in members:
            meet &= u
        cert, running = [], x.whole
        for u in members:
            if running & u != running:
                running &= u
                cert.append(u)
        for u in x.opens:
            if bits.subset(meet, u):
                checked += 1
                if not bits.subset(running, u) or len(cert) > x.size:
                    return StarReport(False, "exhaustive", checked, (tuple(members), u))
    return StarReport(True, "exhaustive", checked)


def _blob_base_failure(x: FiniteSpace):
    """None if the open blobs form a monoidal base, else a description."""
    open_blobs = set(blobs(x)[1])
    if x.size and x.whole not in open_blobs:
        return {"reason": "whole space is not a blob"}
    for u, v in itertools.combinations(sorted(open_blobs), 2):
        if u & v not in open_blobs:
            return {"reason": "intersection is not a blob", "pair": [bits.to_list(u), bits.to_list(v)]}
    return None


@dataclass
class ConditionReport:
    t0: bool
    blob_base: bool
    intersections_ok: bool
    star: bool
    star_path: str = ""
    counterexamples: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.t0 and self.blob_base and self.intersections_ok and self.star

    def first_failure(self) -> Optional[str]:
        for tag in ("t0", "blob_base", "intersections_ok", "star"):
            if not getattr(self, tag):
                return tag
        return None

    def to_json(self) -> dict:
        return {
            "t0": self.t0,
            "blob_base": self.blob_base,
            "intersections_ok": self.intersections_ok,
            "star": self.star,
            "star_path": self.star_path,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
        }


def brenner_report(x: FiniteSpace) -> ConditionReport:
    cx = {}
    t0 = is_t0(x)
    if not t0:
        b = x.blob
        pair = next((i, j) for i in range(x.size) for j in range(i) if b[i] >> j & 1 and b[j] >> i & 1)
        cx["t0"] = list(pair)
    failure = _blob_base_failure(x)
    if failure:
        cx["blob_base"] = failure
    if t0:
        ok, family = intersections_of_irreducibles_are_point_closures(x)
        if not ok:
            cx["intersections_ok"] = [bits.to_list(c) for c in family]
    else:
        ok = False
        cx["intersections_ok"] = "uniqueness of closure points needs T0"
    star = condition_star(x)
    if not star.holds:
        cx["star"] = star.counterexample
    return ConditionReport(t0, failure is None, ok, star.holds, star.path, cx)


@dataclass(frozen=True)
class HochsterReport:
    t0: bool
    compact_open_base: bool
    sober: bool

    @property
    def verdict(self) -> bool:
        return self.t0 and self.compact_open_base and self.sober

    def to_json(self) -> dict:
        return {
            "t0": self.t0,
            "compact_open_base": self.compact_open_base,
            "sober": self.sober,
            "verdict": self.verdict,
        }


def hochster_report(x: FiniteSpace) -> HochsterReport:
    # every subset of a finite space is compact, so the compact opens are all opens
    compact_opens = set(x.opens)
    closed_meet = all(u & v in compact_opens for u in compact_opens for v in compact_opens)
    is_base = all(b in compact_opens for b in x.blob)
    base_ok = x.whole in compact_opens and closed_meet and is_base
    sober = all(
        sum(1 for y in range(x.size) if x.closure[y] == c) == 1 for c in irreducible_closed_sets(x)
    )
    return HochsterReport(is_t0(x), base_ok, sober)


@dataclass(frozen=True)
class ExpCharReport:
    blob_condition: bool
    blob_base_mcjs: bool
    some_base_mcjs: bool
    some_base_self_exponential: bool
    some_base_is_exponential: bool

    @property
    def values(self) -> tuple:
        return (
            self.blob_condition,
            self.blob_base_mcjs,
            self.some_base_mcjs,
            self.some_base_self_exponential,
            self.some_base_is_exponential,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.values)) == 1

    def to_json(self) -> dict:
        return {"conditions": list(self.values), "agree": self.agree}


@lru_cache(maxsize=None)
def _exponentials_by_size(max_size: int, points: int) -> tuple:
    """Based spaces ``E(Y, C)`` with ``|Y| <= max_size`` having ``points`` points."""
    from .enumeration import enumerate_posets

    out = []
    for n in range(1, max_size + 1):
        for p in enumerate_posets(n):
            y = p.to_space()
            # |E(Y, C)| = |C|, so only bases with `points` members can match
            for c in monoidal_bases(y, max_members=points):
                if len(c) == points:
                    out.append(exponential(BasedSpace(y, c)).based)
    return tuple(out)


def exp_characterization_report(x: FiniteSpace) -> ExpCharReport:
    """Evaluate the five equivalent conditions characterizing exponentials.

    Conditions three to five search every monoidal base of ``x`` and, for
    the last, every based space ``(Y, C)`` with ``|Y| <= |X|``.
    """
    if not is_t0(x):
        raise NotT0("space is not T0")
    if x.size > EXPCHAR_MAX_SIZE:
        raise SearchSpaceTooLarge(f"{x.size} points exceeds {EXPCHAR_MAX_SIZE}")
    blob_ok = _blob_base_failure(x) is None and x.size > 0
    closures_ok = True
    for a in range(1 << x.size):
        meet = x.whole
        for y in bits.members(a):
            meet &= x.closure[y]
        if meet not in set(x.closure):
            closures_ok = False
            break
    cond1 = blob_ok and closures_ok

    cond2 = False
    if blob_ok:
        cond2 = check_mcjs(BasedSpace(x, blobs(x)[1]))[0] is not None

    bases = [BasedSpace(x, b) for b in monoidal_bases(x)] if x.size else []
    cond3 = any(check_mcjs(b)[0] is not None for b in bases)
    cond4 = any(m_isomorphic(b, exponential(b).based) for b in bases)
    candidates = _exponentials_by_size(x.size, x.size)
    cond5 = any(m_isomorphic(b, e) for b in bases for e in candidates)
    return ExpCharReport(cond1, cond2, cond3, cond4, cond5)


@dataclass
class ClassificationResult:
    is_spectrum: bool
    witness_monoid: Optional[FiniteMonoid] = None
    witness_legend: Optional[tuple] = None
    witness_homeo: Optional[tuple] = None
    failed_condition: Optional[str] = None
    report: Optional[ConditionReport] = None

    def to_json(self) -> dict:
        doc = {"is_spectrum": self.is_spectrum, "failed_condition": self.failed_condition}
        if self.witness_monoid is not None:
            doc["witness_monoid"] = self.witness_monoid.to_json()
            doc["witness_monoid"]["legend"] = [bits.to_list(u) for u in self.witness_legend]
            doc["witness_homeo"] = list(self.witness_homeo)
        if self.report is not None:
            doc["report"] = self.report.to_json()
        return doc


def classify(x: FiniteSpace) -> ClassificationResult:
    """Decide whether ``x`` is a monoid spectrum and build the witness.

    The witness monoid is the intersection semilattice of the open blobs,
    and the homeomorphism sends each point to the prime of base members
    avoiding it. Both are verified before returning.
    """
    report = brenner_report(x)
    if not report.verdict:
        return ClassificationResult(False, failed_condition=report.first_failure(), report=report)
    based = BasedSpace(x, blobs(x)[1])
    us = universal_semilattice(based.base)
    target = spec(us.monoid)
    where = {p: i for i, p in enumerate(target.points)}
    images = phi(based, us)
    homeo = tuple(where[p] for p in images)
    if sorted(homeo) != list(range(x.size)):
        raise AssertionError("phi is not a bijection onto the witness spectrum")
    px, pt = specialization_order(x), specialization_order(target.space)
    if any(px.le(a, b) != pt.le(homeo[a], homeo[b]) for a in range(x.size) for b in range(x.size)):
        raise AssertionError("phi is not a homeomorphism")
    if homeomorphic(x, target.space) is None:
        raise AssertionError("witness spectrum is not homeomorphic to the input")
    return ClassificationResult(True, us.monoid, us.legend, homeo, report=report)


def has_all_joins(x: FiniteSpace) -> bool:
    p = specialization_order(x)
    return all(p.lub(a) is not None for a in range(1 << x.size))
