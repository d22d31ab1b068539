"""Kato spectra of finite commutative monoids and exponentials of finite based spaces."""

from .exponential import ExpSpace, exponential
from .monoid import FiniteMonoid, enumerate_primes, spec, validate_monoid
from .space import BasedSpace, FinitePoset, FiniteSpace, from_open_family
from .theorems import brenner_report, classify

__all__ = [
    "BasedSpace",
    "ExpSpace",
    "FiniteMonoid",
    "FinitePoset",
    "FiniteSpace",
    "brenner_report",
    "classify",
    "enumerate_primes",
    "exponential",
    "from_open_family",
    "spec",
    "validate_monoid",
]
