"""Dedekind sums and Casson-Walker values of lens spaces.

``lambda_lens`` returns the Casson-Walker invariant (Casson normalization,
half of Walker's) of the lens space obtained by p/q surgery on the unknot
in S^3.  The value is computed from a Dedekind sum via the classical
rational surgery formula

    lambda(S^3_{p/q}(K)) = (q / 2p) * Delta_K''(1) - (1/2) s(q, p),

so on the unknot lambda(S^3(U; p/q)) = -s(q, p)/2.  See the package README
for the literature sources and cross-checks backing this value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotCoprime, ZeroP


@dataclass(frozen=True)
class SurgeryCoefficient:
    """A reduced surgery coefficient p/q with q != 0."""

    p: int
    q: int

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("q must be nonzero")
        if gcd(abs(self.p), abs(self.q)) != 1:
            raise ValueError(f"p/q = {self.p}/{self.q} is not reduced")

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


def _sawtooth(x: Fraction) -> Fraction:
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum(q: int, p: int) -> Fraction:
    """s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)) for coprime q, p >= 1."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    if gcd(abs(q), p) != 1:
        raise NotCoprime(f"gcd({q}, {p}) != 1")
    total = Fraction(0)
    for k in range(1, p):
        total += _sawtooth(Fraction(k, p)) * _sawtooth(Fraction(k * q, p))
    return total


def lambda_lens(coeff: SurgeryCoefficient) -> Fraction:
    """Casson-Walker invariant of S^3(U; p/q), i.e. of the lens space
    produced by p/q surgery on the unknot.

    Orientation bookkeeping is inherited from the surgery description
    itself: p/q and (-p)/(-q) describe the same surgery, and reversing the
    sign of p/q reverses the orientation of the result, which negates the
    invariant.
    """
    p, q = coeff.p, coeff.q
    if p == 0:
        raise ZeroP("p/q surgery requires p != 0")
    if p < 0:
        p, q = -p, -q
    return -Fraction(1, 2) * dedekind_sum(q, p)
