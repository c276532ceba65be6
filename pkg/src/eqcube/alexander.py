"""Normalized Alexander data of a rank-one manifold and the functionals
built from it.

A valid pair (Delta, delta) is symmetric under t -> t^-1 and takes the
value 1 at t = 1; Delta has integer exponents while delta may carry
half-integer ones.  Divisibility of delta into Delta is deliberately not
enforced, so formulas can be explored for arbitrary valid pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonUnitAtOne, NotSymmetrizable
from .halfint import HLPoly, OneVarFrac


def normalize_symmetric(p: HLPoly) -> HLPoly:
    """Scale c * t^(-(max+min)/2) * p so the result is symmetric with value
    1 at t = 1.

    Raises NotSymmetrizable when the centering shift does not produce a
    symmetric polynomial, NonUnitAtOne when the shifted polynomial vanishes
    at t = 1.
    """
    if p.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    lo, hi = p.min_exp2(), p.max_exp2()
    if (lo + hi) % 2:
        raise NotSymmetrizable("centering shift is a quarter-integer power")
    shifted = p.shift(-(lo + hi) // 2)
    if not shifted.is_symmetric():
        raise NotSymmetrizable("centered polynomial is not symmetric")
    v = shifted.value_at_one()
    if v == 0:
        raise NonUnitAtOne("centered polynomial vanishes at t=1")
    return shifted.scale(1 / v)


@dataclass(frozen=True)
class AlexanderPair:
    """Normalized (Delta, delta): the Alexander polynomial and the
    annihilator of the rational first homology of the infinite cyclic
    cover."""

    Delta: HLPoly
    delta: HLPoly

    def __post_init__(self):
        if self.Delta.is_zero or self.delta.is_zero:
            raise ValueError("Delta and delta must be nonzero")
        if self.Delta.has_half_exponents():
            raise ValueError("Delta must have integer exponents")
        for name, p in (("Delta", self.Delta), ("delta", self.delta)):
            if not p.is_symmetric():
                raise ValueError(f"{name} must satisfy {name}(t)={name}(1/t)")
            if p.value_at_one() != 1:
                raise ValueError(f"{name}(1) must equal 1")

    @classmethod
    def trivial(cls) -> "AlexanderPair":
        return cls(HLPoly.one(), HLPoly.one())


def i_delta(pair: AlexanderPair) -> OneVarFrac:
    """(1+t)/(1-t) + t Delta'(t)/Delta(t), as a reduced fraction."""
    lead = OneVarFrac(HLPoly.from_t({0: 1, 1: 1}), HLPoly.from_t({0: 1, 1: -1}))
    return lead + j_delta(pair)


def j_delta(pair: AlexanderPair) -> OneVarFrac:
    """The logarithmic derivative t Delta'(t)/Delta(t)."""
    return OneVarFrac(pair.Delta.derivative().shift(2), pair.Delta)
