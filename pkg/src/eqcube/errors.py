"""Exception hierarchy for the eqcube calculator.

Every domain failure raises a subclass of :class:`EqCubeError`, so callers
(and the CLI) can distinguish domain errors from parse errors and bugs.
"""


class EqCubeError(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(EqCubeError, ZeroDivisionError):
    """Division by a zero polynomial or rational function."""


class HalfPowerResidue(EqCubeError):
    """A one-variable fraction with irreducible half-integer exponents was
    asked to embed into the three-variable ring, which only carries integer
    exponents."""


class NoLimit(EqCubeError):
    """The three-probe evaluation at (1,1,1) found a pole or disagreeing
    directional values."""


class NotSymmetrizable(EqCubeError):
    """The monomial shift of a polynomial does not produce a symmetric
    polynomial."""


class NonUnitAtOne(EqCubeError):
    """The symmetrized polynomial vanishes at t=1 and cannot be scaled to
    take the value 1 there."""


class BadBead(EqCubeError):
    """An edge bead is not of the form delta(t)^-b * (Laurent polynomial
    with integer exponents)."""


class NonThetaSupport(EqCubeError):
    """psi was applied to a diagram vector supported on a non-theta graph."""


class WindowTooLarge(EqCubeError):
    """A windowed diagram enumeration would exceed the configured size cap."""


class NotCoprime(EqCubeError):
    """Dedekind sum arguments are not coprime."""


class ZeroP(EqCubeError):
    """A surgery coefficient with p=0 was used where p/q surgery requires
    p != 0."""


class NonPolynomialV(EqCubeError):
    """delta * (t Delta'/Delta) has a nontrivial denominator, so the framed
    change polynomial V does not exist for this (Delta, delta) pair."""


class WindowOverflow(EqCubeError):
    """Clearing denominators pushed coefficients outside the requested
    exponent window."""


class SymmetryViolation(EqCubeError):
    """A pipeline state failed the S3 x inversion symmetry check."""


class ManifestError(EqCubeError):
    """A pipeline manifest is structurally invalid (schema-level problem)."""
