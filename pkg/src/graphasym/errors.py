"""Exception types shared across the package."""
from __future__ import annotations


class GraphAsymError(Exception):
    """Base class for errors raised by this package."""


class OrderMismatch(GraphAsymError):
    """Two series were combined whose truncation orders are incompatible."""


class ConstantTermError(GraphAsymError):
    """A series operation required a specific constant term (e.g. log needs
    constant 1, compose needs inner constant 0) and did not get it."""


class NonMonomialDivisor(GraphAsymError):
    """Division of symbolic constants requires a single-term divisor."""


class UnknownLeadingTerm(GraphAsymError):
    """An asymptotic division needs the divisor's leading coefficient to be
    a single symbolic monomial so the quotient stays in the ring."""


class ResidualNonzero(GraphAsymError):
    """A finite-polynomial recovery left a nonzero residual past the claimed
    degree, so the working order or degree bound is too small."""


class UnderdeterminedSystem(GraphAsymError):
    """Not enough series coefficients to pin down the requested degree."""


class VerificationFailure(GraphAsymError):
    """An internal cross-check against exact data failed."""


class CrosscheckFailure(GraphAsymError):
    """Two independently derived values disagree beyond tolerance."""


class InsufficientPoints(GraphAsymError):
    """A least-squares fit was requested with fewer points than unknowns."""


class IllConditioned(GraphAsymError):
    """The normalized design matrix is numerically rank deficient at the
    working precision."""
