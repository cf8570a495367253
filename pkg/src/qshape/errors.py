"""Exception types shared across the package."""


class NonzeroRemainder(ArithmeticError):
    """Exact polynomial division was requested but the remainder is nonzero."""


class SingularSystem(ArithmeticError):
    """A linear system has no unique solution (degenerate interpolation nodes)."""


class InvalidArguments(ValueError):
    """Arguments are outside the domain of the operation."""


class NegativeCoefficient(ValueError):
    """A polynomial with negative coefficients was passed where a coefficient
    sequence of counts is required."""


class ZeroPolynomial(ValueError):
    """The zero polynomial has no coefficient statistics or measure."""


class NonUnitConstantTerm(ValueError):
    """Power-series inversion needs a denominator with constant term +1 or -1."""


class InsufficientSamples(ValueError):
    """Not enough samples per residue class to fit and validate."""


class ValidationFailure(ArithmeticError):
    """A fitted formula failed on held-out samples: the sequence is not
    quasipolynomial with the requested period and degree."""


class IndexOutOfRange(IndexError):
    """Coefficient index outside [0, n*k]."""


class OutOfDomain(ValueError):
    """Evaluation point outside the function's domain."""
