"""Exception hierarchy shared by every layer of the package."""


class HyperfacesError(Exception):
    """Base class for all package errors."""


class ZeroPolynomial(HyperfacesError, ValueError):
    pass


class ParseError(HyperfacesError, ValueError):
    pass


class SumMismatch(HyperfacesError, ValueError):
    pass


class ShapeMismatch(HyperfacesError, ValueError):
    pass


class BoundExceeded(HyperfacesError):
    """Raised when exhaustive enumeration would exceed the configured size bound."""


class UnsupportedN(HyperfacesError, ValueError):
    pass


class UnsupportedShape(HyperfacesError, ValueError):
    pass


class UnsupportedBeta(HyperfacesError, ValueError):
    """No closed form is available (or valid) for the requested edge-type."""


class BadN(HyperfacesError, ValueError):
    pass


class BadP(HyperfacesError, ValueError):
    pass


class NonIntegerResult(HyperfacesError, ArithmeticError):
    """An exact count came out fractional; this always indicates a bug."""


class NonIntegralGenus(HyperfacesError, ValueError):
    pass


class SingularSystem(HyperfacesError, ArithmeticError):
    pass


class MixedParity(HyperfacesError, ValueError):
    pass
