"""Exception types shared across the package."""


class InvalidParams(ValueError):
    """Family parameters violate a documented bound."""


class DegenerateFamily(ValueError):
    """Operation needs at least two cliques (k >= 2)."""


class UnsupportedShape(ValueError):
    """Factored characteristic polynomial would need a negative exponent."""


class SingularInput(ZeroDivisionError):
    """Matrix to invert is singular."""


class SingularBlock(ZeroDivisionError):
    """Block determinant needs an invertible trailing block."""


class NotSymmetric(ValueError):
    """Numeric eigensolver requires an exactly symmetric matrix."""


class ComplexRoots(ArithmeticError):
    """Cubic has a conjugate pair where three real roots were expected."""


class DegenerateLeading(ValueError):
    """Cubic solver needs a nonzero leading coefficient."""


class InternalError(RuntimeError):
    """An exactness invariant failed; indicates a bug, not bad input."""
