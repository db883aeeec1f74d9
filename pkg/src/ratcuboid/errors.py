class DomainError(ValueError):
    """Input outside an operation's domain (negative sqrt, n < 2, bad triple, ...)."""


class IncompatibleRadicandError(ArithmeticError):
    """A result would leave q*sqrt(d) form (cross-radicand sum, irrational ratio)."""


class NotCoherentError(ValueError):
    """Two generator pairs do not share the even edge 2xy."""


class PoleError(ZeroDivisionError):
    """Formula evaluated at a pole (equal squares, a1 = 1, ...)."""


class DegenerateError(ValueError):
    """Degenerate configuration: zero leg, a1 = 0, vanishing curve coefficient."""


class SingularityError(ArithmeticError):
    """Vanishing denominator in a floating angle recovery formula."""
