"""Exception hierarchy shared by every module."""


class FeecError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(FeecError, ValueError):
    pass


class NotDivisible(FeecError, ArithmeticError):
    """The dividend is not an exact multiple of the divisor."""


class NotHomogeneous(FeecError, ValueError):
    pass


class ZeroPolynomial(FeecError, ValueError):
    """Raised where a degree is requested for the zero element."""


class DegreeTooHigh(FeecError, ValueError):
    pass


class DegreeMismatch(FeecError, ValueError):
    pass


class NotPolynomial(FeecError, ValueError):
    """An s-localized value was given where a polynomial is required."""


class NotInRange(FeecError, ValueError):
    """The form is not the image of a polynomial form under the Hodge star."""


class NotPolynomialResult(FeecError, ValueError):
    """A correspondence map produced a non-polynomial form.

    This signals that the input was not in the claimed finite element space.
    """


class ExcludedParameter(FeecError, ValueError):
    pass


class ParseError(FeecError, ValueError):
    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        super().__init__(message if position is None else f"{message} (at column {position})")

    def caret(self) -> str:
        if self.text is None or self.position is None:
            return ""
        return f"{self.text}\n{' ' * self.position}^"


class UnknownVariable(ParseError):
    pass
