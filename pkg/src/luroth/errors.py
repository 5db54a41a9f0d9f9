class LurothError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateError(LurothError):
    """Input lies outside the genericity hypotheses of an operation."""


class NotRationallySolvable(DegenerateError):
    """The answer exists but needs an algebraic extension of the rationals.

    ``partial`` carries whatever exact data was computed before giving up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
