"""Exception types shared across the engine."""


class GorlabError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(GorlabError):
    pass


class DivisionByZero(GorlabError):
    pass


class ParseError(GorlabError):
    pass


class SingularChange(GorlabError):
    pass


class NotSkewSymmetric(GorlabError):
    pass


class OddDimension(GorlabError):
    pass


class ZeroForm(GorlabError):
    pass


class NotArtinian(GorlabError):
    pass


class NotLinear(GorlabError):
    pass


class ZeroDivisorInput(GorlabError):
    pass


class UnitIdeal(GorlabError):
    pass


class ZeroElement(GorlabError):
    pass


class ShapeMismatch(GorlabError):
    pass


class LiftFailed(GorlabError):
    """A column could not be written in the span of the target map."""

    def __init__(self, message, column=None, level=None):
        super().__init__(message)
        self.column = column
        self.level = level


class RankMismatch(GorlabError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class GradeTooSmall(GorlabError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotCertified(GorlabError):
    pass


class CompositionNonzero(GorlabError):
    pass


class WrongCodimension(GorlabError):
    pass


class ParameterConstraintViolated(GorlabError):
    pass


class WrongField(GorlabError):
    pass


class IdentityFailed(GorlabError):
    pass


class NotRegular(GorlabError):
    pass


class WrongHilbert(GorlabError):
    pass


class DegenerateCubic(GorlabError):
    pass


class MinorBudgetExceeded(GorlabError):
    pass
