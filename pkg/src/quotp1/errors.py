"""Exception hierarchy shared by every layer of the package."""


class QuotError(Exception):
    """Base class for all package errors."""


class RingMismatchError(QuotError, ValueError):
    """Operands live in different polynomial rings or fields."""


class PolySyntaxError(QuotError, ValueError):
    """Polynomial text does not follow the grammar.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(QuotError, ValueError):
    pass


class MissingVariableError(QuotError, KeyError):
    """An evaluation assignment does not cover a variable of the polynomial."""


class DimensionMismatchError(QuotError, ValueError):
    pass


class NotSquareError(DimensionMismatchError):
    pass


class UnitIdealError(QuotError, ValueError):
    """The ideal contains 1, so it has no Krull dimension."""


class PointNotOnVarietyError(QuotError, ValueError):
    pass


class InvalidChartError(QuotError, ValueError):
    pass


class RankDeficientError(QuotError, ValueError):
    pass


class NoFrameFoundError(QuotError, ValueError):
    pass


class NonSplitCharPolyError(QuotError, ValueError):
    """The characteristic polynomial has a factor without roots in the base field.

    This reflects the base-field restriction (no extensions are built), not a bug.
    ``factor`` holds the coefficient list (constant term first) of the cofactor
    left after removing every linear factor.
    """

    def __init__(self, factor_text, factor):
        super().__init__(f"characteristic polynomial does not split: {factor_text}")
        self.factor_text = factor_text
        self.factor = factor
