"""Exception hierarchy shared by every module."""


class FuzzyHahnError(Exception):
    """Base class for all library errors."""


class InvalidGradeError(FuzzyHahnError, ValueError):
    pass


class IncompatibleSetsError(FuzzyHahnError, ValueError):
    pass


class EmptySupremumError(FuzzyHahnError, ValueError):
    pass


class SizeLimitError(FuzzyHahnError):
    def __init__(self, cap, what="closure"):
        self.cap = cap
        super().__init__(f"{what} exceeds the size cap of {cap} elements")


class NotAMemberError(FuzzyHahnError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "not a member"


class InfinityError(FuzzyHahnError, ArithmeticError):
    """Raised when +inf and -inf would have to be combined."""


class IncompleteGeneratorError(FuzzyHahnError, ValueError):
    pass


class IllDefinedDifferenceError(FuzzyHahnError, ValueError):
    pass


class NoCoverError(FuzzyHahnError, ValueError):
    def __init__(self, uncovered):
        self.uncovered = uncovered
        super().__init__(f"no element of the cover family dominates {uncovered}")


class CoverSystemError(FuzzyHahnError, ValueError):
    pass


class DomainMismatchError(FuzzyHahnError, ValueError):
    pass


class BadInputError(FuzzyHahnError, ValueError):
    pass


class UnsupportedSignError(FuzzyHahnError, ValueError):
    pass


class InstanceError(FuzzyHahnError, ValueError):
    """Malformed instance file; ``where`` locates the problem."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
