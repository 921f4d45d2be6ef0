"""Exception types shared across the package."""


class ObskitError(Exception):
    """Base class for all errors raised by this library."""


class GraphFormatError(ObskitError):
    """A graph-definition document is malformed or inconsistent."""


class UnknownAtomError(ObskitError):
    """An operation received an atom that does not belong to its graph."""


class UnsupportedOperationError(ObskitError):
    """The requested operation is undefined for the given graph kind."""


class BudgetExceededError(ObskitError):
    """A normalization step exceeded its configured size budget."""


class TermSyntaxError(ObskitError):
    """A term failed to parse; `position` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
