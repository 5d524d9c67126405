"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class CapacityError(ValueError):
    """A graph exceeds the supported vertex capacity."""


class Graph6Error(ValueError):
    """Malformed graph6 text."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search hit its state budget before reaching a verdict.

    This is never a verdict: the caller learns nothing about the graph.
    """

    def __init__(self, message, explored=0):
        super().__init__(message)
        self.explored = explored
