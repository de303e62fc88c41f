"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class MccError(Exception):
    """Base class for all library errors."""


class InvalidInputError(MccError, ValueError):
    """Malformed graph, coloring or file contents."""


class InvalidParameterError(InvalidInputError):
    """A generator or solver parameter is out of its allowed range."""


class RecognitionError(InvalidInputError):
    """The graph is not a member of the family an algorithm requires."""


class PreconditionError(InvalidInputError):
    """A coloring does not satisfy the precondition of a witness extractor."""


class BudgetExhaustedError(MccError, RuntimeError):
    """The exact search ran out of its node budget before proving optimality."""

    def __init__(self, message: str, nodes_explored: int):
        super().__init__(message)
        self.nodes_explored = nodes_explored
