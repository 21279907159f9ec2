"""Exception types raised across the package."""


class GraphError(ValueError):
    """Malformed graph input (self-loop, out-of-range id, bad format)."""


class PartitionError(ValueError):
    """An ordered partition that does not partition the host vertex set."""


class BudgetError(RuntimeError):
    """A solver budget was exceeded; no answer is reported."""


class VertexBudgetError(BudgetError):
    pass


class InconclusiveError(BudgetError):
    """Node budget exhausted before the search could settle the question."""

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes
