"""Exception types raised across the package."""


class GraphError(ValueError):
    """Invalid graph input or an operation outside its supported range."""


class DisconnectedGraphError(GraphError):
    """Raised where distances (and hence the Harary matrix) are undefined."""

    def __init__(self, message: str = "graph is disconnected") -> None:
        super().__init__(message)


class NotABridgeError(GraphError):
    """The chosen edge is not a cut edge."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""


class HypothesisError(ValueError):
    """A lemma or theorem hypothesis does not hold for the requested parameters."""


class EmptyClassError(ValueError):
    """No connected graph satisfies the class constraint."""


class NonConvergenceError(RuntimeError):
    def __init__(self, iterations: int, residual: float) -> None:
        super().__init__(
            f"power iteration did not converge after {iterations} iterations "
            f"(residual {residual:.3e})"
        )
        self.iterations = iterations
        self.residual = residual
