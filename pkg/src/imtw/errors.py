"""Exception hierarchy shared by every module."""


class ImtwError(Exception):
    """Base class; the CLI maps these to exit code 1."""


class GraphError(ImtwError, ValueError):
    pass


class CapExceeded(ImtwError):
    """An exact search was asked to run beyond its configured size cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class PreconditionError(ImtwError, ValueError):
    pass


class InvalidDecomposition(ImtwError):
    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation


class BaseCaseViolation(ImtwError):
    """Raised by the coloring recursion when a subgraph reached with
    ``mu == 0`` or ``omega == 1`` still has an edge.

    The edge certifies that the trusted top-level parameters were wrong.
    """

    def __init__(self, edge, mu, omega):
        u, v = edge
        super().__init__(
            f"edge ({u}, {v}) present in a subgraph colored with mu={mu}, omega={omega}"
        )
        self.edge = (u, v)
        self.mu = mu
        self.omega = omega


class FormatError(ImtwError, ValueError):
    def __init__(self, message, line=None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
