class TuranError(Exception):
    """Base error of the engine; the CLI maps it to exit code 2."""


class InvalidHypergraphError(TuranError):
    pass


class VertexOutOfRangeError(TuranError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} out of range for ground set of size {n}")
        self.vertex = vertex
        self.n = n


class EdgeListFormatError(TuranError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ParameterError(TuranError):
    pass


class SimplexPointError(TuranError):
    pass


class ResolutionTooCoarseError(TuranError):
    pass


class TraceMismatchError(TuranError):
    pass


class InvariantViolationError(TuranError):
    pass


class M3BudgetExceededError(TuranError):
    pass


__all__ = (
    "TuranError",
    "InvalidHypergraphError",
    "VertexOutOfRangeError",
    "EdgeListFormatError",
    "ParameterError",
    "SimplexPointError",
    "ResolutionTooCoarseError",
    "TraceMismatchError",
    "InvariantViolationError",
    "M3BudgetExceededError",
)
