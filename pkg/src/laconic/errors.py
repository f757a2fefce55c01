"""Exception types shared across the package."""


class LaconicError(Exception):
    """Base class for errors raised by this package."""


class ParseError(LaconicError):
    """A malformed input file; carries the offending path and line number."""

    def __init__(self, path, line, message):
        super().__init__(f"{path}:{line}: {message}")
        self.path = str(path)
        self.line = line


class DivergenceError(LaconicError):
    """Unconstrained descent ran away; the objective is unbounded below."""
