"""Exception types shared across the package."""


class CircuitParseError(ValueError):
    """Raised when a circuit file is malformed.

    Carries the 1-based line number of the offending line so callers can
    point at the exact spot in the file.
    """

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class CapExceeded(RuntimeError):
    """Raised when a request would blow past a hard resource cap.

    Exact enumeration is the whole point of this package, so instead of
    silently thrashing we refuse anything beyond the configured limits
    (statevector width, branch enumeration, tensor-power dimension).
    """
