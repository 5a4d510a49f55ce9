"""Engine error type shared across modules."""

from __future__ import annotations


class AhpError(Exception):
    """Engine failure with a machine-readable code and optional node path.

    Codes used by the engine: MISSING_PAIR, DUPLICATE_PAIR, CONFLICTING_PAIR,
    UNKNOWN_ELEMENT, UNKNOWN_PATH, UNKNOWN_PAIR, BAD_VALUE, BAD_ORDER,
    NO_CONVERGENCE, INVALID_MODEL, EMPTY_SELECTION, TOO_FEW_ALTERNATIVES,
    UNKNOWN_ATTRIBUTE, UNKNOWN_ALTERNATIVE.
    """

    def __init__(self, code: str, message: str, path: tuple[str, ...] | None = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.path = tuple(path) if path else None

    def __str__(self) -> str:
        if self.path:
            return f"{self.code} at {'/'.join(self.path)}: {self.message}"
        return f"{self.code}: {self.message}"
