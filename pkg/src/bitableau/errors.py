"""Exception types shared across the package."""

from __future__ import annotations


class BitableauError(Exception):
    """Base class for all package-specific errors."""


class EdgeListParseError(BitableauError, ValueError):
    """Raised when an edge-list text is malformed.

    ``line`` is the 1-based line number at which parsing failed.
    """

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class Graph6ParseError(BitableauError, ValueError):
    """Raised when a graph6 string cannot be decoded."""


class CapExceededError(BitableauError, RuntimeError):
    """Raised when an exhaustive operation would exceed its configured cap.

    Exhaustive oracles refuse rather than silently degrade; catching this
    error is the caller's signal to shrink the instance or raise the cap
    explicitly.
    """


class InternalCheckError(BitableauError, AssertionError):
    """A self-verification failed; indicates a bug, never a wrong answer.

    Positive verdicts (isomorphism witnesses, clique witnesses) are checked
    against the input before being returned.  If a check fails the operation
    raises this instead of reporting the unverified verdict.
    """
