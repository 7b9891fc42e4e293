"""Exception hierarchy shared by the library and the CLI.

The CLI maps ``InvariantViolation`` to exit code 2 and every other
``VebError`` to exit code 1.
"""

from __future__ import annotations


class VebError(Exception):
    """Base class for all errors raised by approx-veb."""


class DomainError(VebError, ValueError):
    """A value lies outside the domain an operation is defined on."""


class UsageError(VebError, RuntimeError):
    """An API was called in a state where the call is not allowed."""


class StaleNameError(UsageError):
    """A name was used after the occurrence it refers to was deleted."""


class EmptyQueueError(UsageError):
    """``extract_min`` was called on an empty priority queue."""


class HullNotInitializedError(UsageError):
    """The on-line hull has not yet seen three non-collinear points."""

    def __init__(self) -> None:
        super().__init__("hull not initialized")


class InputError(VebError):
    """An input file violates its grammar.

    Args:
        line: 1-based line number of the offending line.
        expected: Human-readable description of the expected shape.
    """

    def __init__(self, line: int, expected: str) -> None:
        self.line = line
        self.expected = expected
        super().__init__(f"line {line}: expected '{expected}'")


class DisconnectedGraphError(VebError):
    """A spanning tree was requested for a graph that is not connected."""

    def __init__(self, vertex: int) -> None:
        self.vertex = vertex
        super().__init__(f"graph is disconnected: vertex {vertex} is unreachable")


class InvariantViolation(VebError, AssertionError):
    """A structural self-check failed."""
