"""Exception hierarchy shared by every module."""

from __future__ import annotations


class H3GError(Exception):
    """Base class for library errors."""


class InputError(H3GError, ValueError):
    """Invalid arguments; the CLI maps these to exit code 2."""


class OutOfRange(InputError):
    pass


class DegenerateTriple(InputError):
    pass


class TripleAbsent(InputError):
    pass


class NotASpanningTree(InputError):
    pass


class MalformedCode(InputError):
    pass


class NotBijective(InputError):
    pass


class LinkConditionViolated(InputError):
    pass


class ProductNotLongCycle(H3GError, AssertionError):
    """The product of a tree's 3-cycles was not a single long cycle."""


class EvenVertexCount(InputError):
    pass


class OddDimension(InputError):
    pass


class NotAntisymmetric(InputError):
    pass


class NonPrimeModulus(InputError):
    pass


class TooManyTriples(InputError):
    pass


class TooLarge(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NotNonPfaffian(InputError):
    pass


class NotHamiltonianCycle(InputError):
    pass


class NotASuspension(InputError):
    pass


class NotATwoSuspension(InputError):
    pass


class MismatchedVertexSets(InputError):
    pass


class NotPSTS(InputError):
    pass


class CyclesPresent(InputError):
    pass


class BlackCyclesPresent(InputError):
    pass


class EvenOrder(InputError):
    pass


class BadIndex(InputError):
    pass


class BadParameters(InputError):
    pass


class UnsupportedOrder(InputError):
    pass


class H3GSyntaxError(InputError):
    """Parse failure; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SemanticError(InputError):
    pass
