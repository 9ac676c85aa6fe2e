"""Exception hierarchy shared by every module of the package."""


class BraidSimplexError(Exception):
    """Base class for all package errors."""


class InternalAssertion(BraidSimplexError):
    """An invariant that should always hold was violated (a bug, not bad input)."""


# exact algebra
class ZeroBase(BraidSimplexError, ZeroDivisionError):
    pass


class DimensionMismatch(BraidSimplexError, ValueError):
    pass


class Singular(BraidSimplexError, ArithmeticError):
    pass


class NonLaurentEntry(InternalAssertion):
    pass


# combinatorics
class NotAPartition(BraidSimplexError, ValueError):
    pass


class CapExceeded(BraidSimplexError, ValueError):
    pass


class NotNoncrossingPermutation(BraidSimplexError, ValueError):
    pass


class ComplementNotNoncrossing(InternalAssertion):
    pass


class ProductNotNoncrossing(BraidSimplexError, ValueError):
    pass


class OutOfRange(BraidSimplexError, ValueError):
    pass


class NoSharedEndpoint(BraidSimplexError, ValueError):
    pass


class IdenticalEdges(BraidSimplexError, ValueError):
    pass


# geometry
class NonPositiveEntry(BraidSimplexError, ValueError):
    pass


class DegenerateInput(BraidSimplexError, ValueError):
    pass


class NotHypertree(BraidSimplexError, ValueError):
    pass


# representations
class UnsupportedToken(BraidSimplexError, ValueError):
    pass


class SlidingFailure(InternalAssertion):
    pass
