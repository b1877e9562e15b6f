"""Exception hierarchy for the vknot package."""


class VknotError(Exception):
    """Base class for all vknot errors."""


class ParseError(VknotError):
    """Base class for Gauss-code parsing failures."""


class MalformedToken(ParseError):
    """A token in the input does not match the Gauss-code grammar."""


class CrossingCountError(ParseError):
    """A crossing id appears once or more than twice."""


class MixedFlatError(ParseError):
    """Flat and classical passages mixed in one code."""


class SignMismatchError(ParseError):
    """The two occurrences of a crossing carry different signs."""


class UnknownCrossing(VknotError):
    """Referenced crossing id does not occur in the code."""


class FlatCodeError(VknotError):
    """Operation requires a virtual/classical (non-flat) code."""


class NotFlat(VknotError):
    """Operation requires a flat code."""


class NotLong(VknotError):
    """Operation requires a long code."""


class AlreadyClosed(VknotError):
    """close() applied to a code that is already closed."""


class InvalidSite(VknotError):
    """A move was applied at a site it does not match."""


class SizeCapExceeded(VknotError):
    """Crossing count exceeds the configured cap for an exact state sum."""


class DoubleLongSegment(VknotError):
    """Product of two monomials that both carry a long-segment variable."""


class IncompleteAssignment(VknotError):
    """Constant evaluation requested but free variables remain."""


class DifferentialSquareError(VknotError):
    """Internal consistency violation: a differential does not square to zero."""
