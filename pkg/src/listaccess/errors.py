"""Exception hierarchy.

Every error raised by the library derives from :class:`ListAccessError`, which
is itself a ``ValueError`` so callers that only care about bad input can catch
the builtin.
"""


class ListAccessError(ValueError):
    pass


class ItemNotFound(ListAccessError):
    pass


class InvalidPosition(ListAccessError):
    pass


class BlockMismatch(ListAccessError):
    pass


class InvalidParam(ListAccessError):
    pass


class NotAPermutation(ListAccessError):
    pass


class ExcludedPermutation(ListAccessError):
    pass


class DuplicateItems(ListAccessError):
    pass


class SizeViolation(ListAccessError):
    pass


class NotASubsequence(ListAccessError):
    pass


class ParseError(ListAccessError):
    pass


class RangeError(ListAccessError):
    pass
