"""Exception hierarchy shared by every module."""


class MonomialLabError(Exception):
    """Base class for all library errors."""


class DimensionError(MonomialLabError, ValueError):
    """An exponent vector does not match the ambient variable count."""


class DomainError(MonomialLabError, ValueError):
    """An operation was called outside its mathematical domain."""


class ResourceError(MonomialLabError, RuntimeError):
    """A configured enumeration cap would be exceeded."""

    def __init__(self, message, size=None, cap=None):
        super().__init__(message)
        self.size = size
        self.cap = cap


class ConsistencyError(MonomialLabError, RuntimeError):
    """Two routes that must agree did not."""


class ParseError(MonomialLabError, ValueError):
    """Malformed ideal text; ``offset`` is the byte position of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
