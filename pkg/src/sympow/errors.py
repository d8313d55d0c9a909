"""Exception hierarchy shared by the whole package."""


class SympowError(Exception):
    """Base class for every error raised by sympow."""


class RingMismatchError(SympowError, ValueError):
    """Two operands live in different ambient rings."""


class DomainError(SympowError, ValueError):
    """An operation was called outside its mathematical domain.

    Typical causes are the zero or unit ideal where a proper nonzero
    ideal is required, or a non-positive power.
    """


class StrategyError(DomainError):
    """An explicitly requested strategy does not apply to the input."""


class ContainmentSearchError(DomainError):
    """A containment search hit its cap without finding an answer."""


class ExponentOverflowError(SympowError, OverflowError):
    """An exponent left the supported machine-word range."""


class ParseError(SympowError, ValueError):
    """Malformed ideal expression.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
