class DomainError(ValueError):
    """An input violates a mathematical precondition (zero divisor, q = 2, ...)."""


class ParseError(ValueError):
    """Text could not be parsed as a field element or polynomial."""
