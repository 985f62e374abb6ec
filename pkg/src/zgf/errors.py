class DomainError(ValueError):
    """An argument lies outside an operation's mathematical domain."""
