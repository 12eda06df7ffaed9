"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class ResourceLimitError(RuntimeError):
    """A configured size guard was exceeded (field too large, count too deep)."""
