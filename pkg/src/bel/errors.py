"""Shared exception types."""


class SizeLimitError(ValueError):
    """An exhaustive search was requested beyond its configured size cap."""
