"""Shared exception types."""


class CapacityError(RuntimeError):
    """An exact solver was asked to exceed its configured size budget."""
