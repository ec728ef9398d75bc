"""Exception types shared across the package."""


class FeketeError(Exception):
    """Base class for package errors."""


class DomainError(FeketeError, ValueError):
    """An argument lies outside an operation's documented domain."""


class CapacityError(FeketeError, ValueError):
    """A requested order exceeds a precomputed table or expansion capacity."""


class NumericalError(FeketeError, RuntimeError):
    """A numerical routine failed to converge or lost too much accuracy."""
