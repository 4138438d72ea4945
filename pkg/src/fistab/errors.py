"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ConsistencyError(RuntimeError):
    """An internal consistency check failed (e.g. a character that should
    decompose with nonnegative integer multiplicities does not).

    Raising this signals a bug upstream, not bad user input.
    """
