"""
Exceptions raised across almostprime.
"""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class InfeasibleError(DomainError):
    """No admissible weight parameter exists for the given sieve parameters."""


class BracketingError(DomainError):
    """
    A set of truncated sieve coefficients fails to bracket the sifting indicator.

    Parameters
    ----------
    value : :class:`int`
        The integer at which the bracketing fails.
    message : :class:`str`
        Description of the failure.
    """

    def __init__(self, value, message):
        self.value = int(value)
        super().__init__("{} (at n={:d})".format(message, self.value))


class SegmentBudgetError(DomainError):
    """A factor sieve was requested over an interval larger than the budget."""


class CacheError(RuntimeError):
    """A cached table does not match the request it was loaded for."""
