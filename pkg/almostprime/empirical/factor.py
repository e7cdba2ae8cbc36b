"""
Segmented factor sieve giving :math:`\\Omega(n)` and the least prime factor of
every integer in an interval.
"""
import math
import numpy as np
from ..util.errors import DomainError, SegmentBudgetError
from ..util.primes import small_primes
from ..util.log import Handle

logger = Handle(__name__)

SEGMENT_BUDGET = 2 ** 26


class FactorSieve(object):
    """
    Prime factor counts with multiplicity and least prime factors over
    `[lo, hi)`.

    Parameters
    ----------
    lo, hi : :class:`int`
        Interval end points.
    omega_big : :class:`numpy.ndarray`
        :math:`\\Omega(n)` for `n` in `[lo, hi)`.
    least_factor : :class:`numpy.ndarray`
        Least prime factor of `n`, equal to `n` for primes.
    """

    def __init__(self, lo, hi, omega_big, least_factor):
        self.lo, self.hi = int(lo), int(hi)
        self.omega_big = omega_big
        self.least_factor = least_factor
        for arr in (self.omega_big, self.least_factor):
            arr.setflags(write=False)

    def __len__(self):
        return self.hi - self.lo

    def __repr__(self):
        return "FactorSieve([{:d}, {:d}))".format(self.lo, self.hi)

    def _index(self, n):
        idx = np.asarray(n, dtype=np.int64) - self.lo
        if np.any((idx < 0) | (idx >= len(self))):
            raise DomainError("outside the sieved interval {!r}".format(self))
        return idx

    def omega(self, n):
        """:math:`\\Omega(n)` for `n` (scalar or array) in the interval."""
        out = self.omega_big[self._index(n)]
        return int(out) if np.ndim(out) == 0 else out

    def lpf(self, n):
        """Least prime factor of `n` (scalar or array) in the interval."""
        out = self.least_factor[self._index(n)]
        return int(out) if np.ndim(out) == 0 else out

    @property
    def numbers(self):
        return np.arange(self.lo, self.hi, dtype=np.int64)

    @property
    def prime_mask(self):
        return self.omega_big == 1


def build_factor_sieve(lo, hi, budget=SEGMENT_BUDGET):
    """
    Sieve `[lo, hi)` by the primes up to :math:`\\sqrt{hi}`, dividing out each
    prime power from its multiples.

    Parameters
    ----------
    lo, hi : :class:`int`
        Interval with `2 <= lo < hi`.
    budget : :class:`int`
        Largest interval length sieved at once.

    Returns
    -------
    :class:`FactorSieve`
    """
    lo, hi = int(lo), int(hi)
    if not 2 <= lo < hi:
        raise DomainError("requires 2 <= lo < hi, got [{:d}, {:d})".format(lo, hi))
    size = hi - lo
    if size > budget:
        raise SegmentBudgetError(
            "interval of length {:d} exceeds the budget {:d}; split it into {:d} "
            "segments".format(size, budget, -(-size // budget))
        )
    rem = np.arange(lo, hi, dtype=np.int64)
    omega_big = np.zeros(size, dtype=np.int16)
    least_factor = np.zeros(size, dtype=np.int64)
    for p in small_primes(math.isqrt(hi - 1)):
        p = int(p)
        start = -(-lo // p) * p - lo
        if start >= size:
            continue
        untouched = least_factor[start::p] == 0
        least_factor[start::p][untouched] = p
        q = p
        while q < hi:
            start = -(-lo // q) * q - lo
            if start >= size:
                break
            rem[start::q] //= p
            omega_big[start::q] += 1
            q *= p
    # a cofactor above sqrt(hi) is a single prime
    big = rem > 1
    omega_big[big] += 1
    prime = least_factor == 0
    least_factor[prime] = rem[prime]
    logger.debug("Sieved [{:d}, {:d}): {:d} primes".format(lo, hi, int(prime.sum())))
    return FactorSieve(lo, hi, omega_big, least_factor)
