"""
Prime tables shared by the factor sieve and the Euler products.
"""
import math
import numpy as np
from .log import Handle

logger = Handle(__name__)


def small_primes(limit):
    """
    Primes up to and including `limit`, by the sieve of Eratosthenes.

    Parameters
    ----------
    limit : :class:`int`

    Returns
    -------
    :class:`numpy.ndarray`
    """
    limit = int(limit)
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)
