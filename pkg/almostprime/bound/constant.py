"""
Hardy-Littlewood constant of the prime pattern :math:`(p, p+2, p+6)`,

.. math::

    C = \\frac{9}{2} \\prod_{p > 3}\\left(1 - \\frac{3p - 1}{(p - 1)^3}\\right).
"""
import functools
import math
import numpy as np
from ..util.primes import small_primes
from ..util.errors import DomainError
from ..util.log import Handle

logger = Handle(__name__)

HL_PLIMIT = 10 ** 7
HL_MIN_PLIMIT = 10 ** 5


def _euler_product(p_limit):
    """Truncated product over primes :math:`3 < p \\le p_{limit}`."""
    p = small_primes(p_limit)
    p = p[p > 3].astype(float)
    terms = (3.0 * p - 1.0) / (p - 1.0) ** 3
    return 4.5 * math.exp(np.log1p(-terms).sum())


def _tail_sum(p_limit):
    """
    Upper bound for :math:`-\\sum_{p > P} \\log(1 - t_p)`, using
    :math:`t_p \\le 4/p^2` and that primes above 3 are :math:`\\pm 1 \\bmod 6`.
    """
    P = float(p_limit)
    return 4.0 * (1.0 / (3.0 * P) + 2.0 / P ** 2) / (1.0 - 4.0 / P ** 2)


@functools.lru_cache(maxsize=8)
def hl_constant_C(p_limit=HL_PLIMIT):
    """
    Certified enclosure of the Hardy-Littlewood constant.

    Every omitted factor lies in :math:`(0, 1)`, so the truncated product is an
    upper bound; the tail bound gives the lower one.

    Parameters
    ----------
    p_limit : :class:`int`
        Largest prime in the truncated product, at least :math:`10^5`.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
        Midpoint and half-width of the enclosure.
    """
    if p_limit < HL_MIN_PLIMIT:
        raise DomainError("p_limit must be at least 1e5, got {}".format(p_limit))
    upper = _euler_product(int(p_limit))
    lower = upper * math.exp(-_tail_sum(p_limit))
    center, half = (upper + lower) / 2.0, (upper - lower) / 2.0
    logger.debug("C in [{:.12f}, {:.12f}] (p <= {:d})".format(lower, upper, int(p_limit)))
    return center, half
