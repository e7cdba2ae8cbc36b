"""
Main-term constant :math:`B(s_1, s_2)` of the Selberg upper bound sieve whose
local density drops from dimension two to dimension one at a threshold,

.. math::

    B(s_1, s_2)^{-1} = e^{-2\\gamma} \\iint_{w_1/s_1 + w_2/s_2 \\le 1}
        \\rho(w_1)\\rho(w_2)\\,dw_1\\,dw_2,

with the one-variable special case :math:`B(1, v)` available in closed form.
"""
import math
import numpy as np
import scipy.integrate
from .table.dickman import rho, rho_integral
from .util.errors import DomainError
from .util.log import Handle

logger = Handle(__name__)

QUAD_TOL = 1e-9
MAX_QUAD_TOL = 1e-8
RHO_TRUNCATION = 250.0

EXP_GAMMA = math.exp(np.euler_gamma)


class BEvaluator(object):
    """
    Evaluator of :math:`B(s_1, s_2)` over a table of Dickman's function.

    Parameters
    ----------
    rho_table : :class:`~almostprime.table.dickman.RhoTable`
        Table providing :math:`\\rho` and its antiderivative.
    quad_tol : :class:`float`
        Absolute tolerance of the outer quadrature, at most `1e-8`.
    """

    def __init__(self, rho_table, quad_tol=QUAD_TOL):
        if not 0 < quad_tol <= MAX_QUAD_TOL:
            raise DomainError("quad_tol must lie in (0, 1e-8], got {}".format(quad_tol))
        self.rho = rho_table
        self.quad_tol = float(quad_tol)

    def __repr__(self):
        return "BEvaluator({!r}, quad_tol={:.0e})".format(self.rho, self.quad_tol)

    def double_integral(self, s1, s2):
        """
        :math:`\\iint \\rho(w_1)\\rho(w_2)` over the triangle
        :math:`w_1/s_1 + w_2/s_2 \\le 1`, as an outer quadrature in :math:`w_1`
        of the tabulated antiderivative.
        """
        table = self.rho
        upper = min(s1, RHO_TRUNCATION, table.s_end)
        # kinks of rho at the integers, and of the inner integral where its
        # upper limit s2 (1 - w1 / s1) crosses 1 and 2
        breaks = list(np.arange(1.0, math.ceil(upper)))
        breaks += [s1 * (1.0 - m / s2) for m in (1, 2)]
        points = sorted({b for b in breaks if 0.0 < b < upper})

        def integrand(w1):
            return rho(table, w1) * rho_integral(table, s2 * (1.0 - w1 / s1))

        kwargs = dict(epsabs=self.quad_tol, epsrel=self.quad_tol)
        kwargs["limit"] = max(50, 4 * len(points))
        if points:
            kwargs["points"] = points
        value, err = scipy.integrate.quad(integrand, 0.0, upper, **kwargs)
        logger.debug(
            "Double integral at ({:g}, {:g}) = {:.12f} (est. err {:.1e})".format(s1, s2, value, err)
        )
        return value


def big_B(ev, s1, s2):
    """
    Mixed-dimension Selberg constant :math:`B(s_1, s_2)` by iterated quadrature.

    Parameters
    ----------
    ev : :class:`BEvaluator`
    s1, s2 : :class:`float`
        Positive arguments.

    Returns
    -------
    :class:`float`
    """
    if not (s1 > 0 and s2 > 0):
        raise DomainError("B requires s1, s2 > 0, got ({}, {})".format(s1, s2))
    return math.exp(2.0 * np.euler_gamma) / ev.double_integral(float(s1), float(s2))


def _tail_bound(v):
    # e / floor(v)!, underflowing to 0 for large v
    return math.exp(1.0 - math.lgamma(math.floor(v) + 1.0))


def big_B_1v_bounds(v):
    """
    Certified enclosure of :math:`B(1, v)`.

    Uses :math:`\\int_0^\\infty \\rho = \\int_0^\\infty u\\rho = e^\\gamma` and
    the tail bound :math:`e/\\lfloor v \\rfloor!` on the part of the integral
    beyond :math:`v`.

    Parameters
    ----------
    v : :class:`float`
        Argument, :math:`v \\ge 2`.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
        Lower and upper bounds; the upper bound is :math:`e^\\gamma v/(v-1)`.
    """
    if not v >= 2:
        raise DomainError("B(1, v) closed form requires v >= 2, got {}".format(v))
    main = EXP_GAMMA * (1.0 - 1.0 / v)
    lower = math.exp(2.0 * np.euler_gamma) / (main + _tail_bound(v))
    upper = EXP_GAMMA * v / (v - 1.0)
    return lower, upper


def big_B_1v(ev, v):
    """
    :math:`B(1, v) = e^\\gamma v/(v-1)` up to the certified tail
    :math:`e/\\lfloor v \\rfloor!`.

    Parameters
    ----------
    ev : :class:`BEvaluator` | `None`
        Unused by the closed form; accepted for symmetry with :func:`big_B`.
    v : :class:`float`
        Argument, :math:`v \\ge 2`.

    Returns
    -------
    :class:`float`
    """
    return big_B_1v_bounds(v)[1]
