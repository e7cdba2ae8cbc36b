"""
The integrals :math:`I`, :math:`J` and :math:`L` entering the lower bound for
the weighted sum over primes.
"""
import math
import numpy as np
import scipy.integrate
import scipy.optimize
from ..selberg import big_B, big_B_1v
from ..table.sievefn import F2, sigma_pair
from ..util.errors import DomainError
from ..util.log import Handle

logger = Handle(__name__)

INTEGRAL_TOL = 1e-8
CROSSOVER_XTOL = 1e-10


def integrand_I_branches(params, sievefn_table, ev, alpha):
    """
    The two candidate bounds at a prime :math:`p = x^\\alpha`: the vector sieve
    branch :math:`F((1-2\\alpha)/(2\\theta_1), (1-2\\alpha)/(2\\theta_2))` and the
    Selberg branch :math:`B((1-2\\alpha)/(4\\theta_1), (1-2\\alpha)/(4\\theta_2))`.
    The vector sieve branch is infinite where its constraint set is empty.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
    """
    s1, s2 = sigma_pair(alpha, params.theta1, params.theta2, level=2)
    try:
        f_branch = F2(sievefn_table, s1, s2)
    except DomainError:
        f_branch = math.inf
    b1, b2 = sigma_pair(alpha, params.theta1, params.theta2, level=4)
    return f_branch, big_B(ev, b1, b2)


def _crossover(params, sievefn_table, ev):
    lo, hi = params.theta1, 1.0 / 3

    def gap(alpha):
        Fb, Bb = integrand_I_branches(params, sievefn_table, ev, alpha)
        return min(Fb - Bb, 1e6)

    g_lo, g_hi = gap(lo), gap(hi)
    if g_lo >= 0:
        return lo
    if g_hi <= 0:
        return hi
    return scipy.optimize.brentq(gap, lo, hi, xtol=CROSSOVER_XTOL)


def integral_I(params, sievefn_table, ev, tol=INTEGRAL_TOL):
    """
    :math:`I(\\theta_1, \\theta_2) = \\int_{\\theta_1}^{1/3} \\alpha^{-1}\\min\\{F, B\\}\\,d\\alpha`,
    integrated separately on either side of the point where the Selberg branch
    first beats the vector sieve branch.

    Parameters
    ----------
    params : :class:`~almostprime.bound.params.SieveParams`
    sievefn_table : :class:`~almostprime.table.sievefn.SieveFnTable`
    ev : :class:`~almostprime.selberg.BEvaluator`
    tol : :class:`float`
        Absolute and relative quadrature tolerance.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
        The integral and the crossover :math:`\\alpha`.
    """
    lo, hi = params.theta1, 1.0 / 3
    c = _crossover(params, sievefn_table, ev)
    logger.debug("I crossover at alpha={:.8f}".format(c))

    def vector_branch(alpha):
        return integrand_I_branches(params, sievefn_table, ev, alpha)[0] / alpha

    def selberg_branch(alpha):
        s1, s2 = sigma_pair(alpha, params.theta1, params.theta2, level=4)
        return big_B(ev, s1, s2) / alpha

    total = 0.0
    for func, a, b in ((vector_branch, lo, c), (selberg_branch, c, hi)):
        if b > a:
            value, err = scipy.integrate.quad(func, a, b, epsabs=tol, epsrel=tol, limit=100)
            logger.debug("I on [{:.6f}, {:.6f}] = {:.10f} (est. err {:.1e})".format(a, b, value, err))
            total += value
    return total, c


def _check_J_domain(params):
    v = (1.0 - 2.0 * params.theta) / (4.0 * params.theta2)
    if v < 2:
        raise DomainError(
            "J requires (1 - 2*theta)/(4*theta2) >= 2, i.e. 4*theta2 + theta <= 1/2; "
            "got {:g}".format(v)
        )


def integral_J(params, ev, tol=INTEGRAL_TOL):
    """
    :math:`J(\\theta_1, \\theta_2, \\theta) = \\int_{\\theta_2}^{\\theta}
    \\frac{4\\theta_1}{1-2\\alpha}\\,\\frac{\\theta-\\alpha}{\\alpha\\theta}\\,
    B\\left(1, \\frac{1-2\\alpha}{4\\theta_2}\\right)d\\alpha`.

    Parameters
    ----------
    params : :class:`~almostprime.bound.params.SieveParams`
    ev : :class:`~almostprime.selberg.BEvaluator`
    tol : :class:`float`
        Absolute and relative quadrature tolerance.

    Returns
    -------
    :class:`float`
    """
    _check_J_domain(params)
    t1, t2, t = params.theta1, params.theta2, params.theta

    def integrand(alpha):
        v = (1.0 - 2.0 * alpha) / (4.0 * t2)
        return 4.0 * t1 / (1.0 - 2.0 * alpha) * (t - alpha) / (alpha * t) * big_B_1v(ev, v)

    value, err = scipy.integrate.quad(integrand, t2, t, epsabs=tol, epsrel=tol)
    return value


def integral_J_closed_form(params):
    """
    :math:`J` from its elementary antiderivative after substituting
    :math:`B(1, v) = e^\\gamma v/(v - 1)`.

    Returns
    -------
    :class:`float`
    """
    _check_J_domain(params)
    t1, t2, t = params.theta1, params.theta2, params.theta
    c = 1.0 - 4.0 * t2
    q = math.log((c - 2.0 * t) / (c - 2.0 * t2))
    bracket = (math.log(t / t2) - q) / c + q / (2.0 * t)
    return 4.0 * t1 * math.exp(np.euler_gamma) * bracket


def integral_L(s, tol=1e-10):
    """
    :math:`L(s) = \\int_{1/s}^{1/3}\\int_{1/3}^{(1-\\beta)/2}
    \\frac{d\\alpha\\,d\\beta}{\\alpha\\beta(1-\\alpha-\\beta)}`, with the inner
    integral :math:`\\log(2 - 3\\beta)/(1 - \\beta)` done in closed form.

    Parameters
    ----------
    s : :class:`float`
        Upper parameter; the range is empty for :math:`s \\le 3`.

    Returns
    -------
    :class:`float`
    """
    if s <= 3:
        logger.warning("L(s) has an empty range for s={:g} <= 3; returning 0.".format(s))
        return 0.0

    def integrand(beta):
        return math.log(2.0 - 3.0 * beta) / (beta * (1.0 - beta))

    value, err = scipy.integrate.quad(integrand, 1.0 / s, 1.0 / 3, epsabs=tol, epsrel=tol)
    return value
