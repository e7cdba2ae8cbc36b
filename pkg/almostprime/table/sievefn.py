"""
Upper and lower bound functions :math:`F(s)`, :math:`f(s)` of the linear sieve
and their two-variable vector-sieve combinations.

The functions are the continuous solutions of

.. math::

    (sF(s))' = f(s-1), \\quad (sf(s))' = F(s-1)

with :math:`F(s) = 2e^\\gamma/s` on :math:`(0, 3]` and
:math:`f(s) = 2e^\\gamma\\log(s-1)/s` on :math:`[2, 4]`. Tabulation proceeds one
unit panel at a time from these seeds; both functions converge to one
super-exponentially fast and are replaced by one beyond an integer cutoff.
"""
import math
import numpy as np
from .panel import steps_per_unit, subinterval_weights, panel_interpolant
from .store import load_arrays, dump_arrays
from ..optimize import grid_minimize, grid_maximize
from ..util.errors import DomainError
from ..util.log import Handle

logger = Handle(__name__)

SIEVEFN_S_MAX = 210.0
SIEVEFN_STEP = 1.0 / 256
SIEVEFN_MAX_STEP = 1.0 / 64
CUTOFF_TOL = 1e-9

TWO_EXP_GAMMA = 2.0 * math.exp(np.euler_gamma)


class SieveFnTable(object):
    """
    Immutable paired grids of :math:`F` and :math:`f` starting at :math:`s=1`.

    Parameters
    ----------
    s_max : :class:`float`
        Upper end of the requested range.
    step : :class:`float`
        Grid spacing.
    F_values, f_values : :class:`numpy.ndarray`
        Function values on the grid `1, 1 + step, ...`.
    cutoff : :class:`float`
        Integer beyond which both functions are taken to be one.
    cutoff_err : :class:`float`
        :math:`F - f` at the cutoff, bounding the error of that replacement.
    """

    def __init__(self, s_max, step, F_values, f_values, cutoff, cutoff_err):
        self.s_max = float(s_max)
        self.step = float(step)
        self.n = steps_per_unit(step)
        self.F_values = np.array(F_values, dtype=float)
        self.f_values = np.array(f_values, dtype=float)
        self.cutoff = float(cutoff)
        self.cutoff_err = float(cutoff_err)
        self.grid = 1.0 + np.arange(self.F_values.size) / self.n
        for arr in (self.F_values, self.f_values, self.grid):
            arr.setflags(write=False)
        end = int(round((self.cutoff - 1.0) * self.n)) + 1
        self._F = panel_interpolant(self.grid[:end], self.F_values[:end], self.n)
        self._f = panel_interpolant(self.grid[:end], self.f_values[:end], self.n)

    def __repr__(self):
        return "SieveFnTable(s_max={:g}, step=1/{:d}, cutoff={:g}, cutoff_err={:.2e})".format(
            self.s_max, self.n, self.cutoff, self.cutoff_err
        )


def _solve_sievefn(panels, n):
    """
    Integrate the delay system on unit panels `[k, k+1]`, `k = 1..panels`.

    Returns
    -------
    F_values, f_values : :class:`numpy.ndarray`
    cutoff, cutoff_err : :class:`float`
    """
    step = 1.0 / n
    s = 1.0 + np.arange(panels * n + 1) * step
    F_values = np.ones_like(s)
    f_values = np.ones_like(s)
    seedF = s <= 3.0
    F_values[seedF] = TWO_EXP_GAMMA / s[seedF]
    f_values[s <= 2.0] = 0.0
    seedf = (s >= 2.0) & (s <= 4.0)
    f_values[seedf] = TWO_EXP_GAMMA * np.log(s[seedf] - 1.0) / s[seedf]

    W = subinterval_weights(n, step)
    offsets = np.arange(1, n + 1) * step

    def panel(k):
        return slice((k - 1) * n, k * n + 1)

    for k in range(3, panels + 1):
        start = (k - 1) * n
        delayed = f_values[panel(k - 1)]
        F_values[start + 1 : start + n + 1] = (
            k * F_values[start] + np.cumsum(W @ delayed)
        ) / (k + offsets)
        if k >= 4:
            delayed = F_values[panel(k - 1)]
            f_values[start + 1 : start + n + 1] = (
                k * f_values[start] + np.cumsum(W @ delayed)
            ) / (k + offsets)
        end = start + n
        gap = F_values[end] - f_values[end]
        if gap < CUTOFF_TOL:
            F_values[end + 1 :] = 1.0
            f_values[end + 1 :] = 1.0
            return F_values, f_values, float(k + 1), float(gap)
    raise DomainError("F - f did not fall below {:.0e} by s={:d}".format(CUTOFF_TOL, panels + 1))


def build_sievefn_table(s_max=SIEVEFN_S_MAX, step=SIEVEFN_STEP, cache_dir=None):
    """
    Build (or load from cache) the table of the linear sieve functions.

    Parameters
    ----------
    s_max : :class:`float`
        Upper end of the table, at least 210.
    step : :class:`float`
        Grid spacing, at most 1/64 and dividing one.
    cache_dir : :class:`str` | :class:`pathlib.Path`
        Folder holding the HDF cache. No caching if `None`.

    Returns
    -------
    :class:`SieveFnTable`
    """
    if not step > 0 or step > SIEVEFN_MAX_STEP:
        raise DomainError("step must lie in (0, 1/64], got {}".format(step))
    if s_max < SIEVEFN_S_MAX:
        raise DomainError("s_max must be at least 210, got {}".format(s_max))
    n = steps_per_unit(step)
    if cache_dir is not None:
        cached = load_arrays("sievefn", s_max, step, cache_dir)
        if cached is not None:
            arrays, attrs = cached
            return SieveFnTable(
                s_max, step, arrays["F"], arrays["f"], attrs["cutoff"], attrs["cutoff_err"]
            )

    panels = int(math.ceil(s_max)) - 1
    logger.info("Building F, f table on [1, {:d}] with {:d} steps/unit.".format(panels + 1, n))
    F_values, f_values, cutoff, cutoff_err = _solve_sievefn(panels, n)
    logger.info("F, f replaced by 1 beyond s={:g} (F - f = {:.2e})".format(cutoff, cutoff_err))
    table = SieveFnTable(s_max, step, F_values, f_values, cutoff, cutoff_err)
    if cache_dir is not None:
        dump_arrays(
            "sievefn",
            s_max,
            step,
            cache_dir,
            arrays={"F": table.F_values, "f": table.f_values},
            attrs={"cutoff": cutoff, "cutoff_err": cutoff_err},
        )
    return table


def F_array(table, s):
    """
    Upper bound function evaluated over an array.

    Parameters
    ----------
    table : :class:`SieveFnTable`
    s : :class:`numpy.ndarray`
        Positive arguments.

    Returns
    -------
    :class:`numpy.ndarray`
    """
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise DomainError("F is defined for s > 0 only")
    out = np.ones_like(s)
    seed = s <= 3.0
    out[seed] = TWO_EXP_GAMMA / s[seed]
    mid = (s > 3.0) & (s <= table.cutoff)
    if mid.any():
        out[mid] = np.maximum(table._F(s[mid]), 1.0)
    return out


def f_array(table, s):
    """
    Lower bound function evaluated over an array.

    Parameters
    ----------
    table : :class:`SieveFnTable`
    s : :class:`numpy.ndarray`

    Returns
    -------
    :class:`numpy.ndarray`
    """
    s = np.asarray(s, dtype=float)
    out = np.ones_like(s)
    out[s <= 2.0] = 0.0
    seed = (s > 2.0) & (s <= 4.0)
    out[seed] = TWO_EXP_GAMMA * np.log(s[seed] - 1.0) / s[seed]
    mid = (s > 4.0) & (s <= table.cutoff)
    if mid.any():
        out[mid] = np.minimum(table._f(s[mid]), 1.0)
    return out


def F(table, s):
    """
    Upper bound function :math:`F(s)`, one beyond the table cutoff.

    Parameters
    ----------
    table : :class:`SieveFnTable`
    s : :class:`float`
        Argument, :math:`s > 0`.

    Returns
    -------
    :class:`float`
    """
    return float(F_array(table, np.atleast_1d(s))[0])


def f(table, s):
    """
    Lower bound function :math:`f(s)`, zero for :math:`s \\le 2` and one beyond
    the table cutoff.

    Parameters
    ----------
    table : :class:`SieveFnTable`
    s : :class:`float`

    Returns
    -------
    :class:`float`
    """
    return float(f_array(table, np.atleast_1d(s))[0])


def sigma_pair(alpha, theta1, theta2, level=2):
    """
    Arguments :math:`((1-2\\alpha)/(\\ell\\theta_1), (1-2\\alpha)/(\\ell\\theta_2))`
    of the two-variable functions at a prime of size :math:`x^\\alpha`; `level`
    is 2 for the vector sieve and 4 for the Selberg sieve.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
    """
    if level not in (2, 4):
        raise DomainError("level must be 2 or 4, got {}".format(level))
    top = 1.0 - 2.0 * alpha
    return top / (level * theta1), top / (level * theta2)


def _segment(sigma1, sigma2, smin, name):
    if sigma1 <= 0 or sigma2 <= 0:
        raise DomainError("{} requires positive sigma1, sigma2".format(name))
    if smin / sigma1 + smin / sigma2 > 1.0 + 1e-12:
        raise DomainError(
            "{} requires {g}/sigma1 + {g}/sigma2 <= 1, got sigma=({:g}, {:g})".format(
                name, sigma1, sigma2, g=smin
            )
        )
    hi = max(sigma1 * (1.0 - smin / sigma2), smin)

    def other(s1):
        return np.maximum(sigma2 * (1.0 - s1 / sigma1), smin)

    return smin, hi, other


def F2_argmin(table, sigma1, sigma2):
    """
    Constrained infimum of :math:`F(s_1)F(s_2)` over
    :math:`s_1/\\sigma_1 + s_2/\\sigma_2 = 1`, :math:`s_i \\ge 1`.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float`, :class:`float` )
        Value and the minimising :math:`(s_1, s_2)`.
    """
    lo, hi, other = _segment(sigma1, sigma2, 1.0, "F2")

    def objective(s1):
        return F_array(table, s1) * F_array(table, other(s1))

    s1, value = grid_minimize(objective, lo, hi)
    return value, s1, float(other(np.array([s1]))[0])


def f2_argmax(table, sigma1, sigma2):
    """
    Constrained supremum of :math:`f(s_1)F(s_2) + f(s_2)F(s_1) - F(s_1)F(s_2)`
    over :math:`s_1/\\sigma_1 + s_2/\\sigma_2 = 1`, :math:`s_i \\ge 2`.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float`, :class:`float` )
        Value and the maximising :math:`(s_1, s_2)`.
    """
    lo, hi, other = _segment(sigma1, sigma2, 2.0, "f2")

    def objective(s1):
        s2 = other(s1)
        F1, F2_ = F_array(table, s1), F_array(table, s2)
        return f_array(table, s1) * F2_ + f_array(table, s2) * F1 - F1 * F2_

    s1, value = grid_maximize(objective, lo, hi)
    return value, s1, float(other(np.array([s1]))[0])


def F2(table, sigma1, sigma2):
    """
    Two-variable upper bound function :math:`F(\\sigma_1, \\sigma_2)`.

    Parameters
    ----------
    table : :class:`SieveFnTable`
    sigma1, sigma2 : :class:`float`
        Arguments with :math:`1/\\sigma_1 + 1/\\sigma_2 \\le 1`.

    Returns
    -------
    :class:`float`
    """
    return F2_argmin(table, sigma1, sigma2)[0]


def f2(table, sigma1, sigma2):
    """
    Two-variable lower bound function :math:`f(\\sigma_1, \\sigma_2)`.

    Parameters
    ----------
    table : :class:`SieveFnTable`
    sigma1, sigma2 : :class:`float`
        Arguments with :math:`2/\\sigma_1 + 2/\\sigma_2 \\le 1`.

    Returns
    -------
    :class:`float`
    """
    return f2_argmax(table, sigma1, sigma2)[0]
