"""
Panel quadrature on unit intervals, shared by the tabulated delay-equation
solutions. Grids are aligned with the integers so that every function is smooth
within a panel :math:`[k, k+1]`; stencils never cross a panel boundary.
"""
import functools
import numpy as np
import scipy.interpolate
from ..util.errors import DomainError
from ..util.log import Handle

logger = Handle(__name__)

PANEL_ORDER = 6


def steps_per_unit(step):
    """
    Number of grid steps per unit panel for a grid spacing.

    Parameters
    ----------
    step : :class:`float`
        Grid spacing, which must divide one.

    Returns
    -------
    :class:`int`
    """
    if not step > 0:
        raise DomainError("step must be positive, got {}".format(step))
    n = int(round(1.0 / step))
    if abs(n * step - 1.0) > 1e-12:
        raise DomainError("step must divide one (1/step integral), got {}".format(step))
    return n


@functools.lru_cache(maxsize=16)
def _subinterval_weights(n, order):
    W = np.zeros((n, n + 1))
    m = min(order, n + 1)
    moments = 1.0 / np.arange(1, m + 1)
    for j in range(n):
        start = min(max(j - (m // 2 - 1), 0), n + 1 - m)
        nodes = np.arange(start, start + m, dtype=float) - j
        vander = np.vander(nodes, m, increasing=True).T
        W[j, start : start + m] = np.linalg.solve(vander, moments)
    W.setflags(write=False)
    return W


def subinterval_weights(n, step, order=PANEL_ORDER):
    """
    Weights integrating a function sampled on a panel over each grid step.

    Row :math:`j` of the returned matrix gives
    :math:`\\int_{x_j}^{x_{j+1}} g \\approx \\sum_i W_{ji} g(x_i)`, using a
    Lagrange stencil of `order` points that stays inside the panel.

    Parameters
    ----------
    n : :class:`int`
        Steps per panel.
    step : :class:`float`
        Grid spacing.
    order : :class:`int`
        Number of stencil points.

    Returns
    -------
    :class:`numpy.ndarray`
        Array of shape `(n, n + 1)`.
    """
    return _subinterval_weights(int(n), int(order)) * step


def integrate_panels(values, step, order=PANEL_ORDER):
    """
    Integrate panel-aligned samples over the whole grid.

    Parameters
    ----------
    values : :class:`numpy.ndarray`
        Samples on a grid of `K * n + 1` points starting at an integer.
    step : :class:`float`
        Grid spacing.

    Returns
    -------
    :class:`float`
    """
    n = steps_per_unit(step)
    panels = (values.size - 1) // n
    colsum = subinterval_weights(n, step, order).sum(axis=0)
    blocks = np.lib.stride_tricks.sliding_window_view(values, n + 1)[::n][:panels]
    return float((blocks @ colsum).sum())


def panel_interpolant(grid, values, n):
    """
    Piecewise cubic interpolant built from one cubic spline per unit panel,
    joined into a single :class:`scipy.interpolate.PPoly`.

    Parameters
    ----------
    grid : :class:`numpy.ndarray`
        Panel-aligned abscissae.
    values : :class:`numpy.ndarray`
        Ordinates.
    n : :class:`int`
        Steps per panel.

    Returns
    -------
    :class:`scipy.interpolate.PPoly`
    """
    panels = (grid.size - 1) // n
    coeffs, breaks = [], [grid[:1]]
    for k in range(panels):
        sl = slice(k * n, (k + 1) * n + 1)
        spline = scipy.interpolate.CubicSpline(grid[sl], values[sl])
        coeffs.append(spline.c)
        breaks.append(grid[sl][1:])
    return scipy.interpolate.PPoly(
        np.concatenate(coeffs, axis=1), np.concatenate(breaks), extrapolate=False
    )
