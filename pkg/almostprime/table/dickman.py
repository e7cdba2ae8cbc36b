"""
Dickman's function :math:`\\rho(s)`, tabulated panel by panel.

:math:`\\rho` is the continuous solution of :math:`s\\rho'(s) = -\\rho(s-1)` with
:math:`\\rho = 1` on :math:`(0, 1]`. The table is built from the equivalent
identity :math:`s\\rho(s) = \\int_{s-1}^{s}\\rho(t)\\,dt`, one unit panel at a time,
so that the delayed argument always falls in the panel already computed.
"""
import math
import numpy as np
import scipy.linalg
from .panel import (
    PANEL_ORDER,
    steps_per_unit,
    subinterval_weights,
    integrate_panels,
    panel_interpolant,
)
from .store import load_arrays, dump_arrays
from ..util.errors import DomainError
from ..util.log import Handle

logger = Handle(__name__)

RHO_S_MAX = 250.0
RHO_STEP = 1.0 / 256
RHO_MAX_STEP = 1.0 / 64
RHO_MIN_S_MAX = 4.0
RHO_TOLERANCE = 1e-10
# rho(250) < 1e-300; values below this are stored as zero
RHO_UNDERFLOW = 1e-300


class RhoTable(object):
    """
    Immutable grid of Dickman :math:`\\rho` values and of its antiderivative
    :math:`R(x) = \\int_0^x \\rho`.

    Parameters
    ----------
    s_max : :class:`float`
        Upper end of the requested range.
    step : :class:`float`
        Grid spacing; `1 / step` must be an integer.
    values : :class:`numpy.ndarray`
        :math:`\\rho` at the grid points `0, step, 2 step, ...`.
    err_bound : :class:`float`
        Uniform absolute error bound for tabulated and interpolated values.
    cumulative : :class:`numpy.ndarray`
        :math:`R` at the grid points.
    """

    def __init__(self, s_max, step, values, err_bound, cumulative):
        self.s_max = float(s_max)
        self.step = float(step)
        self.n = steps_per_unit(step)
        self.values = np.array(values, dtype=float)
        self.cumulative = np.array(cumulative, dtype=float)
        self.err_bound = float(err_bound)
        self.grid = np.arange(self.values.size) / self.n
        for arr in (self.values, self.cumulative, self.grid):
            arr.setflags(write=False)
        self._rho = panel_interpolant(self.grid, self.values, self.n)
        self._cumulative = panel_interpolant(self.grid, self.cumulative, self.n)

    @property
    def s_end(self):
        return float(self.grid[-1])

    def __repr__(self):
        return "RhoTable(s_max={:g}, step=1/{:d}, err_bound={:.2e})".format(
            self.s_max, self.n, self.err_bound
        )


def _solve_rho(panels, n, order=PANEL_ORDER):
    """
    Solve :math:`s\\rho(s) = \\int_{s-1}^{s}\\rho` on `panels` unit panels with
    `n` steps each. Each panel is one linear system in its `n` unknown values;
    the right hand side is a positive combination of the previous panel, so
    relative accuracy survives the super-exponential decay of :math:`\\rho`.

    Returns
    -------
    values, cumulative : :class:`numpy.ndarray`
    """
    step = 1.0 / n
    size = panels * n + 1
    values = np.zeros(size)
    cumulative = np.zeros(size)
    values[: n + 1] = 1.0
    cumulative[: n + 1] = np.arange(n + 1) * step

    W = subinterval_weights(n, step, order)
    running = np.cumsum(W, axis=0)  # row j-1: integral from panel start to x_j
    offsets = np.arange(1, n + 1) * step
    for k in range(1, panels):
        prev = values[(k - 1) * n : k * n + 1]
        if not prev.any():
            cumulative[k * n + 1 :] = cumulative[k * n]
            break
        pieces = W @ prev
        tails = np.cumsum(pieces[::-1])[::-1]
        rhs = np.append(tails[1:], 0.0) + running[:, 0] * values[k * n]
        system = np.diag(k + offsets) - running[:, 1:]
        panel = scipy.linalg.solve(system, rhs)
        panel[panel < RHO_UNDERFLOW] = 0.0
        values[k * n + 1 : (k + 1) * n + 1] = panel
        current = values[k * n : (k + 1) * n + 1]
        cumulative[k * n + 1 : (k + 1) * n + 1] = cumulative[k * n] + np.cumsum(
            W @ current
        )
    return values, cumulative


def _richardson_bound(values, fine, n):
    """
    Error bound from comparing a table with one built at half the step, at the
    shared grid points and at the midpoints reached only by interpolation.
    """
    grid_diff = np.abs(values - fine[::2]).max()
    grid = np.arange(values.size) / n
    mids = (np.arange(1, fine.size, 2)) / (2 * n)
    interp = panel_interpolant(grid, values, n)
    mid_diff = np.abs(np.nan_to_num(interp(mids)) - fine[1::2]).max()
    return max(2.0 * max(grid_diff, mid_diff), np.finfo(float).eps)


def build_rho_table(s_max=RHO_S_MAX, step=RHO_STEP, cache_dir=None):
    """
    Build (or load from cache) the table of Dickman's function.

    Parameters
    ----------
    s_max : :class:`float`
        Upper end of the table, at least 4.
    step : :class:`float`
        Grid spacing, at most 1/64 and dividing one.
    cache_dir : :class:`str` | :class:`pathlib.Path`
        Folder holding the HDF cache. No caching if `None`.

    Returns
    -------
    :class:`RhoTable`
    """
    if not step > 0 or step > RHO_MAX_STEP:
        raise DomainError("step must lie in (0, 1/64], got {}".format(step))
    if s_max < RHO_MIN_S_MAX:
        raise DomainError("s_max must be at least 4, got {}".format(s_max))
    n = steps_per_unit(step)
    if cache_dir is not None:
        cached = load_arrays("rho", s_max, step, cache_dir)
        if cached is not None:
            arrays, attrs = cached
            return RhoTable(
                s_max, step, arrays["values"], attrs["err_bound"], arrays["cumulative"]
            )

    panels = int(math.ceil(s_max))
    logger.info("Building rho table on [0, {:d}] with {:d} steps/unit.".format(panels, n))
    values, cumulative = _solve_rho(panels, n)
    fine, _ = _solve_rho(panels, 2 * n)
    err_bound = _richardson_bound(values, fine, n)
    logger.info("rho table error bound {:.3e}".format(err_bound))
    if err_bound > RHO_TOLERANCE:
        logger.warning(
            "rho error bound {:.3e} exceeds {:.0e}; use a smaller step.".format(
                err_bound, RHO_TOLERANCE
            )
        )
    zero = np.flatnonzero(values == 0.0)
    if zero.size:
        logger.debug("rho clamped to zero from s={:.4f}".format(zero[0] / n))

    table = RhoTable(s_max, step, values, err_bound, cumulative)
    if cache_dir is not None:
        dump_arrays(
            "rho",
            s_max,
            step,
            cache_dir,
            arrays={"values": table.values, "cumulative": table.cumulative},
            attrs={"err_bound": err_bound},
        )
    return table


def rho(table, s):
    """
    Dickman's function.

    Parameters
    ----------
    table : :class:`RhoTable`
    s : :class:`float` | :class:`numpy.ndarray`

    Returns
    -------
    :class:`float` | :class:`numpy.ndarray`
        0 for :math:`s \\le 0`, 1 on :math:`(0, 1]`, interpolated values up to
        `s_max` and 0 beyond (:math:`\\rho(250) < 10^{-300}`).
    """
    s_arr = np.asarray(s, dtype=float)
    out = np.zeros_like(s_arr)
    out[(s_arr > 0) & (s_arr <= 1)] = 1.0
    mid = (s_arr > 1) & (s_arr <= min(table.s_max, table.s_end))
    if mid.any():
        out[mid] = np.maximum(table._rho(s_arr[mid]), 0.0)
    return float(out) if out.ndim == 0 else out


def rho_integral(table, x):
    """
    Antiderivative :math:`R(x) = \\int_0^x \\rho(t)\\,dt`, constant beyond the table.

    Parameters
    ----------
    table : :class:`RhoTable`
    x : :class:`float` | :class:`numpy.ndarray`

    Returns
    -------
    :class:`float` | :class:`numpy.ndarray`
    """
    x_arr = np.clip(np.asarray(x, dtype=float), 0.0, table.s_end)
    out = np.where(x_arr <= 1.0, x_arr, 0.0)
    mid = x_arr > 1.0
    if mid.any():
        out[mid] = table._cumulative(x_arr[mid])
    return float(out) if out.ndim == 0 else out


def rho_moment_checks(table, upto=None):
    """
    Zeroth and first moments of :math:`\\rho`, both equal to :math:`e^\\gamma`.

    Parameters
    ----------
    table : :class:`RhoTable`
        Table built with `s_max >= 40`.
    upto : :class:`float`
        Truncation point of the integrals (whole panels), defaults to the end of
        the table.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
    """
    if table.s_max < 40:
        raise DomainError("moment checks need s_max >= 40, got {:g}".format(table.s_max))
    panels = int(table.s_end if upto is None else min(math.floor(upto), table.s_end))
    sl = slice(0, panels * table.n + 1)
    values, grid = table.values[sl], table.grid[sl]
    m0 = integrate_panels(values, table.step)
    m1 = integrate_panels(grid * values, table.step)
    logger.debug("rho moments to s={:d}: {:.12f}, {:.12f}".format(panels, m0, m1))
    return m0, m1


def rho_factorial_bound_check(table, n_max=20):
    """
    Integers :math:`2 \\le n \\le n_{max}` at which :math:`\\rho(n) \\le 1/n!` fails,
    with `n_max` clamped to the end of the table.

    Returns
    -------
    :class:`list`
    """
    n_max = min(int(n_max), int(math.floor(table.s_end)))
    return [
        n
        for n in range(2, n_max + 1)
        if table.values[n * table.n] > 0
        and math.log(table.values[n * table.n]) > -math.lgamma(n + 1.0)
    ]
