"""
One-dimensional bounded optimisation: a dense grid scan followed by golden
section refinement around the best cell, with a finer grid used to certify the
result.
"""
import math
import numpy as np
from .util.errors import DomainError
from .util.log import Handle

logger = Handle(__name__)

GRID_POINTS = 1024
CERTIFY_POINTS = 4096
CERTIFY_TOL = 1e-6

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2


def golden_section(func, a, b, tol=1e-12):
    """
    Golden section search for a minimum of `func` on `[a, b]`.

    Parameters
    ----------
    func : :class:`callable`
        Scalar function of one variable.
    a, b : :class:`float`
        Interval end points.
    tol : :class:`float`
        Width of the final bracket.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
        Abscissa and value of the best point visited.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, func(a)
    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c, d = a + INV_PHI_SQUARE * h, a + INV_PHI * h
    yc, yd = func(c), func(d)
    for _ in range(steps - 1):
        if yc <= yd:
            b, d, yd = d, c, yc
            h *= INV_PHI
            c = a + INV_PHI_SQUARE * h
            yc = func(c)
        else:
            a, c, yc = c, d, yd
            h *= INV_PHI
            d = a + INV_PHI * h
            yd = func(d)
    return (c, yc) if yc <= yd else (d, yd)


def _scan(vfunc, lo, hi, points):
    x = np.linspace(lo, hi, int(points))
    y = np.asarray(vfunc(x), dtype=float)
    i = int(np.argmin(y))  # first occurrence: smallest abscissa wins ties
    return x, y, i


def grid_minimize(vfunc, lo, hi, points=GRID_POINTS, certify=CERTIFY_POINTS):
    """
    Minimise a vectorised function on `[lo, hi]`.

    The grid minimum is refined by golden section over its two neighbouring
    cells; the refined value is only accepted where it improves on the grid. A
    second scan with `certify` points must not beat the result by more than
    :data:`CERTIFY_TOL`, otherwise a warning is logged and the better point is
    returned.

    Parameters
    ----------
    vfunc : :class:`callable`
        Function accepting and returning :class:`numpy.ndarray`.
    lo, hi : :class:`float`
        Interval end points, `lo <= hi`.
    points : :class:`int`
        Size of the coarse grid.
    certify : :class:`int` | `None`
        Size of the certification grid, or `None` to skip certification.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
        Abscissa and value of the minimum.
    """
    if not hi >= lo:
        raise DomainError("empty interval [{}, {}]".format(lo, hi))
    if hi == lo:
        return float(lo), float(np.asarray(vfunc(np.array([lo])))[0])
    x, y, i = _scan(vfunc, lo, hi, points)
    best_x, best_y = float(x[i]), float(y[i])

    def scalar(t):
        return float(np.asarray(vfunc(np.array([t])))[0])

    a, b = x[max(i - 1, 0)], x[min(i + 1, x.size - 1)]
    gx, gy = golden_section(scalar, a, b)
    if gy < best_y:
        best_x, best_y = float(gx), float(gy)

    if certify:
        cx, cy, j = _scan(vfunc, lo, hi, certify)
        gap = best_y - cy[j]
        logger.debug("Certification gap {:.3e} on [{:g}, {:g}]".format(gap, lo, hi))
        if gap > CERTIFY_TOL:
            logger.warning(
                "Optimum on [{:g}, {:g}] not certified: finer grid improves by {:.2e}.".format(
                    lo, hi, gap
                )
            )
            best_x, best_y = float(cx[j]), float(cy[j])
    return best_x, best_y


def grid_maximize(vfunc, lo, hi, points=GRID_POINTS, certify=CERTIFY_POINTS):
    """
    Maximise a vectorised function on `[lo, hi]`; see :func:`grid_minimize`.

    Returns
    -------
    :class:`tuple` ( :class:`float`, :class:`float` )
        Abscissa and value of the maximum.
    """
    x, y = grid_minimize(
        lambda t: -np.asarray(vfunc(t), dtype=float), lo, hi, points, certify
    )
    return x, -y
