"""
Deterministic grid-then-refine search for parameters minimising the exponent.
"""
import itertools
from concurrent.futures import ThreadPoolExecutor
import numpy as np
import pandas as pd
from tqdm import tqdm
from .engine import evaluate_H
from .params import SieveParams
from ..util.errors import DomainError, InfeasibleError
from ..util.log import Handle

logger = Handle(__name__)

SEARCH_DIMS = ["theta1", "theta2", "theta"]
LAMBDA_MARGIN = 1e-6


def _rank(point, report):
    """Total order: smaller r, then larger lambda*, then smaller coordinates."""
    return (report.r, -report.lambda_star) + tuple(point)


def _grid(bounds, budget):
    spans = [tuple(map(float, bounds[d])) for d in SEARCH_DIMS]
    live = [lo != hi for lo, hi in spans]
    dim = sum(live)
    n = int(np.floor(budget ** (1.0 / dim) + 1e-9)) if dim else 1
    if n % 2 == 0:
        n -= 1
    n = max(n, 1)
    axes = []
    for (lo, hi), varies in zip(spans, live):
        if varies and n > 1:
            axes.append(np.linspace(lo, hi, n))
        else:
            axes.append(np.array([(lo + hi) / 2.0]))
    steps = [(hi - lo) / max(n - 1, 2) for lo, hi in spans]
    return [tuple(p) for p in itertools.product(*axes)], spans, steps


def _evaluate(point, tables):
    try:
        params = SieveParams(*point)
        return evaluate_H(params, tables)
    except DomainError as e:
        logger.debug("Point {} rejected: {}".format(point, e))
        return None


def parameter_search(bounds, budget, tables, threads=1):
    """
    Search a box of :math:`(\\theta_1, \\theta_2, \\theta)` for the smallest
    exponent :math:`r`, breaking ties by larger :math:`\\lambda^*`.

    A uniform grid with an odd number of points per free dimension (so the box
    centre is always evaluated) is followed by coordinate refinement with the
    remaining budget.

    Parameters
    ----------
    bounds : :class:`dict`
        `(lo, hi)` for each of `theta1`, `theta2`, `theta`; `lo == hi` fixes a
        coordinate.
    budget : :class:`int`
        Maximum number of evaluations, at least one.
    tables : :class:`~almostprime.bound.engine.BoundTables`
    threads : :class:`int`
        Worker threads for the grid stage.

    Returns
    -------
    :class:`tuple`
        Best :class:`~almostprime.bound.params.SieveParams` (with
        :math:`\\lambda` just below :math:`\\lambda^*`), its
        :class:`~almostprime.bound.engine.BoundReport` and a
        :class:`pandas.DataFrame` of every evaluated point.
    """
    budget = int(budget)
    if budget < 1:
        raise DomainError("budget must be at least 1, got {}".format(budget))
    for d in SEARCH_DIMS:
        lo, hi = bounds[d]
        if lo > hi:
            raise DomainError("empty range for {}: ({}, {})".format(d, lo, hi))
    points, spans, steps = _grid(bounds, budget)
    logger.info("Searching {:d} grid points with {:d} threads.".format(len(points), threads))
    with ThreadPoolExecutor(max_workers=max(int(threads), 1)) as pool:
        reports = list(
            tqdm(pool.map(lambda p: _evaluate(p, tables), points), total=len(points), desc="grid")
        )
    evaluated = dict(zip(points, reports))

    def best_of(items):
        feasible = [(p, r) for p, r in items if r is not None]
        return min(feasible, key=lambda pr: _rank(*pr)) if feasible else None

    best = best_of(evaluated.items())
    remaining = budget - len(evaluated)
    steps = list(steps)
    while best is not None and remaining > 0 and max(steps) > 1e-12:
        improved = False
        for i, d in enumerate(SEARCH_DIMS):
            lo, hi = spans[i]
            if lo == hi:
                continue
            for sign in (-1, 1):
                if remaining <= 0:
                    break
                trial = list(best[0])
                trial[i] += sign * steps[i]
                trial = tuple(trial)
                if not lo <= trial[i] <= hi or trial in evaluated:
                    continue
                evaluated[trial] = _evaluate(trial, tables)
                remaining -= 1
                candidate = best_of([best, (trial, evaluated[trial])])
                if candidate[0] != best[0]:
                    best, improved = candidate, True
        if not improved:
            steps = [s / 2.0 for s in steps]
            if all(lo == hi for lo, hi in spans):
                break

    rows = [
        dict(
            theta1=p[0],
            theta2=p[1],
            theta=p[2],
            feasible=r is not None,
            r=r.r if r is not None else np.nan,
            lambda_star=r.lambda_star if r is not None else np.nan,
        )
        for p, r in evaluated.items()
    ]
    points_df = pd.DataFrame(rows)
    if best is None:
        raise InfeasibleError("no feasible parameters among {:d} evaluations".format(len(rows)))
    point, report = best
    params = SieveParams(*point, lam=report.lambda_star * (1.0 - LAMBDA_MARGIN))
    logger.info("Best r={:d} at {}".format(report.r, point))
    return params, report, points_df
