"""
Counting primes :math:`p \\le x` with :math:`p + 2` and :math:`p + 6` almost
prime, against the Hardy-Littlewood prediction for prime triples.
"""
import math
from dataclasses import dataclass
import numpy as np
import pandas as pd
import scipy.integrate
from tqdm import tqdm
from .factor import build_factor_sieve
from ..bound.constant import hl_constant_C, HL_PLIMIT
from ..util.errors import DomainError
from ..util.log import Handle

logger = Handle(__name__)

SEGMENT_SIZE = 2 ** 22
OVERLAP = 6
RELIABLE_X = 100
CSV_COLUMNS = ["x", "exact", "chen", "prediction", "ratio"]
OMEGA_CONVENTION = "prime factors counted with multiplicity (Omega)"


@dataclass(frozen=True)
class TripleCount:
    """
    Counts of primes :math:`p \\le x` with :math:`\\Omega(p+2) \\le 2,
    \\Omega(p+6) \\le r` (`count_chen`) and with :math:`p+2, p+6` both prime
    (`count_exact`), and the prediction :math:`Cx/\\log^3 x` for the latter.
    """

    x: int
    r: int
    count_chen: int
    count_exact: int
    hl_prediction: float


def _counted_primes(x, r, segment=SEGMENT_SIZE):
    """
    Stream the interval `[2, x]` in segments and collect the primes satisfying
    each condition.

    Returns
    -------
    chen, exact : :class:`numpy.ndarray`
    """
    chen, exact = [], []
    starts = range(2, x + 1, segment)
    for start in tqdm(starts, desc="segments", disable=len(starts) < 2):
        stop = min(start + segment, x + 1)
        sieve = build_factor_sieve(start, stop + OVERLAP, budget=segment + OVERLAP)
        omega = sieve.omega_big
        size = stop - start
        prime = omega[:size] == 1
        twin = omega[2 : size + 2]
        six = omega[6 : size + 6]
        p = np.arange(start, stop, dtype=np.int64)
        chen.append(p[prime & (twin <= 2) & (six <= r)])
        exact.append(p[prime & (twin == 1) & (six == 1)])
    return np.concatenate(chen), np.concatenate(exact)


def _validate(x, r):
    if x < 10:
        raise DomainError("requires x >= 10, got {}".format(x))
    if r < 1:
        raise DomainError("requires r >= 1, got {}".format(r))


def hl_prediction(x, C):
    """:math:`C x / \\log^3 x`."""
    return C * x / math.log(x) ** 3


def hl_integral_prediction(x, C):
    """:math:`C \\int_2^x dt / \\log^3 t`."""
    value, _ = scipy.integrate.quad(lambda t: 1.0 / math.log(t) ** 3, 2.0, float(x), limit=200)
    return C * value


def chen_primes(x, r):
    """
    Primes :math:`p \\le x` with :math:`\\Omega(p+2) \\le 2` and
    :math:`\\Omega(p+6) \\le r`.

    Returns
    -------
    :class:`numpy.ndarray`
    """
    _validate(x, r)
    return _counted_primes(int(x), int(r))[0]


def count_chen_triples(x, r, p_limit=HL_PLIMIT):
    """
    Count the primes counted by the almost-prime statement up to `x`.

    Parameters
    ----------
    x : :class:`int`
        Upper limit, at least 10.
    r : :class:`int`
        Largest :math:`\\Omega(p + 6)`, at least 1.
    p_limit : :class:`int`
        Prime limit for the Hardy-Littlewood constant.

    Returns
    -------
    :class:`TripleCount`
    """
    _validate(x, r)
    chen, exact = _counted_primes(int(x), int(r))
    C, _ = hl_constant_C(p_limit)
    return TripleCount(int(x), int(r), int(chen.size), int(exact.size), hl_prediction(x, C))


def density_report(x_list, r, p_limit=HL_PLIMIT):
    """
    Counts and Hardy-Littlewood ratios at increasing limits, from a single
    pass over the interval up to the largest limit.

    Parameters
    ----------
    x_list : :class:`list`
        Strictly increasing limits, each at least 10.
    r : :class:`int`
    p_limit : :class:`int`

    Returns
    -------
    :class:`pandas.DataFrame`
        Columns `x, exact, chen, prediction, ratio, prediction_li, ratio_li,
        reliable`.
    """
    xs = [int(x) for x in x_list]
    if not xs or any(b <= a for a, b in zip(xs, xs[1:])):
        raise DomainError("x_list must be non-empty and strictly increasing")
    for x in xs:
        _validate(x, r)
    chen, exact = _counted_primes(xs[-1], int(r))
    C, _ = hl_constant_C(p_limit)
    df = pd.DataFrame({"x": xs})
    df["exact"] = np.searchsorted(exact, xs, side="right")
    df["chen"] = np.searchsorted(chen, xs, side="right")
    df["prediction"] = [hl_prediction(x, C) for x in xs]
    df["ratio"] = df["exact"] / df["prediction"]
    df["prediction_li"] = [hl_integral_prediction(x, C) for x in xs]
    df["ratio_li"] = df["exact"] / df["prediction_li"]
    df["reliable"] = df["x"] >= RELIABLE_X
    for x in df.loc[~df["reliable"], "x"]:
        logger.warning("Ratio at x={:d} < {:d} is outside the asymptotic regime.".format(x, RELIABLE_X))
    return df


def density_csv(df):
    """
    CSV rendering of a density report with header `x,exact,chen,prediction,ratio`.

    Returns
    -------
    :class:`str`
    """
    return df[CSV_COLUMNS].to_csv(index=False, float_format="%.10g")
