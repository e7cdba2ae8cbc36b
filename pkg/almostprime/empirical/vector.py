"""
Exact checks of the vector sieve inequalities

.. math::

    \\delta(m)\\delta(n) \\le \\delta_1^+(m)\\delta_2^+(n), \\qquad
    \\delta(m)\\delta(n) \\ge \\delta_1^-(m)\\delta_2^+(n) + \\delta_1^+(m)\\delta_2^-(n)
        - \\delta_1^+(m)\\delta_2^+(n),

for the sifting indicator :math:`\\delta(n) = [(n, P(z)) = 1]` and Brun-truncated
Möbius coefficients :math:`\\delta^\\pm(n) = \\sum_{d | (n, P(z))} \\lambda^\\pm(d)`.
"""
import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import numpy as np
import scipy.special
from ..util.errors import BracketingError, DomainError
from ..util.primes import small_primes
from ..util.log import Handle

logger = Handle(__name__)

VALUE_LIMIT = 10 ** 6
TRIALS = 10 ** 5
SEED = 42
GENERATOR = "PCG64"


@dataclass
class VectorSieveReport:
    """
    Outcome of a randomised check of the vector sieve inequalities.
    """

    z: int
    k: int
    D_plus: Optional[int]
    D_minus: Optional[int]
    trials: int
    seed: int
    generator: str = GENERATOR
    violations: List[Tuple[int, int]] = field(default_factory=list)
    convention: str = "delta(n) = 1 iff n has no prime factor below z"

    @property
    def passed(self):
        return not self.violations

    def to_dict(self):
        return {
            "z": self.z,
            "k": self.k,
            "D_plus": self.D_plus,
            "D_minus": self.D_minus,
            "trials": self.trials,
            "seed": self.seed,
            "generator": self.generator,
            "violations": [list(v) for v in self.violations],
            "passed": self.passed,
            "convention": self.convention,
        }


def _distinct_small(values, primes):
    """Boolean matrix: does prime `j` divide value `i`."""
    return (values[:, None] % primes[None, :]) == 0


def _truncated_sum(j, depth):
    """
    :math:`\\sum_{i \\le depth} (-1)^i \\binom{j}{i} = (-1)^{depth}\\binom{j-1}{depth}`
    for :math:`j \\ge 1`, and one for :math:`j = 0`.
    """
    body = scipy.special.comb(np.maximum(j - 1, 0), depth, exact=False)
    out = np.rint(body).astype(np.int64) * (-1) ** depth
    return np.where(j == 0, 1, out)


def _enumerated_sum(divides, primes, depth, D):
    out = np.zeros(divides.shape[0], dtype=np.int64)
    for row, mask in enumerate(divides):
        ps = [int(p) for p in primes[mask]]
        total = 0
        for i in range(min(depth, len(ps)) + 1):
            for combo in itertools.combinations(ps, i):
                if int(np.prod(combo, dtype=object)) <= D:
                    total += (-1) ** i
        out[row] = total
    return out


def brun_delta(values, z, k=1, D_plus=None, D_minus=None):
    """
    Sifting indicator and its truncated upper and lower approximations.

    :math:`\\lambda^+(d) = \\mu(d)` for squarefree :math:`d | P(z)` with at most
    :math:`2k` prime factors and :math:`d \\le D^+`; :math:`\\lambda^-` keeps at
    most :math:`2k - 1` prime factors and :math:`d \\le D^-`.

    Parameters
    ----------
    values : :class:`numpy.ndarray`
        Positive integers.
    z : :class:`int`
        Sifting limit.
    k : :class:`int`
        Truncation depth.
    D_plus, D_minus : :class:`int` | `None`
        Level limits; `None` for no limit.

    Returns
    -------
    delta, lower, upper : :class:`numpy.ndarray`
    """
    if k < 1:
        raise DomainError("requires k >= 1, got {}".format(k))
    values = np.atleast_1d(np.asarray(values, dtype=np.int64))
    primes = small_primes(int(z) - 1)
    divides = _distinct_small(values, primes)
    j = divides.sum(axis=1)
    delta = (j == 0).astype(np.int64)
    if D_plus is None:
        upper = _truncated_sum(j, 2 * k)
    else:
        upper = _enumerated_sum(divides, primes, 2 * k, D_plus)
    if D_minus is None:
        lower = _truncated_sum(j, 2 * k - 1)
    else:
        lower = _enumerated_sum(divides, primes, 2 * k - 1, D_minus)
    return delta, lower, upper


def vector_sieve_inequalities(m, n, z, k=1, D_plus=None, D_minus=None):
    """
    Check both inequalities for the pairs `(m[i], n[i])`.

    Raises
    ------
    :class:`~almostprime.util.errors.BracketingError`
        If the coefficients fail :math:`\\delta^- \\le \\delta \\le \\delta^+` at some
        integer.

    Returns
    -------
    upper_ok, lower_ok : :class:`numpy.ndarray`
        Boolean arrays for the upper and lower inequality.
    """
    dm, lm, um = brun_delta(m, z, k, D_plus, D_minus)
    dn, ln, un = brun_delta(n, z, k, D_plus, D_minus)
    for vals, d, lo, up in ((np.atleast_1d(m), dm, lm, um), (np.atleast_1d(n), dn, ln, un)):
        bad = np.flatnonzero((lo > d) | (d > up))
        if bad.size:
            raise BracketingError(
                vals[bad[0]], "coefficients do not bracket the sifting indicator"
            )
    prod = dm * dn
    upper_ok = prod <= um * un
    lower_ok = prod >= lm * un + um * ln - um * un
    return upper_ok, lower_ok


def _rough_part(values, primes):
    out = values.copy()
    for p in primes:
        hit = out % p == 0
        while hit.any():
            out[hit] //= p
            hit = out % p == 0
    return out


def vector_sieve_inequality_check(z, D_plus=None, D_minus=None, trials=TRIALS, seed=SEED, k=1):
    """
    Randomised exact check of the vector sieve inequalities.

    Pairs are drawn uniformly below :math:`10^6`; half of the draws are replaced
    by their :math:`z`-rough part so that both values of the indicator occur.

    Parameters
    ----------
    z : :class:`int`
        Sifting limit, at least 2.
    D_plus, D_minus : :class:`int` | `None`
        Level limits of the upper and lower coefficients.
    trials : :class:`int`
        Number of pairs.
    seed : :class:`int`
        Seed of the :class:`numpy.random.PCG64` generator.
    k : :class:`int`
        Truncation depth.

    Returns
    -------
    :class:`VectorSieveReport`
    """
    if z < 2:
        raise DomainError("requires z >= 2, got {}".format(z))
    rng = np.random.default_rng(seed)
    draws = rng.integers(1, VALUE_LIMIT, size=(int(trials), 2), dtype=np.int64)
    rough = rng.random(size=draws.shape) < 0.5
    draws = np.where(rough, _rough_part(draws, small_primes(int(z) - 1)), draws)
    upper_ok, lower_ok = vector_sieve_inequalities(
        draws[:, 0], draws[:, 1], z, k, D_plus, D_minus
    )
    report = VectorSieveReport(int(z), int(k), D_plus, D_minus, int(trials), int(seed))
    bad = np.flatnonzero(~(upper_ok & lower_ok))
    report.violations = [(int(a), int(b)) for a, b in draws[bad]]
    if report.violations:
        logger.warning("{:d} violations of the vector sieve inequalities".format(bad.size))
    logger.debug("Checked {:d} pairs at z={:d}, k={:d}".format(int(trials), int(z), int(k)))
    return report
