"""
The functional :math:`H(\\theta_1, \\theta_2, \\theta, \\lambda)`, its root in
:math:`\\lambda` and the resulting bound on the number of prime factors of
:math:`p + 6`.

.. math::

    H = f\\left(\\tfrac{1}{2\\theta_1}, \\tfrac{1}{2\\theta_2}\\right)
        - \\tfrac{1}{2} I
        - 2 L(\\theta_1^{-1})\\,\\theta_1 B\\left(1, \\tfrac{1}{4\\theta_2}\\right)
        - \\lambda\\left(1 + \\tfrac{1}{2}\\log\\tfrac{1-\\theta_1}{3\\theta_1}\\right) J
"""
import json
import math
from dataclasses import dataclass
from typing import Optional
from .constant import hl_constant_C, HL_PLIMIT
from .integrals import integral_I, integral_J, integral_L
from .params import SieveParams, REFERENCE_PARAMS
from ..selberg import BEvaluator, big_B_1v, QUAD_TOL
from ..table.dickman import build_rho_table, RHO_S_MAX, RHO_STEP
from ..table.sievefn import build_sievefn_table, f2, SIEVEFN_S_MAX, SIEVEFN_STEP
from ..util.errors import InfeasibleError
from ..util.log import Handle

logger = Handle(__name__)

INTEGER_TOL = 1e-9
# published lower bound for f2 and upper bound for I at the reference theta1, theta2
TABULATED_F2 = 0.9992523
TABULATED_I = 1.5630111

REPORT_FIELDS = [
    "f2",
    "I",
    "L",
    "B1v",
    "J",
    "C",
    "H",
    "lambda_star",
    "r",
    "crossover_alpha",
    "lambda_star_tabulated",
    "r_tabulated",
    "r_naive",
]


@dataclass(frozen=True)
class BoundTables:
    """
    Tables shared by every evaluation of the bound chain.

    Parameters
    ----------
    sievefn : :class:`~almostprime.table.sievefn.SieveFnTable`
    ev : :class:`~almostprime.selberg.BEvaluator`
    p_limit : :class:`int`
        Prime limit for the Hardy-Littlewood constant.
    """

    sievefn: object
    ev: BEvaluator
    p_limit: int = HL_PLIMIT

    @classmethod
    def build(cls, cache_dir=None, quad_tol=QUAD_TOL, p_limit=HL_PLIMIT):
        rho_table = build_rho_table(RHO_S_MAX, RHO_STEP, cache_dir=cache_dir)
        sievefn = build_sievefn_table(SIEVEFN_S_MAX, SIEVEFN_STEP, cache_dir=cache_dir)
        return cls(sievefn, BEvaluator(rho_table, quad_tol=quad_tol), int(p_limit))


@dataclass
class BoundReport:
    """
    Every constant from one evaluation of the bound chain.

    :attr:`H` is evaluated at `params.lam`, or at :math:`\\lambda = 0` when the
    parameters carry no weight parameter.

    `lambda_star_tabulated` and `r_tabulated` repeat the threshold with the
    tabulated constants :data:`TABULATED_F2` and :data:`TABULATED_I` in place of
    the computed `f2` and `I`; they are `None` away from the reference
    :math:`(\\theta_1, \\theta_2)`. `r_naive` is :func:`naive_exponent`.
    """

    params: SieveParams
    f2: float
    I: float
    L: float
    B1v: float
    J: float
    C: float
    H: float
    lambda_star: float
    r: int
    crossover_alpha: float
    lambda_star_tabulated: Optional[float] = None
    r_tabulated: Optional[int] = None
    r_naive: Optional[int] = None

    def recompute_H(self, lam=None):
        """:math:`H` recomputed from the stored components."""
        lam = (self.params.lam or 0.0) if lam is None else lam
        return affine_H(self.f2, self.I, self.L, self.B1v, self.J, self.params.theta1, lam)

    def to_dict(self):
        out = {k: getattr(self, k) for k in REPORT_FIELDS}
        out.update(self.params.to_dict())
        return out

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)


def v2_weight(theta1):
    """
    Coefficient :math:`1 + \\frac{1}{2}\\log((1-\\theta_1)/(3\\theta_1))` of
    :math:`\\lambda J` in :math:`H`.
    """
    return 1.0 + 0.5 * math.log((1.0 - theta1) / (3.0 * theta1))


def affine_H(f2_val, I_val, L_val, B_val, J_val, theta1, lam):
    """:math:`H` from its components, affine in `lam`."""
    head = f2_val - I_val / 2.0 - 2.0 * L_val * theta1 * B_val
    return head - lam * v2_weight(theta1) * J_val


def affine_threshold(f2_val, I_val, L_val, B_val, J_val, theta1):
    """
    Root :math:`\\lambda^*` of the affine map :math:`\\lambda \\mapsto H`.

    Raises
    ------
    :class:`~almostprime.util.errors.InfeasibleError`
        If :math:`H < 0` already at :math:`\\lambda = 0`.
    """
    head = affine_H(f2_val, I_val, L_val, B_val, J_val, theta1, 0.0)
    if head < 0:
        raise InfeasibleError(
            "infeasible parameters: H = {:.6g} < 0 at lambda = 0".format(head)
        )
    return head / (v2_weight(theta1) * J_val)


def exponent_r(params, lambda_star):
    """
    Largest number of prime factors permitted by :math:`r \\le 1/\\theta + 1/\\lambda`
    for every :math:`\\lambda < \\lambda^*`.

    Parameters
    ----------
    params : :class:`~almostprime.bound.params.SieveParams`
    lambda_star : :class:`float`
        Threshold, :math:`\\lambda^* > 0` (infinite allowed).

    Returns
    -------
    :class:`int`
    """
    if not lambda_star > 0:
        raise InfeasibleError("infeasible parameters: lambda* = {:g}".format(lambda_star))
    x = 1.0 / params.theta + 1.0 / lambda_star
    nearest = round(x)
    if abs(x - nearest) < INTEGER_TOL:
        return int(nearest)
    return int(math.floor(x))


def naive_exponent(params):
    """
    :math:`\\lfloor 1/\\theta_2 \\rfloor`, the exponent available without
    weights when every prime factor of :math:`p + 6` exceeds :math:`x^{\\theta_2}`.
    """
    return int(math.floor(1.0 / params.theta2 + INTEGER_TOL))


def _components(params, tables):
    t1, t2 = params.theta1, params.theta2
    comps = dict(f2=f2(tables.sievefn, 1.0 / (2.0 * t1), 1.0 / (2.0 * t2)))
    comps["I"], comps["crossover_alpha"] = integral_I(params, tables.sievefn, tables.ev)
    comps["L"] = integral_L(1.0 / t1)
    comps["B1v"] = big_B_1v(tables.ev, 1.0 / (4.0 * t2))
    comps["J"] = integral_J(params, tables.ev)
    return comps


def _threshold(comps, theta1):
    return affine_threshold(
        comps["f2"], comps["I"], comps["L"], comps["B1v"], comps["J"], theta1
    )


def is_reference(params):
    """Whether `params` sifts at the reference levels :math:`(\\theta_1, \\theta_2)`."""
    t1, t2 = REFERENCE_PARAMS[:2]
    return math.isclose(params.theta1, float(t1), rel_tol=1e-12) and math.isclose(
        params.theta2, float(t2), rel_tol=1e-12
    )


def tabulated_threshold(params, comps):
    """
    :math:`(\\lambda^*, r)` with the tabulated :math:`f_2` and :math:`I`
    substituted for the computed ones, or `(None, None)` away from the
    reference levels.
    """
    if not is_reference(params):
        return None, None
    lam = affine_threshold(
        TABULATED_F2, TABULATED_I, comps["L"], comps["B1v"], comps["J"], params.theta1
    )
    return lam, exponent_r(params, lam)


def lambda_threshold(params, tables):
    """
    The weight threshold :math:`\\lambda^*` at which :math:`H` vanishes.

    Parameters
    ----------
    params : :class:`~almostprime.bound.params.SieveParams`
        Parameters; any weight parameter is ignored.
    tables : :class:`BoundTables`

    Returns
    -------
    :class:`float`
    """
    return _threshold(_components(params, tables), params.theta1)


def evaluate_H(params, tables):
    """
    Evaluate the full bound chain.

    Parameters
    ----------
    params : :class:`~almostprime.bound.params.SieveParams`
    tables : :class:`BoundTables`

    Returns
    -------
    :class:`BoundReport`
    """
    comps = _components(params, tables)
    lambda_star = _threshold(comps, params.theta1)
    r = exponent_r(params, lambda_star)
    C, _ = hl_constant_C(tables.p_limit)
    H = affine_H(
        comps["f2"],
        comps["I"],
        comps["L"],
        comps["B1v"],
        comps["J"],
        params.theta1,
        params.lam or 0.0,
    )
    lam_tab, r_tab = tabulated_threshold(params, comps)
    report = BoundReport(
        params=params,
        C=C,
        H=H,
        lambda_star=lambda_star,
        r=r,
        lambda_star_tabulated=lam_tab,
        r_tabulated=r_tab,
        r_naive=naive_exponent(params),
        **comps
    )
    logger.info(
        "theta1={:.6g} theta2={:.6g} theta={:.6g}: lambda*={:.7f} r={:d}".format(
            params.theta1, params.theta2, params.theta, lambda_star, r
        )
    )
    return report
