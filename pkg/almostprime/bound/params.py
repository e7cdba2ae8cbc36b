"""
Sieve parameters :math:`(\\theta_1, \\theta_2, \\theta, \\lambda)`: the sifting
levels :math:`\\xi_i = x^{\\theta_i}`, the weight threshold :math:`y = x^\\theta`
and the weight parameter :math:`\\lambda`.
"""
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional
from ..util.errors import DomainError
from ..util.log import Handle

logger = Handle(__name__)

REFERENCE_PARAMS = (
    Fraction(1, 11),
    Fraction(1, 410),
    Fraction(1, 30),
    Fraction(145, 10000),
)


@dataclass(frozen=True)
class SieveParams:
    """
    Validated sieve parameters.

    Parameters
    ----------
    theta1 : :class:`float`
        Exponent of the first sifting level, :math:`\\theta_2 < \\theta_1 < 1/3`.
    theta2 : :class:`float`
        Exponent of the second sifting level.
    theta : :class:`float`
        Exponent of the weight threshold, with :math:`\\theta_2 < \\theta < 1`
        and :math:`2\\theta_2 + \\theta < 1/2`.
    lam : :class:`float` | `None`
        Weight parameter :math:`\\lambda > 0`; `None` leaves it to be derived.
    """

    theta1: float
    theta2: float
    theta: float
    lam: Optional[float] = None

    def __post_init__(self):
        for name in ("theta1", "theta2", "theta"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if self.lam is not None:
            object.__setattr__(self, "lam", float(self.lam))
        t1, t2, t = self.theta1, self.theta2, self.theta
        if not 0 < t2 < t1 < 1.0 / 3:
            raise DomainError(
                "requires 0 < theta2 < theta1 < 1/3, got theta1={:g}, theta2={:g}".format(t1, t2)
            )
        if not t2 < t < 1:
            raise DomainError("requires theta2 < theta < 1, got theta={:g}".format(t))
        if not 2 * t2 + t < 0.5:
            raise DomainError(
                "requires 2*theta2 + theta < 1/2, got {:g}".format(2 * t2 + t)
            )
        if self.lam is not None and not self.lam > 0:
            raise DomainError("requires lambda > 0, got {:g}".format(self.lam))

    @classmethod
    def reference(cls, lam=True):
        """
        The reference parameters :math:`(1/11, 1/410, 1/30, 0.0145)`.

        Parameters
        ----------
        lam : :class:`bool`
            Whether to include :math:`\\lambda`.
        """
        t1, t2, t, l = REFERENCE_PARAMS
        return cls(t1, t2, t, l if lam else None)

    def with_lambda(self, lam):
        """Copy with a different weight parameter."""
        return replace(self, lam=lam)

    def to_dict(self):
        return {
            "theta1": self.theta1,
            "theta2": self.theta2,
            "theta": self.theta,
            "lambda": self.lam,
        }
