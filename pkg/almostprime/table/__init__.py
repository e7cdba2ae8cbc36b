"""
Tabulated solutions of the delay equations: Dickman's function and the linear
sieve functions.
"""
from .dickman import build_rho_table, rho, rho_integral
from .sievefn import build_sievefn_table, F, f, F2, f2
from ..util.log import Handle

logger = Handle(__name__)
