"""
Desk-scale counts of almost-prime patterns and exact checks of the vector sieve
inequalities.
"""
from .factor import build_factor_sieve
from .counting import count_chen_triples, density_report
from .vector import vector_sieve_inequality_check
from ..util.log import Handle

logger = Handle(__name__)
