"""
The lower bound functional, its weight threshold and the parameter search.
"""
from .params import SieveParams
from .engine import BoundTables, BoundReport, evaluate_H, lambda_threshold, exponent_r
from .search import parameter_search
from ..util.log import Handle

logger = Handle(__name__)
