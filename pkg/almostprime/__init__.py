import logging

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
logging.captureWarnings(True)

from .table.dickman import build_rho_table, rho
from .table.sievefn import build_sievefn_table
from .selberg import BEvaluator, big_B, big_B_1v
from .bound import SieveParams, BoundTables, evaluate_H
