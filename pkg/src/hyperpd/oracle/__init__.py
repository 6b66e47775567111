"""Exact Betti-number oracle for square-free monomial ideals."""
from .betti import (DEFAULT_LIMIT, BettiTable, OracleLimitError, betti_table, lcm_lattice,
                    pd_reg, stanley_reisner_faces)
from .kernels import HAS_NUMBA
from .lattice import lcm_lattice_betti
from .splitting import SplitReport, check_betti_splitting

__all__ = [
    "BettiTable", "DEFAULT_LIMIT", "HAS_NUMBA", "OracleLimitError", "SplitReport",
    "betti_table", "check_betti_splitting", "lcm_lattice", "lcm_lattice_betti", "pd_reg",
    "stanley_reisner_faces",
]
