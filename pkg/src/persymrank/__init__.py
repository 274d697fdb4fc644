"""Rank census and closed-form verification for 2n x k n-times persymmetric
matrices over F_2."""

__version__ = "0.1.0"

from .census import BudgetExceeded, RankDistribution, census, census_naive
from .closedform import FormulaNotAsserted, gamma7_special, gamma_general, gamma_k10
from .gf2 import EchelonBasis, GF2Matrix, insert_row, rank
from .identities import moment, r_qnk, verify_moments
from .persym import CoeffTuple, build_matrix, index_of, tuple_from_index

__all__ = [
    "BudgetExceeded", "CoeffTuple", "EchelonBasis", "FormulaNotAsserted", "GF2Matrix",
    "RankDistribution", "build_matrix", "census", "census_naive", "gamma7_special",
    "gamma_general", "gamma_k10", "index_of", "insert_row", "moment", "r_qnk", "rank",
    "tuple_from_index", "verify_moments",
]
