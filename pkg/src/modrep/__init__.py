"""Explicit modular representations of symmetric groups and Sergeev superalgebras for n <= p."""

from .combinatorics import Partition, Tableau, classify, enumerate_standard, parse_partition
from .field import Field, Scalar, make_field, sqrt_base, sqrt_minus_one
from .linalg import FMat
from .sergeev import CliffordModule, SergeevRep, build_L, build_V, dim_M, jm_sergeev
from .symrep import SymRep, build_D, dim_D, jm_sym, radical_dim
from .verify import (
    check_jm,
    check_relations,
    cross_check_suite,
    direct_sum,
    find_proper_graded_submodule,
    super_commutant_dim,
)

__all__ = [
    "CliffordModule", "FMat", "Field", "Partition", "Scalar", "SergeevRep", "SymRep", "Tableau",
    "build_D", "build_L", "build_V", "check_jm", "check_relations", "classify",
    "cross_check_suite", "dim_D", "dim_M", "direct_sum", "enumerate_standard",
    "find_proper_graded_submodule", "jm_sergeev", "jm_sym", "make_field", "parse_partition",
    "radical_dim", "sqrt_base", "sqrt_minus_one", "super_commutant_dim",
]
