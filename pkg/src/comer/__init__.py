"""Comer relation algebras over Z/pZ: coset construction and cycle classification."""
from ._backend import kernels as _kernels
from .analysis import AnalysisReport, analyze, search, verify_range
from .cosets import CosetTable, Parameters, build_coset_table, make_parameters, negate_class
from .cycles import (
    CycleStructure,
    Status,
    classify,
    classify_fast_asymmetric,
    classify_fast_symmetric,
    classify_naive,
    fast_test,
    sumset,
)
from .equivalence import (
    canonical_forbidden_set,
    involution_image,
    is_all_flexible,
    is_ramsey,
    orbit,
    shift_cycle,
)

BACKEND = _kernels.BACKEND

__version__ = "0.1.0"
