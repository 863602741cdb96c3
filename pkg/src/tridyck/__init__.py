"""Exact combinatorics of triangular partitions and triangular Dyck paths."""
from .errors import TriDyckError
from .lattice import build_lattice, cover_rotations, enumerate_intervals, interval_polynomial
from .partition import (
    Cell,
    Partition,
    TriangularDyckPath,
    area,
    enumerate_subpartitions,
    enumerate_triangular_partitions,
    is_triangular,
    mean_slope,
    parse_partition,
    slope_bounds,
)
from .poly import MultiPoly, homogenize, substitute
from .schur import (
    SchurExpansion,
    a_lambda_polynomial,
    a_theta_polynomial,
    decompose_schur_2var,
    decompose_schur_3var,
    schur_polynomial,
)
from .simsym import enumerate_sim_sym, imp_path, is_sim_sym
from .tableaux import (
    PathStatistics,
    StandardTableau,
    deficit_cells,
    row_regular_tableau,
    statistics,
    top_down_tableau,
    triangular_tableau,
)
from .verify import SuiteBounds, run_suite

__version__ = "0.1.0"
