"""Regular triangle-free graphs with small independence number."""

from .blowup import c5_blowup, h_kr, two_factorize
from .coloring import EquitableColoring, equitable_color, verify_equitable
from .degrees import (
    DegreeSequence,
    InfeasibleError,
    RealizationCondition,
    corollary_feasible,
    gale_ryser_feasible,
    realize_bipartite,
    tight_counterexample,
)
from .graph import Graph, disjoint_union, is_regular, is_triangle_free, max_degree, min_degree
from .pipeline import PipelineConfig, construct, construct_even, construct_odd
from .process import K3, ForbiddenPattern, creates_copy, open_pairs_count, run_process
from .regularize import plan, regularize
from .verify import certify, greedy_independent_set, independence_number_exact

__version__ = "0.1.0"
