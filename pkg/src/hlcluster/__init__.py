"""Exact cluster algebra computations for type A height functions.

The main entry points are re-exported here; see the submodules for the rest.
"""
from .cluster import Root, all_cluster_variables, cluster_variable, exchange_graph
from .errors import HLClusterError
from .gamma import closed_formula, gamma_set, p_map
from .height import HeightFunction, derived_indices, enumerate_height_functions, parse_xi
from .iota import image_of_root, root_of_element
from .laurent import LaurentPoly, format_factored, format_poly, parse_poly
from .monoid import PElement, parse_element, pr_set
from .quiver import Quiver, build_hl_quiver, mutate, mutation_sequence
from .rules import decide_tensor, is_compatible
from .verify import SUITES, run_suite

__all__ = [
    "HLClusterError", "HeightFunction", "LaurentPoly", "PElement", "Quiver", "Root", "SUITES",
    "all_cluster_variables", "build_hl_quiver", "closed_formula", "cluster_variable",
    "decide_tensor", "derived_indices", "enumerate_height_functions", "exchange_graph",
    "format_factored", "format_poly", "gamma_set", "image_of_root", "is_compatible", "mutate",
    "mutation_sequence", "p_map", "parse_element", "parse_poly", "parse_xi", "pr_set",
    "root_of_element", "run_suite",
]
