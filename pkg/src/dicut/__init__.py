"""Certified maximum directed cut bounds with exact rational arithmetic."""

from .cut_constructions import (
    ALGORITHMS,
    AssignmentScheme,
    CertificateError,
    Unit,
    bipartite_family_cut,
    coloring_cut,
    construct,
    dag_block_cut,
    dag_cut,
    derandomize,
    matching_cut,
    path_matching_cut,
    positive_imbalance_cut,
    strong_component_cut,
    theta_biased_cut,
)
from .exact_solver import InstanceTooLargeError, max_cut_exact, max_dicut_bruteforce, max_dicut_exact, min_dicut_exact
from .game_solver import GameSolution, cnu, cnu_bounds_check, cover_family, verify_cover_family
from .graph_core import (
    Arc,
    BoundCertificate,
    Dicut,
    DicutError,
    InvalidGraphError,
    Rational,
    WeightedDigraph,
    dicut_weight,
    make_digraph,
    parse_instance,
    format_instance,
)
from .measures import imbalances, l_of_theta, r_plus, theta, total_weight

__all__ = [
    "ALGORITHMS", "Arc", "AssignmentScheme", "BoundCertificate", "CertificateError", "Dicut", "DicutError",
    "GameSolution", "InstanceTooLargeError", "InvalidGraphError", "Rational", "Unit", "WeightedDigraph",
    "bipartite_family_cut", "cnu", "cnu_bounds_check", "coloring_cut", "construct", "cover_family",
    "dag_block_cut", "dag_cut", "derandomize", "dicut_weight", "format_instance", "imbalances", "l_of_theta",
    "make_digraph", "matching_cut", "max_cut_exact", "max_dicut_bruteforce", "max_dicut_exact",
    "min_dicut_exact", "parse_instance", "path_matching_cut", "positive_imbalance_cut", "r_plus",
    "strong_component_cut", "theta", "theta_biased_cut", "total_weight", "verify_cover_family",
]
