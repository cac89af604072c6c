"""Prismatic graphs: recognition, generators and exact solvers."""

from .clique_cover import (
    CliqueCover,
    clique_cover_bruteforce,
    clique_cover_exact,
    clique_cover_nonorientable,
    clique_cover_small_hitting,
    clique_cover_via_hitting_set,
    is_normal,
    normalize_cover,
)
from .errors import FamilyParameterError, GraphError, PreconditionError, SizeLimitError
from .generators import FamilySpec, generate, lemma_hitting_set, schlafli_complement
from .graph import Graph, build_graph, derived_graph, triangles, witness_matrix
from .graphio import format_graph, parse_graph, read_graph, write_graph
from .hitting_set import HittingSet, find_hitting_set_at_most, is_hitting_set, min_hitting_set
from .matching import max_matching
from .packing import (
    classify_derived_components,
    max_stable_set_clawfree,
    max_triangle_packing_bruteforce,
    max_triangle_packing_prismatic,
)
from .recognition import find_rotator_or_twister, is_clawfree, is_orientable, is_prismatic, is_rigid

__version__ = "0.1.0"

__all__ = [
    "CliqueCover",
    "FamilyParameterError",
    "FamilySpec",
    "Graph",
    "GraphError",
    "HittingSet",
    "PreconditionError",
    "SizeLimitError",
    "build_graph",
    "classify_derived_components",
    "clique_cover_bruteforce",
    "clique_cover_exact",
    "clique_cover_nonorientable",
    "clique_cover_small_hitting",
    "clique_cover_via_hitting_set",
    "derived_graph",
    "find_hitting_set_at_most",
    "find_rotator_or_twister",
    "format_graph",
    "generate",
    "is_clawfree",
    "is_hitting_set",
    "is_normal",
    "is_orientable",
    "is_prismatic",
    "is_rigid",
    "lemma_hitting_set",
    "max_matching",
    "max_stable_set_clawfree",
    "max_triangle_packing_bruteforce",
    "max_triangle_packing_prismatic",
    "min_hitting_set",
    "normalize_cover",
    "parse_graph",
    "read_graph",
    "schlafli_complement",
    "triangles",
    "witness_matrix",
    "write_graph",
]
