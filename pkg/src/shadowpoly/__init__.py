"""Exact polynomials counting induced copies of a pattern H in the k-coloring graph of G."""
from .chromatic import ChromaticCache, chromatic_polynomial
from .counting import (
    clique_poly,
    count_poly,
    count_poly_connected,
    enumerate_J,
    hexagon_poly,
    pairs_poly,
    product_clique_poly,
)
from .graph import Graph, GraphError, canonical_key, encode_graph6, is_isomorphic, parse_graph6
from .oracle import BudgetExceeded, build_coloring_graph, count_induced, oracle_count
from .poly import RationalPoly, format_human, parse_poly, poly_eval
from .shadow import shadow_general
from .statemap import enumerate_state_maps
from .trees import (
    gds_multiset,
    recover_degrees_from_pair_sums,
    tree_hypercube_poly,
    tree_pairs_poly,
    tree_square_poly,
)

__version__ = "0.1.0"
