"""Rainbow-tree colorings of graph products and operations.

The package centers on the 3-rainbow index: the fewest edge colors such
that every 3-set of vertices lies in some tree with all-distinct edge
colors (the 2-index is rainbow connectivity).  It provides an exact
solver, a rainbow-tree checker, Steiner-distance machinery supplying
lower bounds, constructive colorings for Cartesian / strong /
lexicographic products, joins, vertex splits and edge subdivisions, and
generators plus known values for the standard graph families.
"""

from .constructions import (
    ConstructionReport,
    RoutedToFamilyError,
    cartesian_coloring,
    grid_coloring,
    join_coloring,
    lex_coloring_general,
    lex_coloring_h2,
    split_coloring,
    strong_coloring,
    subdivision_coloring,
)
from .families import (
    FamilySpec,
    OracleEntry,
    complete,
    complete_bipartite,
    cycle,
    empty,
    generate,
    oracle_coloring,
    oracle_rx3,
    path,
    star,
)
from .graphs import (
    Graph,
    ProductEdgeClass,
    ProductVertexMap,
    SplitSpec,
    build_graph,
    cartesian_product,
    is_complete,
    is_connected,
    join,
    lexicographic_product,
    split_vertex,
    strong_product,
    subdivide_edge,
)
from .rainbow import (
    EdgeColoring,
    Verdict,
    find_rainbow_tree,
    has_rainbow_tree,
    is_k_rainbow,
    rainbow_reach,
)
from .solver import SolveResult, bfs_edge_order, canonicalize_colors, lower_bound, rx_exact
from .steiner import (
    SteinerResult,
    all_pairs_distances,
    diameter,
    sdiam3,
    steiner_distance_3,
)

__all__ = [
    "ConstructionReport",
    "EdgeColoring",
    "FamilySpec",
    "Graph",
    "OracleEntry",
    "ProductEdgeClass",
    "ProductVertexMap",
    "RoutedToFamilyError",
    "SolveResult",
    "SplitSpec",
    "SteinerResult",
    "Verdict",
    "all_pairs_distances",
    "bfs_edge_order",
    "build_graph",
    "canonicalize_colors",
    "cartesian_coloring",
    "cartesian_product",
    "complete",
    "complete_bipartite",
    "cycle",
    "diameter",
    "empty",
    "find_rainbow_tree",
    "generate",
    "grid_coloring",
    "has_rainbow_tree",
    "is_complete",
    "is_connected",
    "is_k_rainbow",
    "join",
    "join_coloring",
    "lex_coloring_general",
    "lex_coloring_h2",
    "lexicographic_product",
    "lower_bound",
    "oracle_coloring",
    "oracle_rx3",
    "path",
    "rainbow_reach",
    "rx_exact",
    "sdiam3",
    "split_coloring",
    "split_vertex",
    "star",
    "steiner_distance_3",
    "strong_coloring",
    "strong_product",
    "subdivide_edge",
    "subdivision_coloring",
]
