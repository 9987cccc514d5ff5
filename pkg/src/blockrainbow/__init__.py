"""Rainbow and strong rainbow connectivity of block graphs and split graphs."""

from .chordal import CliqueTree, ReducedCliqueGraph, build_clique_tree, labeled_degrees, reduced_clique_graph
from .coloring import EdgeColoring
from .corpus import FamilySpec, enumerate_block_graphs, generate, random_block_graph
from .graph import (
    BlockDecomposition,
    DistanceProfile,
    Graph,
    GraphError,
    NotBlockGraphError,
    NotChordalError,
    RecognitionReport,
    block_decomposition,
    distance_profile,
    is_geodetic,
    recognize,
)
from .oracle import (
    SearchLimitError,
    exact_rc,
    exact_src,
    is_rainbow_connected,
    is_strong_rainbow_connected,
    subset_src_decide,
)
from .rc import RcClassification, classify_rc_small, peripheral_separator_condition, rc_eq_src_sufficient, rc_upper_bound
from .reduction import SplitInstance, build_split_instance, extend_star_coloring
from .src import component_representatives, src_number, strong_rainbow_color

__version__ = "0.1.0"
