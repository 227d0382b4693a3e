"""Exact minimum skew rank of trees and unicyclic graphs.

The library computes the smallest possible rank among real skew-symmetric
matrices whose off-diagonal nonzero pattern matches a given graph, certifies
every answer with exact integer arithmetic, and decides when that rank
coincides with the rank of a diametrical path.  See ``oracle.run_sweep`` for
the enumeration sweeps that cross-check every formula against brute force.
"""

from .errors import (
    InternalContradictionError,
    SizeCapError,
    UnsupportedShapeError,
    WitnessSearchError,
)
from .graphs import (
    CycleInfo,
    Graph,
    GraphFormatError,
    GraphShape,
    Path,
    classify_shape,
    connected_components,
    delete_vertices,
    diameter,
    diametrical_paths,
    distances_from,
    find_unique_cycle,
    graph6,
    induced_subgraph,
    parse_graph,
    serialize_graph,
)
from .matching import (
    Matching,
    has_augmenting_path,
    is_unique_perfect_matching,
    matching_number,
    maximum_matching,
)
from .ranks import (
    PartialDandelion,
    PendantStar,
    SkewRankCertificate,
    StarReductionTrace,
    cut_vertex_reduce,
    find_pendant_star,
    max_skew_rank,
    minimum_skew_rank,
    recognize_partial_dandelion,
    skew_rank_spread,
    smr_cycle,
    smr_equals_max,
    smr_forest,
    smr_partial_dandelion,
    smr_path,
    smr_tree,
    smr_unicyclic,
    smr_unicyclic_formula,
    star_reduce,
)
from .classify import (
    Centipede,
    ClassificationVerdict,
    centipede,
    cycle,
    dandelion,
    n_sun,
    path,
    pineapple_graph,
    recognize_centipede,
    tree_classification,
    unicyclic_classification,
)
from .witness import (
    SkewIntMatrix,
    exact_rank,
    integer_matrix_rank,
    min_witness_search,
    random_max_witness,
)
from .oracle import (
    SweepReport,
    brute_matching,
    brute_min_skew_rank,
    enumerate_family,
    run_sweep,
    skew_zero_forcing_number,
    small_case_survey,
)

__version__ = "0.1.0"
