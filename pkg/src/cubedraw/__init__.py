"""Hypercube drawings of graphs, antimagic injections and Sidon sets."""

from cubedraw.graph import (
    DegeneracyResult,
    Graph,
    GraphError,
    VertexOrdering,
    degeneracy_ordering,
    find_one_queue_layout,
    from_edge_list,
    generate,
    is_one_queue_ordering,
)
from cubedraw.sidon import (
    SidonSet,
    erdos_turan_sidon,
    is_sidon,
    is_weak_sidon,
    singer_sidon,
    smallest_prime_at_least,
)
from cubedraw.antimagic import (
    Labelling,
    TrackInjection,
    bandwidth_label,
    check_track_injection,
    greedy_degen_label,
    mag_lower_bound,
    path_power_label,
    queue_label,
    technical_combine,
    verify_antimagic,
)
from cubedraw.hypercube import (
    HypercubeDrawing,
    LLLParameters,
    crossing_probability_exact,
    edges_cross,
    from_antimagic,
    is_kn_point_set,
    lll_dimension,
    lll_draw,
    max_edges,
    to_antimagic,
    verify_drawing,
    vol_lower_bound,
)
from cubedraw.oracle import (
    ExactResult,
    exact_mag,
    exact_vol,
    max_drawing_edges_exhaustive,
    segment_cross_exact,
)

__version__ = "0.1.0"
