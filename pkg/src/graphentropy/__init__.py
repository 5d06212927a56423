"""Distance-based graph entropies: exact computation, extremal families,
exhaustive enumeration, and reproduction of published extremal tables."""

from .seqentropy import (
    FillSolution,
    best_integer_fill,
    fill_entropy,
    grouped_entropy,
    majorizes,
    optimal_fill,
    padded_entropy,
    shannon_entropy,
    two_level_fill_entropy,
)
from .graphs import (
    DistanceProfile,
    Graph,
    bfs_distances,
    degree_entropy,
    distance_matrix,
    distance_profile,
    eccentricity_entropy,
    functional_entropy,
    read_edge_list,
    wiener_entropy,
    write_edge_list,
)
from .families import (
    ClassProfile,
    GnkjSpec,
    broom_profile,
    gnkj_edges,
    gnkj_profile,
    make_broom,
    make_caterpillar,
    make_cycle,
    make_diam3_tree,
    make_diam5_tree,
    make_gnkj,
    make_path,
    make_star,
)
from .enumeration import (
    connected_graph_masks,
    connected_graphs,
    free_trees,
    prufer_tree_certificates,
    scan_connected_graphs,
    tree_certificate,
    tree_count,
)
from .search import (
    SearchRecord,
    check_distance_lemmas,
    check_star_wiener_conjecture,
    default_k_cap,
    gnkj_curve,
    local_minima,
    max_ecc_given_diameter,
    min_ecc_bruteforce,
    min_ecc_radius1,
    min_wiener_gnkj,
    min_wiener_tree,
    radius1_ecc_entropy,
    top3_ecc_trees,
    wiener_trend,
)

__version__ = "0.1.0"
