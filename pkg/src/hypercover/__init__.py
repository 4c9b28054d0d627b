"""Exact covering thresholds, triangle degrees, and book numbers in small
uniform hypergraphs: constructions, metrics, closed-form bounds, and a
brute-force oracle that cross-checks them."""

from .rgraph import (
    RGraph,
    HypergraphError,
    DegreeProfile,
    MinDegree,
    LinkResult,
    from_edge_list,
    empty,
    complete,
    degree,
    degree_profile,
    min_i_degree,
    link,
    edge_density,
    to_text,
    from_text,
    save,
    load,
)
from .cover import (
    Motif,
    CoverReport,
    k4,
    k4_minus,
    c5,
    k_t,
    clique,
    parse_motif,
    covers,
    cover_witness,
    uncovered_vertices,
    clique_degree,
    triangle_count,
    t_max,
    book_size,
    book_number,
    bipartite_edit_distance,
    independence_number,
)
from .constructions import (
    Manifest,
    ConstructionError,
    k4minus_lower,
    k4minus_link_graph,
    k4_lower_linkgraph,
    lift_link,
    extract_link,
    c5_lower,
    k5_lower,
    blowup_sts,
    tau_lower_interval,
    tau_upper_interval,
    efg_graph,
)
from .steiner import STS, sts, verify_sts, load_sts, measure_alpha, MIN_ALPHA
from .formulas import (
    f_n_d,
    d_star,
    tau_upper,
    tau_upper_inverse,
    greedy_book,
    beta_prime,
    kappa,
    lam,
    tau_prime,
    CurvePoint,
    reference_curves,
    render_curves_csv,
    curves_metadata,
    recursive_cover_bound,
    iterate_cover_bounds,
    tripartite_bounds,
    extended_jensen_check,
)
from .oracle import (
    SearchResult,
    OracleLimitError,
    BudgetExceededError,
    max_delta1_no_cover,
    min_tmax,
    min_book,
)
from .verifier import ClaimOutcome, run_suite, random_tripartite

__version__ = "0.1.0"
