"""Token and supertoken graphs: constructions, invariants, bounds, spectra.

The package builds k-token and k-supertoken graphs (and related products
and augmented families), computes exact invariants with verifiable
witnesses, evaluates closed-form bounds and spectra, and re-derives the
reference tables shipped under ``tokengraphs/data``.
"""

from .errors import (
    DisconnectedGraphError,
    FormulaInconsistencyError,
    GraphTooLargeError,
    PropertyViolationError,
    TokenGraphError,
)
from .graphs import (
    Graph,
    QuotientMatrix,
    VertexPartition,
    bfs_distances,
    bipartition,
    diameter,
    eccentricities,
    equitable_check,
    has_odd_cycle,
    is_connected,
    is_isomorphic,
    make_complete,
    make_cycle,
    make_cycle_power,
    make_empty,
    make_hypercube,
    make_path,
    make_petersen,
    radius,
)
from .constructions import (
    augmented_two_token_cycle,
    cartesian_power,
    cartesian_product,
    config_label,
    counts_to_multiset,
    embed_supertoken,
    embed_token,
    is_induced_embedding,
    multiset_to_counts,
    num_configs,
    rank_config,
    strong_power,
    strong_product,
    supertoken_graph,
    token_graph,
    unrank_config,
)
from .invariants import (
    Certificate,
    chromatic_number,
    classify_triangle,
    clique_number,
    clique_type_census,
    config_adjacent,
    hall_degree_condition,
    independence_number,
    max_bipartite_matching,
    maximal_cliques,
    metric_dimension,
    verify_certificate,
)
from .bounds import (
    ColorClassPartition,
    alpha_augmented,
    alpha_supertoken2_cycle,
    best_bound_by_profile,
    best_partition_bound,
    bipartite_bound,
    bipartite_stable_sets,
    independent_set_2cycle,
    information_rate,
    partition_bound,
    partition_witness,
    shannon_lower_bound,
    bipartite_row,
)
from .spectra import (
    Spectrum,
    adjacency_spectrum,
    augmented_cyclic_partition,
    augmented_odd_eigs,
    augmented_odd_eigvecs,
    augmented_quotient,
    cvetkovic_bound,
    interlacing_check,
    laplacian_spectrum,
    monotonicity_report,
    phi_eval,
    phi_max_root,
    quotient_spectrum,
    spectrum_contains,
    supertoken2_cycle_eigs,
    voltage_Bstar,
)
from .verify import (
    VerificationCase,
    load_golden,
    modular_color_lift,
    report_lines,
    run_cases,
)

__version__ = "1.0.0"
