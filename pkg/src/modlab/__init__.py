"""Quality analysis for graph clusterings.

Modularity and its decomposition into the intracluster edge fraction and a
degree-matched null term, generators for two synthetic block families
where balanced clusterings out-score the natural ones, exact closed-form
bounds, exhaustive and greedy maximisers, and reproducible CSV/figure
reports.
"""

from .errors import (
    FamilyParameterError,
    FormatError,
    IncompatibleClusteringError,
    InstanceTooLargeError,
    LoopRejectedError,
    MalformedEdgeError,
    MalformedInputError,
    ModlabError,
    UndefinedQualityError,
    UndefinedSimilarityError,
    WitnessNotFoundError,
)
from .graph import (
    Clustering,
    Graph,
    clustering_from_blocks,
    degree_sum,
    extracluster_edge_count,
    intracluster_edge_counts,
    new_clustering,
    new_graph,
    single_cluster,
    singleton_clusters,
)
from .io import read_clustering, read_edge_list, write_clustering, write_edge_list
from .quality import (
    PairCounts,
    QualityReport,
    edge_fraction,
    edge_fraction_exact,
    generalized_modularity,
    jaccard,
    jaccard_exact,
    min_null_fraction_global,
    min_null_fraction_relaxed,
    modularity,
    modularity_exact,
    modularity_pairwise,
    null_fraction,
    null_fraction_exact,
    pair_counts,
    quality_report,
    relation_jaccard,
    relation_jaccard_exact,
)
from .families import (
    FAMILY_G,
    FAMILY_H,
    FamilyParams,
    balanced_clustering,
    build_graph,
    chorded_chain_graph,
    disjoint_paths_graph,
    natural_clustering,
    witness_params,
)
from .bounds import (
    BoundSet,
    Witness,
    balanced_lower_g,
    balanced_lower_h,
    bound_set,
    find_witness,
    natural_upper_h,
    natural_value_g,
    sufficient_condition,
    threshold_four_kx,
    threshold_half_k,
)
from .search import (
    MAX_EXHAUSTIVE_N,
    SearchResult,
    bell_number,
    brute_force_max,
    edge_fraction_profile,
    greedy_agglomerative,
    iter_partition_labels,
    iter_partition_labels_k,
    max_edge_fraction,
    quality_value,
)
from .report import (
    SweepRow,
    TableRow,
    comparison_row,
    format_fixed,
    sweep_csv,
    sweep_rows,
    table_csv,
    table_rows,
)

__version__ = "0.1.0"
