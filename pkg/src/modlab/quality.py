"""Clustering quality functions and partition similarity.

The central quantity is the modularity of a (graph, clustering) pair:
the fraction of edges inside clusters minus the fraction expected under a
degree-matched random null model,

    modularity = edge_fraction - null_fraction
    edge_fraction = (sum over clusters of internal edges) / m
    null_fraction = sum over clusters of (cluster degree / 2m)^2.

Every quantity here is a ratio of small integers, so each function has an
exact-rational twin (``*_exact``); the float versions perform a single
division per term and therefore agree with the rationals to the last bit
of a correctly rounded quotient.

``modularity_pairwise`` evaluates the same quantity from the adjacency
matrix as a literal double sum over ordered node pairs (including i = j,
whose expected-degree term is nonzero).  It shares no code with the
decomposed form and serves as an independent cross-check.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IncompatibleClusteringError,
    MalformedInputError,
    UndefinedQualityError,
    UndefinedSimilarityError,
)
from .graph import Clustering, Graph, require_compatible


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise UndefinedQualityError("quality functions are undefined for m = 0")


def _intra_total(g: Graph, c: Clustering) -> int:
    labels = c.labels
    return sum(1 for u, v in g.edges if labels[u - 1] == labels[v - 1])


def _cluster_degree_square_sum(g: Graph, c: Clustering) -> int:
    sums = [0] * c.k
    degrees = g.degrees
    for v, lab in enumerate(c.labels, start=1):
        sums[lab - 1] += degrees[v]
    return sum(d * d for d in sums)


def edge_fraction_exact(g: Graph, c: Clustering) -> Fraction:
    """Fraction of edges with both endpoints in the same cluster, in [0, 1]."""
    require_compatible(g, c)
    _require_edges(g)
    return Fraction(_intra_total(g, c), g.m)


def edge_fraction(g: Graph, c: Clustering) -> float:
    require_compatible(g, c)
    _require_edges(g)
    return _intra_total(g, c) / g.m


def null_fraction_exact(g: Graph, c: Clustering) -> Fraction:
    """Expected intracluster edge fraction of the degree-matched null model.

    Equals sum_k (deg(cluster k) / 2m)^2; lies in (0, 1] and is 1 exactly
    for the single-cluster partition.
    """
    require_compatible(g, c)
    _require_edges(g)
    return Fraction(_cluster_degree_square_sum(g, c), 4 * g.m * g.m)


def null_fraction(g: Graph, c: Clustering) -> float:
    require_compatible(g, c)
    _require_edges(g)
    return _cluster_degree_square_sum(g, c) / (4 * g.m * g.m)


def modularity_exact(g: Graph, c: Clustering) -> Fraction:
    """edge_fraction - null_fraction, exactly."""
    return edge_fraction_exact(g, c) - null_fraction_exact(g, c)


def modularity(g: Graph, c: Clustering) -> float:
    """edge_fraction - null_fraction, in [-1/2, 1]."""
    return edge_fraction(g, c) - null_fraction(g, c)


def modularity_pairwise(g: Graph, c: Clustering) -> float:
    """Modularity from the adjacency matrix, as a double sum over ordered pairs.

    Cost is O(n^2); intended as an independent oracle for small graphs, not
    as the production evaluation path.
    """
    require_compatible(g, c)
    _require_edges(g)
    two_m = 2 * g.m
    degrees = g.degrees
    edge_set = g.edge_set
    total = 0.0
    for members in c.clusters():
        for i in members:
            for j in members:
                if i == j:
                    a_ij = 0.0
                else:
                    pair = (i, j) if i < j else (j, i)
                    a_ij = 1.0 if pair in edge_set else 0.0
                total += a_ij - degrees[i] * degrees[j] / two_m
    return total / two_m


def generalized_modularity(g: Graph, c: Clustering, gamma: float) -> float:
    """edge_fraction - gamma * null_fraction for a resolution parameter gamma >= 0.

    gamma = 1 recovers plain modularity exactly; gamma = 0 degenerates to
    the raw edge fraction.
    """
    if gamma < 0:
        raise MalformedInputError(f"gamma must be >= 0, got {gamma}")
    return edge_fraction(g, c) - gamma * null_fraction(g, c)


def min_null_fraction_relaxed(k: int) -> Fraction:
    """Minimum of sum p_i^2 over nonnegative k-vectors summing to 1: 1/k.

    This is the continuous relaxation of minimising the null-model term at
    a fixed cluster count, attained at the uniform vector p_i = 1/k.
    """
    if k < 1:
        raise MalformedInputError(f"cluster count must be >= 1, got {k}")
    return Fraction(1, k)


def min_null_fraction_global(n: int) -> Fraction:
    """Minimum of the relaxed problem over all cluster counts 1..n: 1/n at k = n."""
    if n < 1:
        raise MalformedInputError(f"node count must be >= 1, got {n}")
    return Fraction(1, n)


@dataclass(frozen=True)
class PairCounts:
    """Co-membership counts over unordered node pairs for two partitions.

    a11: same cluster in both; a10: same in the first only; a01: same in
    the second only.  a11 + a10 + a01 <= n(n-1)/2.
    """

    a11: int
    a10: int
    a01: int


def pair_counts(c1: Clustering, c2: Clustering) -> PairCounts:
    if c1.n != c2.n:
        raise IncompatibleClusteringError(
            f"partitions cover {c1.n} and {c2.n} nodes"
        )
    joint = Counter(zip(c1.labels, c2.labels))
    a11 = sum(cnt * (cnt - 1) // 2 for cnt in joint.values())
    same1 = sum(s * (s - 1) // 2 for s in c1.cluster_sizes)
    same2 = sum(s * (s - 1) // 2 for s in c2.cluster_sizes)
    return PairCounts(a11=a11, a10=same1 - a11, a01=same2 - a11)


def jaccard_exact(c1: Clustering, c2: Clustering) -> Fraction:
    """Jaccard similarity of co-clustered unordered node pairs.

    a11 / (a11 + a10 + a01), in [0, 1].  Undefined (error) when both
    partitions are all-singletons, i.e. no pair is co-clustered in either.
    """
    pc = pair_counts(c1, c2)
    denom = pc.a11 + pc.a10 + pc.a01
    if denom == 0:
        raise UndefinedSimilarityError(
            "no co-clustered pair in either partition; similarity undefined"
        )
    return Fraction(pc.a11, denom)


def jaccard(c1: Clustering, c2: Clustering) -> float:
    return float(jaccard_exact(c1, c2))


def relation_jaccard_exact(c1: Clustering, c2: Clustering) -> Fraction:
    """Jaccard similarity of the induced co-membership relations.

    Each partition induces an equivalence relation on V x V (ordered
    pairs, diagonal included); this is |R1 n R2| / |R1 u R2|.  Unlike
    :func:`jaccard_exact` it is defined for every pair of partitions and
    equals 1 on identical ones.  The two indices agree in the limit but
    the relation form is slightly larger on finite inputs; comparison
    tables in this package report the relation form.
    """
    pc = pair_counts(c1, c2)
    n = c1.n
    return Fraction(2 * pc.a11 + n, 2 * (pc.a11 + pc.a10 + pc.a01) + n)


def relation_jaccard(c1: Clustering, c2: Clustering) -> float:
    return float(relation_jaccard_exact(c1, c2))


@dataclass(frozen=True)
class QualityReport:
    """All scores for one (graph, clustering) pair.

    q_n == q_f - q_0 holds exactly as computed; q_gamma is present only
    when a resolution parameter was requested.
    """

    q_f: float
    q_0: float
    q_n: float
    q_f_exact: Fraction
    q_0_exact: Fraction
    q_n_exact: Fraction
    m: int
    k: int
    gamma: float | None = None
    q_gamma: float | None = None


def quality_report(g: Graph, c: Clustering, gamma: float | None = None) -> QualityReport:
    qf = edge_fraction(g, c)
    q0 = null_fraction(g, c)
    qf_exact = edge_fraction_exact(g, c)
    q0_exact = null_fraction_exact(g, c)
    return QualityReport(
        q_f=qf,
        q_0=q0,
        q_n=qf - q0,
        q_f_exact=qf_exact,
        q_0_exact=q0_exact,
        q_n_exact=qf_exact - q0_exact,
        m=g.m,
        k=c.k,
        gamma=gamma,
        q_gamma=None if gamma is None else generalized_modularity(g, c, gamma),
    )
