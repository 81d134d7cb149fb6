"""Exact search over all partitions of a small node set, plus a greedy merger.

Partitions are enumerated as restricted growth strings: label arrays
a[0..n-1] with a[0] = 0 and a[i] <= 1 + max(a[0..i-1]), visited in
lexicographic order.  Each string is exactly one canonical partition, so
the enumeration is duplicate-free and its length is the Bell number of n.
Bell(14) is about 1.9e8, which is the practical ceiling for exhaustive
runs; larger n is refused.

Scoring inside the exhaustive loop uses integer keys (for a fixed graph,
ranking by modularity is equivalent to ranking by
4*m*internal_edges - sum_of_cluster_degree_squares), so ties are exact and
the declared tie-break (fewest clusters, then lexicographically smallest
growth string) is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import (
    InstanceTooLargeError,
    MalformedInputError,
    UndefinedQualityError,
)
from .graph import Clustering, Graph, new_clustering
from .quality import (
    edge_fraction,
    generalized_modularity,
    modularity,
    null_fraction,
)

MAX_EXHAUSTIVE_N = 14
QUALITY_NAMES = ("qn", "qf", "q0", "qgamma")

GAIN_TOLERANCE = 1e-12


def bell_number(n: int) -> int:
    """Number of partitions of an n-set, via the Bell triangle."""
    if n < 0:
        raise MalformedInputError(f"need n >= 0, got {n}")
    if n == 0:
        return 1
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for val in row:
            nxt.append(nxt[-1] + val)
        row = nxt
    return row[-1]


def iter_partition_labels(n: int) -> Iterator[list[int]]:
    """Yield every restricted growth string of length n in lexicographic order.

    The same list object is reused between yields for speed; copy it if you
    keep a reference.
    """
    if n < 1:
        raise MalformedInputError(f"need n >= 1, got {n}")
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[0..i-1]); positions that can still grow
    while True:
        yield a
        j = n - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        grow = b[j] + 1 if a[j] == b[j] else b[j]
        for i in range(j + 1, n):
            a[i] = 0
            b[i] = grow


def iter_partition_labels_k(n: int, k: int) -> Iterator[list[int]]:
    """Restricted growth strings using exactly k distinct labels.

    Lexicographic order; the yielded list is reused between yields.
    """
    if n < 1:
        raise MalformedInputError(f"need n >= 1, got {n}")
    if not 1 <= k <= n:
        raise MalformedInputError(f"cluster count {k} outside 1..{n}")
    a = [0] * n

    def fill(i: int, used: int) -> Iterator[list[int]]:
        if i == n:
            if used == k:
                yield a
            return
        if k - used > n - i:  # cannot reach k labels any more
            return
        top = min(used, k - 1)
        for lab in range(top + 1):
            a[i] = lab
            yield from fill(i + 1, used + (1 if lab == used else 0))

    yield from fill(1, 1)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one maximisation run.

    best_score always equals the selected quality function re-evaluated on
    best_clustering.  evaluations counts scored partitions: every
    enumerated partition for the exhaustive methods, the start partition
    plus every candidate merge for the greedy one.  history records the
    greedy score after each accepted merge (empty for exhaustive runs).
    """

    best_clustering: Clustering
    best_score: float
    evaluations: int
    method: str
    history: tuple[float, ...] = ()


def _guard(g: Graph) -> None:
    if g.n > MAX_EXHAUSTIVE_N:
        raise InstanceTooLargeError(
            f"exhaustive search is capped at n = {MAX_EXHAUSTIVE_N}, got n = {g.n}"
        )
    if g.m == 0:
        raise UndefinedQualityError("quality functions are undefined for m = 0")


def quality_value(g: Graph, c: Clustering, quality: str, gamma: float | None = None) -> float:
    """Evaluate a quality function selected by name."""
    if quality == "qn":
        return modularity(g, c)
    if quality == "qf":
        return edge_fraction(g, c)
    if quality == "q0":
        return null_fraction(g, c)
    if quality == "qgamma":
        if gamma is None:
            raise MalformedInputError("quality 'qgamma' needs a gamma value")
        return generalized_modularity(g, c, gamma)
    raise MalformedInputError(f"unknown quality {quality!r}; use one of {QUALITY_NAMES}")


def _score_key(quality: str, gamma, m: int, intra: int, square_sum: int):
    # integer (or one-float) keys that rank exactly like the quality value
    if quality == "qn":
        return 4 * m * intra - square_sum
    if quality == "qf":
        return intra
    if quality == "q0":
        return square_sum
    return 4 * m * intra - gamma * square_sum


def brute_force_max(
    g: Graph,
    quality: str = "qn",
    gamma: float | None = None,
    k: int | None = None,
) -> SearchResult:
    """Maximise a quality function over every partition of g's nodes.

    With k set, only partitions of exactly k nonempty clusters are
    considered.  Ties resolve to the fewest clusters, then to the
    lexicographically smallest growth string (the first one enumerated).
    """
    _guard(g)
    if quality == "qgamma":
        if gamma is None:
            raise MalformedInputError("quality 'qgamma' needs a gamma value")
        if gamma < 0:
            raise MalformedInputError(f"gamma must be >= 0, got {gamma}")
    elif quality not in QUALITY_NAMES:
        raise MalformedInputError(f"unknown quality {quality!r}; use one of {QUALITY_NAMES}")
    n, m = g.n, g.m
    edge_idx = [(u - 1, v - 1) for u, v in g.edges]
    deg = g.degrees[1:]
    source = iter_partition_labels(n) if k is None else iter_partition_labels_k(n, k)

    best_key = None
    best_k = n + 1
    best_labels: list[int] = []
    evaluations = 0
    cluster_deg = [0] * (n + 1)
    for labels in source:
        evaluations += 1
        intra = 0
        for u, v in edge_idx:
            if labels[u] == labels[v]:
                intra += 1
        kcount = 0
        for i in range(n):
            lab = labels[i]
            if lab + 1 > kcount:
                kcount = lab + 1
            cluster_deg[lab] += deg[i]
        square_sum = 0
        for lab in range(kcount):
            d = cluster_deg[lab]
            square_sum += d * d
            cluster_deg[lab] = 0
        key = _score_key(quality, gamma, m, intra, square_sum)
        if best_key is None or key > best_key or (key == best_key and kcount < best_k):
            best_key = key
            best_k = kcount
            best_labels = labels.copy()

    best = new_clustering([lab + 1 for lab in best_labels])
    score = quality_value(g, best, quality, gamma)
    method = "exhaustive" if k is None else "exhaustive-fixed-K"
    return SearchResult(best_clustering=best, best_score=score, evaluations=evaluations, method=method)


def max_edge_fraction(g: Graph, k: int) -> Fraction:
    """Best intracluster edge fraction over partitions with exactly k clusters.

    Nonincreasing in k, with value 1 at k = 1.
    """
    _guard(g)
    if not 1 <= k <= g.n:
        raise MalformedInputError(f"cluster count {k} outside 1..{g.n}")
    edge_idx = [(u - 1, v - 1) for u, v in g.edges]
    best = -1
    for labels in iter_partition_labels_k(g.n, k):
        intra = 0
        for u, v in edge_idx:
            if labels[u] == labels[v]:
                intra += 1
        if intra > best:
            best = intra
    return Fraction(best, g.m)


def edge_fraction_profile(g: Graph) -> tuple[list[Fraction], int]:
    """max_edge_fraction for every k in 1..n from a single enumeration pass.

    Returns (values indexed k-1, number of partitions visited); the count
    equals the Bell number of n and doubles as an enumeration self-check.
    """
    _guard(g)
    n = g.n
    edge_idx = [(u - 1, v - 1) for u, v in g.edges]
    best = [-1] * (n + 1)
    count = 0
    for labels in iter_partition_labels(n):
        count += 1
        intra = 0
        for u, v in edge_idx:
            if labels[u] == labels[v]:
                intra += 1
        kcount = max(labels) + 1
        if intra > best[kcount]:
            best[kcount] = intra
    return [Fraction(best[k], g.m) for k in range(1, n + 1)], count


def greedy_agglomerative(
    g: Graph, quality: str = "qn", gamma: float | None = None
) -> SearchResult:
    """Merge clusters greedily from singletons while the score strictly improves.

    Each round scores every candidate merge (adjacent cluster pairs; all
    pairs for quality 'q0', whose merge gain ignores adjacency) and applies
    the best strictly positive one; gains within GAIN_TOLERANCE of each
    other count as tied and resolve to the smallest pair of cluster labels.
    """
    if g.m == 0:
        raise UndefinedQualityError("quality functions are undefined for m = 0")
    if quality == "qgamma" and gamma is None:
        raise MalformedInputError("quality 'qgamma' needs a gamma value")
    if quality not in QUALITY_NAMES:
        raise MalformedInputError(f"unknown quality {quality!r}; use one of {QUALITY_NAMES}")
    m = g.m
    four_m2 = 4.0 * m * m

    def merge_gain(between_edges: int, deg_a: int, deg_b: int) -> float:
        null_shift = 2.0 * deg_a * deg_b / four_m2
        if quality == "qf":
            return between_edges / m
        if quality == "q0":
            return null_shift  # merging always raises the null term
        if quality == "qn":
            return between_edges / m - null_shift
        return between_edges / m - gamma * null_shift

    members: dict[int, list[int]] = {v: [v] for v in range(1, g.n + 1)}
    deg_sum: dict[int, int] = {v: g.degrees[v] for v in range(1, g.n + 1)}
    between: dict[int, dict[int, int]] = {v: {} for v in range(1, g.n + 1)}
    for u, v in g.edges:
        between[u][v] = between[u].get(v, 0) + 1
        between[v][u] = between[v].get(u, 0) + 1

    evaluations = 1  # the singleton start counts as scored
    history: list[float] = []
    while len(members) > 1:
        best_gain = 0.0
        best_pair: tuple[int, int] | None = None
        if quality == "q0":
            active = sorted(members)
            candidates = (
                (a, b, between[a].get(b, 0))
                for i, a in enumerate(active)
                for b in active[i + 1 :]
            )
        else:
            candidates = (
                (a, b, cnt)
                for a in sorted(between)
                for b, cnt in sorted(between[a].items())
                if a < b
            )
        for a, b, cnt in candidates:
            evaluations += 1
            gain = merge_gain(cnt, deg_sum[a], deg_sum[b])
            if gain <= GAIN_TOLERANCE:
                continue
            if best_pair is None or gain > best_gain + GAIN_TOLERANCE:
                best_gain, best_pair = gain, (a, b)
            elif abs(gain - best_gain) <= GAIN_TOLERANCE and (a, b) < best_pair:
                best_pair = (a, b)
        if best_pair is None:
            break
        a, b = best_pair
        members[a].extend(members.pop(b))
        deg_sum[a] += deg_sum.pop(b)
        for other, cnt in between.pop(b).items():
            if other == a:
                continue
            between[other].pop(b)
            between[other][a] = between[other].get(a, 0) + cnt
            between[a][other] = between[a].get(other, 0) + cnt
        between[a].pop(b, None)
        snapshot = new_clustering(_labels_from_members(g.n, members))
        history.append(quality_value(g, snapshot, quality, gamma))

    final = new_clustering(_labels_from_members(g.n, members))
    score = quality_value(g, final, quality, gamma)
    return SearchResult(
        best_clustering=final,
        best_score=score,
        evaluations=evaluations,
        method="greedy",
        history=tuple(history),
    )


def _labels_from_members(n: int, members: dict[int, list[int]]) -> list[int]:
    labels = [0] * n
    for cid, nodes in members.items():
        for v in nodes:
            labels[v - 1] = cid
    return labels
