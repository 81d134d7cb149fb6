"""Generators for two synthetic graph families with a planted block structure.

Both families consist of K consecutive blocks; block c (0-based) occupies
nodes c*(N1+N2)+1 .. (c+1)*(N1+N2), split into an N1-part followed by an
N2-part.  The contiguous numbering matters: the balanced clusterings below
are defined over index ranges.

Family G ("disjoint paths"): each block is a path of N1 nodes plus a
separate path of N2 nodes, so the graph has 2K components, every degree is
1 or 2, and m = K*(N1+N2-2).

Family H ("chorded chain"): each block is a single path over all N1+N2
nodes with extra chords between nodes at distance two, added separately
inside the first N1 positions and the last N2 positions (no chord spans
the part boundary).  Consecutive blocks are joined by one edge, so the
graph is connected with m = 2K*(N1+N2-2) - 1, exactly two nodes of degree
2 (the global endpoints) and all other degrees 3 or 4.

The "natural" clustering keeps each N1-part and N2-part as its own
cluster (2K clusters; identical layout for both families).  The
"balanced" clustering slices 1..n into J consecutive ranges of
L = floor(n/J) nodes plus a remainder range when J does not divide n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FamilyParameterError, MalformedInputError
from .graph import Clustering, Graph, extracluster_edge_count, new_clustering, new_graph

FAMILY_G = "G"
FAMILY_H = "H"
_MIN_PART = {FAMILY_G: 3, FAMILY_H: 5}
_WITNESS_N1 = {FAMILY_G: 3, FAMILY_H: 6}


@dataclass(frozen=True)
class FamilyParams:
    """One family instance: tag (G or H), copy count K, part sizes N1, N2."""

    family: str
    k: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.family not in _MIN_PART:
            raise FamilyParameterError(f"unknown family {self.family!r}; use G or H")
        if self.k < 1:
            raise FamilyParameterError(f"copy count must be >= 1, got {self.k}")
        low = _MIN_PART[self.family]
        if self.n1 < low or self.n2 < low:
            raise FamilyParameterError(
                f"family {self.family} needs N1, N2 >= {low}, got ({self.n1}, {self.n2})"
            )

    @property
    def block_size(self) -> int:
        return self.n1 + self.n2

    @property
    def n(self) -> int:
        return self.k * self.block_size


def disjoint_paths_graph(k: int, n1: int, n2: int) -> Graph:
    """Family G: K copies of an N1-path next to an N2-path (2K components)."""
    p = FamilyParams(FAMILY_G, k, n1, n2)
    size = p.block_size
    edges = []
    for c in range(k):
        base = c * size
        for i in range(1, n1):
            edges.append((base + i, base + i + 1))
        for i in range(1, n2):
            edges.append((base + n1 + i, base + n1 + i + 1))
    g = new_graph(p.n, edges)
    assert g.m == k * (n1 + n2 - 2)
    assert all(d in (1, 2) for d in g.degrees[1:])
    assert sum(1 for d in g.degrees[1:] if d == 1) == 4 * k
    return g


def chorded_chain_graph(k: int, n1: int, n2: int) -> Graph:
    """Family H: K chorded blocks joined in series by single edges (connected)."""
    p = FamilyParams(FAMILY_H, k, n1, n2)
    size = p.block_size
    edges = []
    for c in range(k):
        base = c * size
        for i in range(1, size):
            edges.append((base + i, base + i + 1))
        # distance-two chords, kept strictly inside each part
        for i in range(1, n1 - 1):
            edges.append((base + i, base + i + 2))
        for i in range(n1 + 1, size - 1):
            edges.append((base + i, base + i + 2))
        if c < k - 1:
            edges.append((base + size, base + size + 1))
    g = new_graph(p.n, edges)
    _audit_chorded_chain(g, p)
    return g


def _audit_chorded_chain(g: Graph, p: FamilyParams) -> None:
    """Construction self-checks; a failure here is a generator bug."""
    k, n1, n2 = p.k, p.n1, p.n2
    assert g.m == 2 * k * (n1 + n2 - 2) - 1
    assert 2 * k * (n1 + n2 - 4) < g.m < 2 * k * (n1 + n2 - 2)
    degree_two = [v for v in range(1, g.n + 1) if g.degrees[v] == 2]
    assert degree_two == [1, g.n]
    assert all(g.degrees[v] in (2, 3, 4) for v in range(1, g.n + 1))
    natural = natural_clustering(p)
    assert extracluster_edge_count(g, natural) == 2 * k - 1
    square_sum = 0
    for members in natural.clusters():
        part = n1 if len(members) == n1 else n2
        dsum = sum(g.degrees[v] for v in members)
        # interior blocks attain the upper end exactly; only the two
        # global-endpoint blocks sit strictly below it
        assert 4 * part - 8 < dsum <= 4 * part - 4
        square_sum += dsum * dsum
    low = k * ((4 * n1 - 8) ** 2 + (4 * n2 - 8) ** 2)
    high = k * ((4 * n1 - 4) ** 2 + (4 * n2 - 4) ** 2)
    assert low < square_sum < high


def build_graph(p: FamilyParams) -> Graph:
    if p.family == FAMILY_G:
        return disjoint_paths_graph(p.k, p.n1, p.n2)
    return chorded_chain_graph(p.k, p.n1, p.n2)


def natural_clustering(p: FamilyParams) -> Clustering:
    """2K clusters: the N1-part and N2-part of each block, in index order."""
    labels = []
    for c in range(p.k):
        labels.extend([2 * c + 1] * p.n1)
        labels.extend([2 * c + 2] * p.n2)
    return new_clustering(labels)


def balanced_clustering(n: int, j: int) -> Clustering:
    """J consecutive index ranges of floor(n/J) nodes plus a remainder range.

    All clusters except possibly the last have exactly floor(n/J) nodes;
    the last holds the n mod J leftover nodes (note it can be *wider* than
    the others when J exceeds sqrt(n)).  When J divides n the remainder
    range is empty and dropped, leaving exactly J clusters.
    """
    if n < 1:
        raise MalformedInputError(f"node count must be >= 1, got {n}")
    if not 1 <= j <= n:
        raise MalformedInputError(f"cluster count {j} outside 1..{n}")
    width = n // j
    return new_clustering([min((v - 1) // width, j) + 1 for v in range(1, n + 1)])


def witness_params(k: int, x: int, family: str) -> tuple[FamilyParams, int]:
    """Scaled instance used by the comparison tables and the witness search.

    Fixes N1 by family (3 for G, 6 for H) and couples the remaining sizes
    to one scale parameter: N2 = x^2 * K, J = x * K.
    """
    if family not in _WITNESS_N1:
        raise FamilyParameterError(f"unknown family {family!r}; use G or H")
    if k < 1:
        raise MalformedInputError(f"copy count must be >= 1, got {k}")
    if x < 2:
        raise MalformedInputError(f"scale parameter must be >= 2, got {x}")
    params = FamilyParams(family, k, _WITNESS_N1[family], x * x * k)
    return params, x * k
