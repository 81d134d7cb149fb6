"""Immutable simple undirected graphs and node partitions.

Nodes are the integers 1..n.  Graphs carry no self-loops and no duplicate
edges; duplicate input edges merge silently (set semantics).  Clusterings are
stored in canonical form: clusters are labelled 1..K in order of first node
appearance and empty clusters are dropped, so two clusterings induce the same
co-membership relation iff they compare equal.

Both types are frozen and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    IncompatibleClusteringError,
    LoopRejectedError,
    MalformedEdgeError,
    MalformedInputError,
)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on nodes 1..n.

    ``edges`` holds sorted pairs (u, v) with u < v, in ascending order;
    ``degrees[v]`` is the degree of node v (index 0 is unused padding).
    Build instances through :func:`new_graph`, which validates and
    canonicalises the edge list.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise MalformedInputError(f"node {v} outside 1..{self.n}")
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        pair = (u, v) if u < v else (v, u)
        return pair in self.edge_set


@dataclass(frozen=True)
class Clustering:
    """A partition of 1..n in canonical form.

    ``labels[v - 1]`` is the cluster label of node v; labels are 1..K in
    order of first appearance.  Build instances through
    :func:`new_clustering` or :func:`clustering_from_blocks`.
    """

    labels: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def k(self) -> int:
        return max(self.labels)

    def label(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise MalformedInputError(f"node {v} outside 1..{self.n}")
        return self.labels[v - 1]

    @cached_property
    def cluster_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.k
        for lab in self.labels:
            sizes[lab - 1] += 1
        return tuple(sizes)

    def clusters(self) -> list[tuple[int, ...]]:
        """Node lists per cluster, indexed by label - 1."""
        members: list[list[int]] = [[] for _ in range(self.k)]
        for v, lab in enumerate(self.labels, start=1):
            members[lab - 1].append(v)
        return [tuple(ms) for ms in members]


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on nodes 1..n from an edge list.

    Duplicate edges (in either orientation) merge silently.  Raises
    MalformedEdgeError for endpoints outside 1..n and LoopRejectedError
    for self-loops.
    """
    if n < 1:
        raise MalformedInputError(f"node count must be >= 1, got {n}")
    dedup: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise MalformedEdgeError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if u == v:
            raise LoopRejectedError(f"self-loop at node {u} rejected")
        dedup.add((u, v) if u < v else (v, u))
    ordered = tuple(sorted(dedup))
    degrees = [0] * (n + 1)
    for u, v in ordered:
        degrees[u] += 1
        degrees[v] += 1
    return Graph(n=n, edges=ordered, degrees=tuple(degrees))


def new_clustering(labels: Sequence) -> Clustering:
    """Canonicalise a per-node label sequence (any hashable labels).

    Node v gets labels[v - 1].  Output labels are renumbered 1..K by first
    appearance, which also drops empty clusters.
    """
    if len(labels) < 1:
        raise MalformedInputError("a clustering needs at least one node")
    remap: dict = {}
    out = []
    for raw in labels:
        if raw not in remap:
            remap[raw] = len(remap) + 1
        out.append(remap[raw])
    return Clustering(labels=tuple(out))


def clustering_from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> Clustering:
    """Build a clustering of 1..n from explicit node blocks.

    Empty blocks are permitted and dropped.  Every node must appear in
    exactly one block.
    """
    if n < 1:
        raise MalformedInputError(f"node count must be >= 1, got {n}")
    raw = [0] * n
    for idx, block in enumerate(blocks, start=1):
        for v in block:
            if not 1 <= v <= n:
                raise MalformedInputError(f"node {v} outside 1..{n}")
            if raw[v - 1] != 0:
                raise MalformedInputError(f"node {v} assigned to more than one block")
            raw[v - 1] = idx
    missing = [v for v in range(1, n + 1) if raw[v - 1] == 0]
    if missing:
        raise MalformedInputError(f"nodes without a block: {missing[:5]}")
    return new_clustering(raw)


def single_cluster(n: int) -> Clustering:
    """The one-cluster partition of 1..n."""
    return new_clustering([1] * n)


def singleton_clusters(n: int) -> Clustering:
    """The all-singletons partition of 1..n."""
    return new_clustering(list(range(1, n + 1)))


def degree_sum(g: Graph, nodes: Iterable[int]) -> int:
    """Sum of degrees over a node subset; the empty set sums to 0."""
    total = 0
    for v in nodes:
        if not 1 <= v <= g.n:
            raise MalformedInputError(f"node {v} outside 1..{g.n}")
        total += g.degrees[v]
    return total


def require_compatible(g: Graph, c: Clustering) -> None:
    if g.n != c.n:
        raise IncompatibleClusteringError(
            f"graph has {g.n} nodes but clustering has {c.n}"
        )


def intracluster_edge_counts(g: Graph, c: Clustering) -> list[int]:
    """Per-cluster count of edges with both endpoints inside the cluster.

    Indexed by cluster label - 1.  The counts sum to at most m, with
    equality iff no edge crosses a cluster boundary.
    """
    require_compatible(g, c)
    counts = [0] * c.k
    labels = c.labels
    for u, v in g.edges:
        if labels[u - 1] == labels[v - 1]:
            counts[labels[u - 1] - 1] += 1
    return counts


def extracluster_edge_count(g: Graph, c: Clustering) -> int:
    """Number of edges whose endpoints sit in different clusters."""
    require_compatible(g, c)
    labels = c.labels
    return sum(1 for u, v in g.edges if labels[u - 1] != labels[v - 1])
