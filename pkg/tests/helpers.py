"""Shared helpers: seeded random instances and small independent oracles."""

from __future__ import annotations

from modlab import Graph, new_clustering, new_graph


def random_graph(rng, n: int, p: float = 0.45, require_edge: bool = True) -> Graph:
    while True:
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < p
        ]
        if edges or not require_edge:
            return new_graph(n, edges)


def random_clustering(rng, n: int):
    return new_clustering([rng.randint(1, n) for _ in range(n)])


class UnionFind:
    """Tiny union-find used as an independent connectivity oracle."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, u: int, v: int) -> None:
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self.parent[ru] = rv


def component_count(g: Graph) -> int:
    uf = UnionFind(g.n)
    for u, v in g.edges:
        uf.union(u, v)
    return len({uf.find(v) for v in range(1, g.n + 1)})


def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into exactly k blocks, by recurrence."""
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, min(i, k) + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]
