"""Plain-text serialisation of graphs and clusterings.

Edge-list format: a header line ``n m`` followed by m lines ``u v``
(1-based, whitespace-separated decimals).  Clustering format: a header
``n K`` followed by n lines ``node cluster_label``.  Lines starting with
``#`` and blank lines are ignored in both formats.  Reading what was
written reproduces the object exactly (clusterings are written in
canonical form).
"""

from __future__ import annotations

from .errors import FormatError, MalformedEdgeError
from .graph import Clustering, Graph, new_clustering, new_graph


def _content_lines(text: str):
    """Yield (line_number, stripped_line) skipping blanks and # comments."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _two_ints(line: str, lineno: int, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise FormatError(f"expected two integers for {what}, got {line!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"non-integer token in {what}: {line!r}", lineno) from None


def read_edge_list(text: str) -> Graph:
    """Parse an edge-list document into a Graph.

    The header's m counts the edge lines that follow; duplicate edges
    merge silently afterwards.  Out-of-range endpoints raise
    MalformedEdgeError with the offending line identified; count
    mismatches raise FormatError.
    """
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise FormatError("empty edge-list document", 1) from None
    n, m = _two_ints(header, header_no, "header 'n m'")
    if n < 1:
        raise FormatError(f"node count must be >= 1, got {n}", header_no)
    if m < 0:
        raise FormatError(f"edge count must be >= 0, got {m}", header_no)
    edges: list[tuple[int, int]] = []
    for lineno, line in lines:
        if len(edges) == m:
            raise FormatError(f"more than the declared {m} edge lines", lineno)
        u, v = _two_ints(line, lineno, "edge 'u v'")
        if not (1 <= u <= n and 1 <= v <= n):
            raise MalformedEdgeError(
                f"line {lineno}: edge ({u}, {v}) has an endpoint outside 1..{n}"
            )
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges but found {len(edges)}")
    return new_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_clustering(text: str) -> Clustering:
    """Parse a clustering document into canonical form.

    Every node 1..n must appear exactly once; the header K must equal the
    canonical cluster count.
    """
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise FormatError("empty clustering document", 1) from None
    n, k = _two_ints(header, header_no, "header 'n K'")
    if n < 1:
        raise FormatError(f"node count must be >= 1, got {n}", header_no)
    raw: list[int | None] = [None] * n
    seen = 0
    for lineno, line in lines:
        if seen == n:
            raise FormatError(f"more than the declared {n} assignment lines", lineno)
        v, lab = _two_ints(line, lineno, "assignment 'node label'")
        if not 1 <= v <= n:
            raise FormatError(f"node {v} outside 1..{n}", lineno)
        if raw[v - 1] is not None:
            raise FormatError(f"node {v} assigned twice", lineno)
        raw[v - 1] = lab
        seen += 1
    if seen != n:
        missing = [v for v in range(1, n + 1) if raw[v - 1] is None]
        raise FormatError(f"header declares {n} nodes but {missing[:5]} are unassigned")
    c = new_clustering(raw)
    if c.k != k:
        raise FormatError(f"header declares {k} clusters but the partition has {c.k}")
    return c


def write_clustering(c: Clustering) -> str:
    out = [f"{c.n} {c.k}"]
    out.extend(f"{v} {lab}" for v, lab in enumerate(c.labels, start=1))
    return "\n".join(out) + "\n"
