"""Immutable simple undirected graphs with metric and bipartition invariants.

Vertices are the integers ``0..n-1``. Adjacency is stored as one bitmask per
vertex, which keeps neighborhood operations (degree, BFS frontiers, common
neighbors) cheap for the enumeration core. Graphs are value objects: hashable,
comparable, and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Optional, Sequence


class DisconnectedGraphError(ValueError):
    """Raised when a metric operation meets a disconnected graph."""


Cyclicity = Literal["tree", "unicyclic", "other"]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitmask of vertex ``v``; ``m`` is the edge
    count. No self-loops, no parallel edges, adjacency symmetric.
    """

    n: int
    adj: tuple[int, ...]
    m: int

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph on {self.n} vertices")
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def neighbors(self, v: int) -> Iterator[int]:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph on {self.n} vertices")
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as ordered pairs (u, v) with u < v, ascending."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1)
            for off in _bits(higher):
                yield u, u + 1 + off

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def _graph_from_adj(n: int, adj: Sequence[int]) -> Graph:
    """Trusted constructor for internal callers; skips validation."""
    m = sum(a.bit_count() for a in adj) // 2
    return Graph(n, tuple(adj), m)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with exactly ``edges``.

    Rejects self-loops, out-of-range endpoints and duplicate edges. Duplicates
    are an error rather than being collapsed: a generator emitting the same
    edge twice is almost certainly buggy.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj = [0] * n
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed in a simple graph")
        if adj[u] >> v & 1:
            raise ValueError(f"duplicate edge ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        m += 1
    return Graph(n, tuple(adj), m)


def degree(g: Graph, v: int) -> int:
    """Number of neighbors of ``v``."""
    return g.degree(v)


def bfs_distances(g: Graph, src: int) -> list[Optional[int]]:
    """Exact shortest-path hop counts from ``src``; ``None`` if unreachable."""
    if not 0 <= src < g.n:
        raise IndexError(f"vertex {src} out of range for graph on {g.n} vertices")
    dist: list[Optional[int]] = [None] * g.n
    adj = g.adj
    frontier = 1 << src
    seen = frontier
    d = 0
    while frontier:
        for v in _bits(frontier):
            dist[v] = d
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches all vertices (empty graph: true)."""
    if g.n == 0:
        return True
    adj = g.adj
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


@dataclass(frozen=True)
class MetricSummary:
    """Distance invariants of a connected graph."""

    eccentricities: tuple[int, ...]
    diameter: int
    radius: int
    transmissions: tuple[int, ...]
    wiener: int
    is_2_self_centered: bool


# Above this order, all-pairs BFS goes through scipy's compiled csgraph path.
_SCIPY_METRIC_CUTOFF = 128


def _metric_rows_scipy(g: Graph) -> tuple[list[int], list[int]]:
    import numpy as np
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import shortest_path

    rows = []
    cols = []
    for u, v in g.edges():
        rows += (u, v)
        cols += (v, u)
    data = np.ones(len(rows), dtype=np.int8)
    mat = csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    ecc: list[int] = []
    trans: list[int] = []
    chunk = 256
    for start in range(0, g.n, chunk):
        idx = list(range(start, min(start + chunk, g.n)))
        dist = shortest_path(mat, method="D", unweighted=True, indices=idx)
        if np.isinf(dist).any():
            raise DisconnectedGraphError(
                "metric summary undefined on a disconnected graph (infinite metric)"
            )
        ecc.extend(int(x) for x in dist.max(axis=1))
        trans.extend(int(x) for x in dist.sum(axis=1))
    return ecc, trans


def metric_summary(g: Graph) -> MetricSummary:
    """Eccentricities, diameter, radius, transmissions and the Wiener index.

    Rejects disconnected input: distances would be infinite and every
    downstream statement assumes connectivity.
    """
    if g.n == 0:
        raise DisconnectedGraphError(
            "metric summary undefined on the empty graph (infinite metric)"
        )
    if g.n > _SCIPY_METRIC_CUTOFF:
        if not is_connected(g):
            raise DisconnectedGraphError(
                "metric summary undefined on a disconnected graph (infinite metric)"
            )
        ecc, trans = _metric_rows_scipy(g)
    else:
        ecc = []
        trans = []
        for v in range(g.n):
            dist = bfs_distances(g, v)
            if any(d is None for d in dist):
                raise DisconnectedGraphError(
                    "metric summary undefined on a disconnected graph (infinite metric)"
                )
            ecc.append(max(dist))  # type: ignore[type-var]
            trans.append(sum(dist))  # type: ignore[arg-type]
    total = sum(trans)
    assert total % 2 == 0, "transmission sum must be even"
    return MetricSummary(
        eccentricities=tuple(ecc),
        diameter=max(ecc),
        radius=min(ecc),
        transmissions=tuple(trans),
        wiener=total // 2,
        is_2_self_centered=all(e == 2 for e in ecc),
    )


@dataclass(frozen=True)
class BipartitionResult:
    """Outcome of the BFS 2-coloring.

    ``parts`` covers all vertices (components merged by the color of their
    BFS root, roots taken in ascending order) and is present iff the graph is
    bipartite. ``part_with_max_degree`` is the index into ``parts`` of the
    part holding the lowest-numbered maximum-degree vertex.
    """

    is_bipartite: bool
    parts: Optional[tuple[frozenset[int], frozenset[int]]]
    part_with_max_degree: Optional[int]

    @property
    def part_x(self) -> frozenset[int]:
        """The part containing a maximum-degree vertex."""
        if self.parts is None or self.part_with_max_degree is None:
            raise ValueError("graph is not bipartite")
        return self.parts[self.part_with_max_degree]

    @property
    def part_y(self) -> frozenset[int]:
        if self.parts is None or self.part_with_max_degree is None:
            raise ValueError("graph is not bipartite")
        return self.parts[1 - self.part_with_max_degree]


def bipartition(g: Graph) -> BipartitionResult:
    """2-color the graph by BFS; detect odd cycles."""
    color: list[Optional[int]] = [None] * g.n
    adj = g.adj
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            nxt: list[int] = []
            for u in queue:
                cu = color[u]
                for v in _bits(adj[u]):
                    if color[v] is None:
                        color[v] = 1 - cu  # type: ignore[operator]
                        nxt.append(v)
                    elif color[v] == cu:
                        return BipartitionResult(False, None, None)
            queue = nxt
    part0 = frozenset(v for v in range(g.n) if color[v] == 0)
    part1 = frozenset(v for v in range(g.n) if color[v] == 1)
    which: Optional[int] = None
    if g.n:
        degs = g.degrees()
        top = degs.index(max(degs))
        which = 0 if top in part0 else 1
    return BipartitionResult(True, (part0, part1), which)


def classify_cyclicity(g: Graph) -> Cyclicity:
    """'tree' (m = n-1), 'unicyclic' (m = n) or 'other', for connected graphs."""
    if not is_connected(g):
        raise DisconnectedGraphError("cyclicity classification requires a connected graph")
    if g.m == g.n - 1:
        return "tree"
    if g.m == g.n:
        return "unicyclic"
    return "other"


def dot_export(g: Graph, labels: Optional[Sequence[str]] = None) -> str:
    """Render as DOT text: one node line per vertex, one edge line per edge.

    Vertex and edge order is ascending, so output is deterministic and fit
    for golden-file comparison.
    """
    if labels is not None and len(labels) != g.n:
        raise ValueError(f"expected {g.n} labels, got {len(labels)}")
    lines = ["graph G {"]
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{labels[v]}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
