"""Simple undirected graphs: representation, traversal, metrics, and text formats.

Vertices are dense integers ``0..n-1`` and every value is immutable after
construction, so all operations are pure functions that can run from
concurrent workers without coordination.  Two text formats are supported:

* edge-list: first line is the vertex count, then one ``i j`` pair per line;
  blank lines and ``#`` comments are ignored, CRLF input is tolerated.
* graph6: the standard printable ASCII encoding (bytes offset by 63,
  column-major upper triangle); the long-form size headers are accepted.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised when graph text (edge-list or graph6) cannot be decoded."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(i, j)`` with ``i < j``; set semantics
    rule out duplicates, and construction rejects loops and out-of-range
    endpoints.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph, normalizing each edge to a sorted pair."""
        return cls(n, frozenset((min(i, j), max(i, j)) for i, j in edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def without_edge(self, i: int, j: int) -> Graph:
        e = (min(i, j), max(i, j))
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.n, self.edges - {e})


@dataclass(frozen=True)
class Path:
    """An ordered vertex sequence whose consecutive members are adjacent."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CycleInfo:
    """The unique cycle of a unicyclic graph, in traversal order."""

    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple(
            (min(vs[i], vs[(i + 1) % len(vs)]), max(vs[i], vs[(i + 1) % len(vs)]))
            for i in range(len(vs))
        )


@dataclass(frozen=True)
class GraphShape:
    """Result of :func:`classify_shape`."""

    kind: str  # 'tree' | 'unicyclic' | 'forest' | 'other'
    cycle: CycleInfo | None = None


# ---------------------------------------------------------------------------
# traversal and metrics


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = [start]
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def distances_from(g: Graph, v: int) -> list[int | float]:
    """Breadth-first distances from ``v``; unreachable vertices get ``inf``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    dist: list[int | float] = [math.inf] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: Graph) -> int:
    """Largest pairwise distance; raises on disconnected input."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        dist = distances_from(g, v)
        worst = max(dist)
        if worst == math.inf:
            raise ValueError("graph is disconnected")
        best = max(best, int(worst))
    return best


def diametrical_paths(g: Graph) -> list[Path]:
    """All shortest paths between vertex pairs at maximal distance.

    Shortest paths in an unweighted graph are automatically induced.  A path
    and its reversal count once; the returned list is sorted and free of
    duplicates.
    """
    d = diameter(g)
    seen: set[tuple[int, ...]] = set()
    for u in range(g.n):
        dist = distances_from(g, u)
        for v in range(u + 1, g.n):
            if dist[v] != d:
                continue
            for route in _shortest_routes(g, u, v, dist):
                seen.add(min(route, route[::-1]))
    if not seen and g.n == 1:
        seen.add((0,))
    return [Path(t) for t in sorted(seen)]


def _shortest_routes(
    g: Graph, u: int, v: int, dist_from_u: list[int | float]
) -> Iterator[tuple[int, ...]]:
    """Enumerate every shortest u-v path given BFS distances from u."""
    suffix: list[int] = [v]

    def backtrack(w: int) -> Iterator[tuple[int, ...]]:
        if w == u:
            yield tuple(reversed(suffix))
            return
        for x in g.adjacency[w]:
            if dist_from_u[x] == dist_from_u[w] - 1:
                suffix.append(x)
                yield from backtrack(x)
                suffix.pop()

    yield from backtrack(v)


def is_path_in(g: Graph, vertices: Sequence[int]) -> bool:
    """True when the sequence is a path of ``g`` (distinct, consecutive adjacent)."""
    vs = list(vertices)
    if len(set(vs)) != len(vs) or not vs:
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))


def is_induced_path(g: Graph, vertices: Sequence[int]) -> bool:
    """True when the sequence is a path with no edges between non-consecutive members."""
    if not is_path_in(g, vertices):
        return False
    vs = list(vertices)
    for a in range(len(vs)):
        for b in range(a + 2, len(vs)):
            if g.has_edge(vs[a], vs[b]):
                return False
    return True


# ---------------------------------------------------------------------------
# shape classification


def classify_shape(g: Graph) -> GraphShape:
    """Classify as tree, unicyclic (with its unique cycle), forest, or other.

    A connected graph with ``|E| = n - 1`` is a tree and with ``|E| = n`` is
    unicyclic; acyclic disconnected graphs are forests; everything else is
    'other'.
    """
    comps = connected_components(g)
    m = g.edge_count
    acyclic = m == g.n - len(comps)
    if len(comps) == 1:
        if m == g.n - 1:
            return GraphShape("tree")
        if m == g.n:
            return GraphShape("unicyclic", find_unique_cycle(g))
    if acyclic:
        return GraphShape("forest")
    return GraphShape("other")


def find_unique_cycle(g: Graph) -> CycleInfo:
    """The unique cycle of a connected unicyclic graph, by leaf peeling."""
    comps = connected_components(g)
    if len(comps) != 1 or g.edge_count != g.n:
        raise ValueError("graph is not connected unicyclic")
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    members = {v for v in range(g.n) if alive[v]}
    start = min(members)
    order = [start]
    prev = None
    while True:
        nxt = min(w for w in g.adjacency[order[-1]] if w in members and w != prev)
        if nxt == start:
            break
        prev = order[-1]
        order.append(nxt)
    return CycleInfo(tuple(order))


# ---------------------------------------------------------------------------
# vertex deletion and induced subgraphs


def delete_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Delete a vertex set; returns the new graph and its label-remap table.

    The remap table maps each new label to the old one, letting callers
    translate results back to the original graph.
    """
    dropped = set(drop)
    for v in dropped:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    kept = tuple(v for v in range(g.n) if v not in dropped)
    new_of_old = {old: new for new, old in enumerate(kept)}
    edges = frozenset(
        (new_of_old[i], new_of_old[j])
        for i, j in g.edges
        if i not in dropped and j not in dropped
    )
    return Graph(len(kept), edges), kept


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on a vertex set, with the same label-remap table."""
    keep_set = set(keep)
    for v in keep_set:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return delete_vertices(g, set(range(g.n)) - keep_set)


# ---------------------------------------------------------------------------
# text formats


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Decode edge-list or graph6 text; ``fmt`` in {'edge-list', 'graph6', 'auto'}.

    Auto-detection is unambiguous: a leading integer line can only start an
    edge list, since graph6 bytes all sit above ASCII 62.
    """
    if fmt == "auto":
        fmt = _sniff_format(text)
    if fmt == "edge-list":
        return _decode_edge_list(text)
    if fmt == "graph6":
        return _decode_graph6(text)
    raise ValueError(f"unknown format {fmt!r}")


def serialize_graph(g: Graph, fmt: str) -> str:
    if fmt == "edge-list":
        lines = [str(g.n)]
        lines.extend(f"{i} {j}" for i, j in g.sorted_edges)
        return "\n".join(lines) + "\n"
    if fmt == "graph6":
        return _encode_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _sniff_format(text: str) -> str:
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        return "edge-list" if stripped.split()[0].isdigit() else "graph6"
    raise GraphFormatError("empty input")


def _decode_edge_list(text: str) -> Graph:
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.isdigit():
                raise GraphFormatError(f"malformed header: expected vertex count, got {line!r}")
            n = int(line)
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphFormatError(f"malformed edge line {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if i == j:
            raise GraphFormatError(f"loop rejected: {i} {j}")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphFormatError(f"vertex out of range in edge {i} {j} (n={n})")
        e = (min(i, j), max(i, j))
        if e in edges:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}")
        edges.add(e)
    if n is None:
        raise GraphFormatError("malformed header: no vertex count found")
    return Graph(n, frozenset(edges))


_G6_HEADER = ">>graph6<<"


def _decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphFormatError("empty graph6 text")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] != 63:
        n, idx = vals[0], 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size header")
        n, idx = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise GraphFormatError("truncated graph6 size header")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        idx = 8
    body = vals[idx:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise GraphFormatError("truncated graph6 body")
    if len(body) > need:
        raise GraphFormatError("trailing characters after graph6 body")
    edges = set()
    for j in range(1, n):
        for i in range(j):
            p = j * (j - 1) // 2 + i
            if (body[p // 6] >> (5 - p % 6)) & 1:
                edges.add((i, j))
    return Graph(n, frozenset(edges))


def _encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(63 + n)
    elif n < 1 << 18:
        head = chr(126) + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        head = chr(126) * 2 + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    nbits = n * (n - 1) // 2
    vals = [0] * ((nbits + 5) // 6)
    for i, j in g.edges:
        p = j * (j - 1) // 2 + i
        vals[p // 6] |= 1 << (5 - p % 6)
    return head + "".join(chr(63 + v) for v in vals)


def graph6(g: Graph) -> str:
    """The graph6 string of ``g`` without a trailing newline."""
    return _encode_graph6(g)
