"""Exact maximum matching for trees, unicyclic graphs, and small graphs.

No general blossom machinery: trees are solved by leaf-first greedy (exact on
forests), unicyclic graphs by taking the best matching of ``g - e`` over the
edges ``e`` of the unique cycle (exact because every matching omits at least
one cycle edge), and anything else by a size-capped brute force.  Keeping the
engine this small matters because every rank formula sits on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import SizeCapError
from .graphs import (
    Graph,
    Path,
    connected_components,
    delete_vertices,
    find_unique_cycle,
    induced_subgraph,
)

BRUTE_EDGE_CAP = 16


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    host: Graph
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        used: set[int] = set()
        for e in self.edges:
            if e not in self.host.edges:
                raise ValueError(f"matching edge {e} not in host graph")
            if e[0] in used or e[1] in used:
                raise ValueError(f"matching edges share endpoint at {e}")
            used.update(e)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def saturated(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def saturates(self, v: int) -> bool:
        return v in self.saturated

    @property
    def is_perfect(self) -> bool:
        return 2 * self.size == self.host.n


def matching_number(g: Graph, brute_cap: int = BRUTE_EDGE_CAP) -> int:
    """Size of a maximum matching."""
    total = 0
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        total += _connected_matching_number(sub, brute_cap)
    return total


def _connected_matching_number(h: Graph, brute_cap: int) -> int:
    m = h.edge_count
    if m == 0:
        return 0
    if m == h.n - 1:
        return _tree_matching_number(h)
    if m == h.n:
        # every matching omits some cycle edge, so the best over deletions is exact
        cycle = find_unique_cycle(h)
        return max(
            _tree_matching_number(h.without_edge(*e)) for e in cycle.edge_pairs()
        )
    if m > brute_cap:
        raise SizeCapError(
            f"component with {m} edges is neither tree nor unicyclic and "
            f"exceeds the brute-force cap {brute_cap}"
        )
    return _brute_component_matching(h)


def _tree_matching_number(t: Graph) -> int:
    """Leaf-first greedy, exact on trees: match each vertex with its parent
    when both are still free, processing children before parents."""
    order: list[int] = []
    parent = [-1] * t.n
    seen = [False] * t.n
    for root in range(t.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            order.append(v)
            for w in t.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    stack.append(w)
    matched = [False] * t.n
    count = 0
    for v in reversed(order):
        p = parent[v]
        if p >= 0 and not matched[v] and not matched[p]:
            matched[v] = matched[p] = True
            count += 1
    return count


def _brute_component_matching(h: Graph) -> int:
    edges = h.sorted_edges

    def rec(idx: int, used: set[int]) -> int:
        if idx == len(edges):
            return 0
        best = rec(idx + 1, used)
        a, b = edges[idx]
        if a not in used and b not in used:
            used.add(a)
            used.add(b)
            best = max(best, 1 + rec(idx + 1, used))
            used.discard(a)
            used.discard(b)
        return best

    return rec(0, set())


def maximum_matching(g: Graph, brute_cap: int = BRUTE_EDGE_CAP) -> Matching:
    """A maximum matching, deterministic: the one whose sorted edge list is
    lexicographically least (greedy over edges with a feasibility recheck)."""
    target = matching_number(g, brute_cap)
    chosen: list[tuple[int, int]] = []
    used: set[int] = set()
    for e in g.sorted_edges:
        if len(chosen) == target:
            break
        if e[0] in used or e[1] in used:
            continue
        rest, _ = delete_vertices(g, used | set(e))
        if len(chosen) + 1 + matching_number(rest, brute_cap) == target:
            chosen.append(e)
            used.update(e)
    assert len(chosen) == target
    return Matching(g, frozenset(chosen))


def has_augmenting_path(g: Graph, m: Matching) -> Path | None:
    """An augmenting path for ``m`` in ``g`` if one exists, else ``None``.

    The search is an exhaustive alternating-path DFS from each unsaturated
    vertex, so it is exact on any graph (the graphs here are small).
    """
    _validate_matching(g, m)
    mate: dict[int, int] = {}
    for i, j in m.edges:
        mate[i] = j
        mate[j] = i
    trail: list[int] = []

    def extend(v: int, need_matched: bool) -> tuple[int, ...] | None:
        if need_matched:
            w = mate.get(v)
            if w is None or w in trail:
                return None
            trail.append(w)
            found = extend(w, False)
            if found is None:
                trail.pop()
            return found
        for w in g.adjacency[v]:
            if w in trail or mate.get(v) == w:
                continue
            if w not in mate:
                return tuple(trail) + (w,)
            trail.append(w)
            found = extend(w, True)
            if found is not None:
                return found
            trail.pop()
        return None

    for start in range(g.n):
        if start in mate:
            continue
        trail = [start]
        found = extend(start, False)
        if found is not None:
            return Path(found)
    return None


def _validate_matching(g: Graph, m: Matching) -> None:
    used: set[int] = set()
    for e in m.edges:
        if e not in g.edges:
            raise ValueError(f"matching edge {e} not valid in graph")
        if e[0] in used or e[1] in used:
            raise ValueError(f"matching edges share endpoint at {e}")
        used.update(e)


def is_unique_perfect_matching(
    g: Graph, brute_cap: int = BRUTE_EDGE_CAP
) -> tuple[str, Matching | None]:
    """Classify the perfect matchings of ``g``.

    Returns ``('none', None)``, ``('unique', matching)``, or
    ``('multiple', None)``.  Trees admit at most one perfect matching; for
    unicyclic graphs the count splits over one cycle edge (matchings using it
    versus avoiding it), and anything else is brute-forced under the cap.
    """
    if g.n % 2 == 1:
        return "none", None
    count = 1
    pieces: list[tuple[int, int]] = []
    for comp in connected_components(g):
        sub, labels = induced_subgraph(g, comp)
        c, edges = _component_pm(sub, brute_cap)
        count *= c
        if count == 0:
            return "none", None
        if count >= 2:
            return "multiple", None
        pieces.extend((labels[i], labels[j]) for i, j in edges)
    return "unique", Matching(g, frozenset(pieces))


def _component_pm(h: Graph, brute_cap: int) -> tuple[int, list[tuple[int, int]]]:
    """Perfect-matching count (clamped at 2) and one witness for a connected graph."""
    if h.n == 0:
        return 1, []
    if h.n % 2 == 1:
        return 0, []
    m = h.edge_count
    if m == h.n - 1:
        return _tree_pm(h)
    if m == h.n:
        cycle = find_unique_cycle(h)
        u, v = cycle.edge_pairs()[0]
        avoid_count, avoid_edges = _tree_pm(h.without_edge(u, v))
        shrunk, labels = delete_vertices(h, {u, v})
        use_count, use_sub = _forest_pm(shrunk)
        use_edges = [(labels[i], labels[j]) for i, j in use_sub] + [(u, v)]
        count = avoid_count + use_count
        witness = avoid_edges if avoid_count else use_edges
        return count, witness
    if m > brute_cap:
        raise SizeCapError(
            f"component with {m} edges is neither tree nor unicyclic and "
            f"exceeds the brute-force cap {brute_cap}"
        )
    found: list[list[tuple[int, int]]] = []
    for pm in _iter_perfect_matchings(h):
        found.append(pm)
        if len(found) == 2:
            break
    return len(found), (found[0] if found else [])


def _tree_pm(t: Graph) -> tuple[int, list[tuple[int, int]]]:
    """A forest has at most one perfect matching: leaves force their edges."""
    deg = [t.degree(v) for v in range(t.n)]
    alive = [True] * t.n
    leaves = [v for v in range(t.n) if deg[v] == 1]
    edges: list[tuple[int, int]] = []
    while leaves:
        v = leaves.pop()
        if not alive[v]:
            continue
        nbr = next((w for w in t.adjacency[v] if alive[w]), None)
        if nbr is None:
            return 0, []
        edges.append((min(v, nbr), max(v, nbr)))
        alive[v] = alive[nbr] = False
        for w in t.adjacency[nbr]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
                elif deg[w] == 0:
                    return 0, []
    if any(alive):
        return 0, []
    return 1, edges


def _forest_pm(f: Graph) -> tuple[int, list[tuple[int, int]]]:
    count = 1
    edges: list[tuple[int, int]] = []
    for comp in connected_components(f):
        sub, labels = induced_subgraph(f, comp)
        c, sub_edges = _tree_pm(sub)
        count *= c
        if count == 0:
            return 0, []
        edges.extend((labels[i], labels[j]) for i, j in sub_edges)
    return count, edges


def _iter_perfect_matchings(h: Graph) -> Iterator[list[tuple[int, int]]]:
    """Enumerate perfect matchings by matching the least free vertex first."""

    def rec(free: set[int], acc: list[tuple[int, int]]) -> Iterator[list[tuple[int, int]]]:
        if not free:
            yield list(acc)
            return
        v = min(free)
        for w in h.adjacency[v]:
            if w in free and w != v:
                acc.append((min(v, w), max(v, w)))
                free.discard(v)
                free.discard(w)
                yield from rec(free, acc)
                free.add(v)
                free.add(w)
                acc.pop()

    yield from rec(set(range(h.n)), [])
