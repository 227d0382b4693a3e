"""Exact integer linear algebra for skew-symmetric witness matrices.

Rank is computed over the rationals by fraction-free (Bareiss) elimination on
Python integers; floating point is banned from the certification path because
rank is discontinuous.  Witness searches enumerate signed integer edge
weights.  Since conjugating by a +/-1 diagonal matrix preserves skewness, the
zero pattern, and the rank, the sign of every spanning-forest edge can be
fixed positive; the enumeration therefore covers one representative per
sign-equivalence class and still decides exactly which ranks the full signed
family attains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Sequence

from .errors import WitnessSearchError
from .graphs import Graph
from .matching import matching_number

RANDOM_WEIGHT_RANGE = (1, 20)
RANDOM_BUDGET = 50
EXHAUSTIVE_EDGE_LIMIT = 12


@dataclass(frozen=True)
class SkewIntMatrix:
    """An integer skew-symmetric matrix whose nonzero pattern is a graph."""

    host: Graph
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.host.n
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError(f"matrix must be {n}x{n}")
        for i in range(n):
            if self.rows[i][i] != 0:
                raise ValueError(f"diagonal entry ({i},{i}) must be zero")
            for j in range(i + 1, n):
                if self.rows[j][i] != -self.rows[i][j]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not skew")
                nonzero = self.rows[i][j] != 0
                if nonzero != ((i, j) in self.host.edges):
                    raise ValueError(
                        f"entry ({i},{j}) does not match the host edge pattern"
                    )

    @classmethod
    def from_edge_weights(
        cls, host: Graph, weights: Mapping[tuple[int, int], int] | Sequence[int]
    ) -> SkewIntMatrix:
        """Build from one nonzero weight per edge (mapping, or a sequence
        aligned with ``host.sorted_edges``)."""
        if not isinstance(weights, Mapping):
            weights = dict(zip(host.sorted_edges, weights))
        rows = [[0] * host.n for _ in range(host.n)]
        for i, j in host.sorted_edges:
            w = weights[(i, j)]
            rows[i][j] = w
            rows[j][i] = -w
        return cls(host, tuple(tuple(r) for r in rows))

    def rank(self) -> int:
        return integer_matrix_rank(self.rows)

    def to_text(self) -> str:
        """Dimension line, then one space-separated row per line."""
        lines = [str(self.host.n)]
        lines.extend(" ".join(str(x) for x in row) for row in self.rows)
        return "\n".join(lines) + "\n"


def exact_rank(m: SkewIntMatrix) -> int:
    """Rank over the rationals; always even for valid skew input."""
    return integer_matrix_rank(m.rows)


def integer_matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination (Bareiss) on integer rows.

    Every division below is exact, so arbitrary-precision integers keep the
    computation lossless no matter how the intermediate entries grow.
    """
    work = [list(r) for r in rows]
    n_rows = len(work)
    n_cols = len(work[0]) if n_rows else 0
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if work[r][col]), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank]
        p = pivot[col]
        for r in range(rank + 1, n_rows):
            row = work[r]
            f = row[col]
            for c in range(col + 1, n_cols):
                row[c] = (row[c] * p - f * pivot[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def rows_from_weights(g: Graph, weights: Sequence[int]) -> list[list[int]]:
    """Raw skew rows from weights aligned with ``g.sorted_edges`` (no validation)."""
    rows = [[0] * g.n for _ in range(g.n)]
    for (i, j), w in zip(g.sorted_edges, weights):
        rows[i][j] = w
        rows[j][i] = -w
    return rows


def spanning_forest(g: Graph) -> frozenset[tuple[int, int]]:
    """Edges of a breadth-first spanning forest."""
    seen = [False] * g.n
    picked: set[tuple[int, int]] = set()
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        picked.add((min(v, w), max(v, w)))
                        nxt.append(w)
            frontier = nxt
    return frozenset(picked)


def iter_signed_assignments(
    g: Graph, magnitudes: Sequence[int] = (1, 2, 3)
) -> Iterator[tuple[int, ...]]:
    """Weight tuples (aligned with ``g.sorted_edges``) covering, up to +/-1
    diagonal conjugation, every assignment with entries in the signed
    magnitude set.  Spanning-forest edges keep positive sign; only the
    remaining edges range over both signs.
    """
    edges = g.sorted_edges
    forest = spanning_forest(g)
    free_idx = [k for k, e in enumerate(edges) if e not in forest]
    for mags in product(magnitudes, repeat=len(edges)):
        for signs in product((1, -1), repeat=len(free_idx)):
            weights = list(mags)
            for idx, s in zip(free_idx, signs):
                weights[idx] *= s
            yield tuple(weights)


def random_max_witness(
    g: Graph,
    rng: random.Random | int | None = None,
    budget: int = RANDOM_BUDGET,
) -> SkewIntMatrix:
    """A matrix in the pattern class of ``g`` attaining the maximum skew rank
    (twice the matching number); random small positive weights are generically
    sufficient, so failure within the budget is treated as an error."""
    rng = _as_rng(rng)
    target = 2 * matching_number(g)
    lo, hi = RANDOM_WEIGHT_RANGE
    for _ in range(budget):
        weights = [rng.randint(lo, hi) for _ in g.sorted_edges]
        if integer_matrix_rank(rows_from_weights(g, weights)) == target:
            return SkewIntMatrix.from_edge_weights(g, weights)
    raise WitnessSearchError(
        f"no rank-{target} witness found in {budget} random draws"
    )


def min_witness_search(
    g: Graph,
    target: int,
    entry_set: Sequence[int] = (1, 2, 3),
    budget: int = 20000,
    rng: random.Random | int | None = None,
) -> SkewIntMatrix | None:
    """Search for a witness of rank exactly ``target``.

    Exhaustive over the signed entry assignments when the graph has at most
    ``EXHAUSTIVE_EDGE_LIMIT`` edges (see module docstring for why forest signs
    may be fixed), randomized otherwise.  Returns ``None`` when the search
    space is exhausted: a finding, not an error, since real witnesses need not
    have small integer entries.
    """
    if target % 2 or target < 0:
        raise ValueError("target rank must be even and nonnegative")
    if target > 2 * matching_number(g):
        raise ValueError("target rank exceeds the maximum skew rank")
    if not g.edges:
        zero = SkewIntMatrix.from_edge_weights(g, {})
        return zero if target == 0 else None
    if target == 0:
        return None  # any admissible matrix has a nonzero entry
    if g.edge_count <= EXHAUSTIVE_EDGE_LIMIT:
        for weights in iter_signed_assignments(g, tuple(entry_set)):
            if integer_matrix_rank(rows_from_weights(g, weights)) == target:
                return SkewIntMatrix.from_edge_weights(g, weights)
        return None
    rng = _as_rng(rng)
    values = [v for m in entry_set for v in (m, -m)]
    for _ in range(budget):
        weights = [rng.choice(values) for _ in g.sorted_edges]
        if integer_matrix_rank(rows_from_weights(g, weights)) == target:
            return SkewIntMatrix.from_edge_weights(g, weights)
    return None


def _as_rng(rng: random.Random | int | None) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(0 if rng is None else rng)
