"""Independent brute-force oracles and isomorph-free enumeration sweeps.

The routines here deliberately share no algorithmic machinery with the
formula modules they check: matching is re-solved by edge-subset search, the
minimum skew rank is bounded from above by exhaustive witness enumeration and
from below by the skew zero forcing number, and family enumeration carries
its own canonical codes.  A sweep runs a set of registered checks over every
isomorphism class of a family and reports counterexamples as data.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator, Sequence

from .classify import tree_classification, unicyclic_classification
from .errors import InternalContradictionError, SizeCapError, UnsupportedShapeError
from .graphs import (
    Graph,
    GraphShape,
    classify_shape,
    connected_components,
    delete_vertices,
    diameter,
    diametrical_paths,
    find_unique_cycle,
    graph6,
    induced_subgraph,
    parse_graph,
    serialize_graph,
)
from .matching import has_augmenting_path, matching_number, maximum_matching
from .ranks import (
    iter_pendant_stars,
    minimum_skew_rank,
    smr_cycle,
    smr_partial_dandelion,
    smr_path,
    smr_tree,
    smr_unicyclic,
    smr_unicyclic_formula,
    recognize_partial_dandelion,
    skew_rank_spread,
    cut_vertex_reduce,
    max_skew_rank,
    smr_equals_max,
)
from .matching import is_unique_perfect_matching
from .witness import (
    integer_matrix_rank,
    iter_signed_assignments,
    min_witness_search,
    random_max_witness,
    rows_from_weights,
)

BRUTE_MATCH_CAP = 20
BRUTE_RANK_CAP = 10
ZFORCE_CAP = 12
TREE_FAMILY_CAP = 12
UNICYCLIC_FAMILY_CAP = 11
LABELED_FAMILY_CAP = 6
SWEEP_RANK_CAP = 9  # edge cap for the certification-closure check

ENV_CAP = "SKEWRANK_ORACLE_CAP"


def env_rank_cap(default: int = SWEEP_RANK_CAP) -> int:
    """Brute-force edge cap, overridable through SKEWRANK_ORACLE_CAP."""
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_CAP} must be an integer, got {raw!r}") from exc


# ---------------------------------------------------------------------------
# brute-force oracles


def brute_matching(g: Graph, cap: int = BRUTE_MATCH_CAP) -> int:
    """Maximum matching size by exhaustive edge-subset search."""
    if g.edge_count > cap:
        raise SizeCapError(f"{g.edge_count} edges exceed the brute-force cap {cap}")
    edges = g.sorted_edges

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


def brute_min_skew_rank(
    g: Graph,
    entry_set: Sequence[int] = (1, 2, 3),
    cap: int = BRUTE_RANK_CAP,
    stop_at: int | None = None,
) -> int:
    """Minimum rank over all signed entry assignments from ``entry_set``.

    This is an upper bound on the true minimum skew rank, certified equal to
    it whenever it meets a proven lower bound.  ``stop_at`` may carry such a
    bound: no admissible matrix can beat it, so the enumeration may stop
    early once it is attained without changing the result.
    """
    if g.edge_count > cap:
        raise SizeCapError(f"{g.edge_count} edges exceed the brute-force cap {cap}")
    if not g.edges:
        return 0
    best: int | None = None
    for weights in iter_signed_assignments(g, tuple(entry_set)):
        r = integer_matrix_rank(rows_from_weights(g, weights))
        if stop_at is not None and r < stop_at:
            raise InternalContradictionError(
                f"found rank {r} below the proven lower bound {stop_at}"
            )
        if best is None or r < best:
            best = r
        if stop_at is not None and best == stop_at:
            break
    return best


def skew_closure(g: Graph, colored: Sequence[int]) -> frozenset[int]:
    """Close a colored set under the skew rule: any vertex, colored or not,
    forces its unique uncolored neighbor."""
    done = set(colored)
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            uncolored = [w for w in g.adjacency[v] if w not in done]
            if len(uncolored) == 1:
                done.add(uncolored[0])
                changed = True
    return frozenset(done)


def skew_zero_forcing_number(g: Graph, cap: int = ZFORCE_CAP) -> int:
    """Least size of an initial set whose skew closure colors every vertex.

    The empty set is allowed (and often suffices: leaves force their
    neighbors unaided).  ``|G| - Z``, with Z this number, lower-bounds the
    minimum skew rank.
    """
    if g.n > cap:
        raise SizeCapError(f"{g.n} vertices exceed the zero-forcing cap {cap}")
    everything = frozenset(range(g.n))
    for size in range(g.n + 1):
        for seed in combinations(range(g.n), size):
            if skew_closure(g, seed) == everything:
                return size
    raise InternalContradictionError("coloring all vertices failed to close")


# ---------------------------------------------------------------------------
# canonical codes and isomorph-free enumeration


def tree_canonical_code(t: Graph) -> str:
    """Canonical string for a tree: rooted encoding from the center(s)."""
    if t.n == 0:
        raise ValueError("empty graph has no tree code")
    centers = _tree_centers(t)
    if len(centers) == 1:
        return "T1" + _rooted_code(t, centers[0], blocked=frozenset())
    a, b = centers
    halves = sorted(
        (
            _rooted_code(t, a, blocked=frozenset({b})),
            _rooted_code(t, b, blocked=frozenset({a})),
        )
    )
    return "T2" + "".join(halves)


def _tree_centers(t: Graph) -> list[int]:
    if t.n == 1:
        return [0]
    deg = [t.degree(v) for v in range(t.n)]
    layer = [v for v in range(t.n) if deg[v] <= 1]
    alive = t.n
    removed = [False] * t.n
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            alive -= 1
            for w in t.adjacency[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(v for v in range(t.n) if not removed[v])


def _rooted_code(g: Graph, root: int, blocked: frozenset[int]) -> str:
    def code(v: int, parent: int) -> str:
        parts = sorted(
            code(w, v)
            for w in g.adjacency[v]
            if w != parent and w not in blocked
        )
        return "(" + "".join(parts) + ")"

    return code(root, -1)


def unicyclic_canonical_code(g: Graph) -> str:
    """Canonical string for a connected unicyclic graph: the lexicographically
    least dihedral arrangement of the rooted codes hanging on the cycle."""
    cycle = find_unique_cycle(g)
    cset = frozenset(cycle.vertices)
    seq = [
        _rooted_code(g, v, blocked=cset - {v}) for v in cycle.vertices
    ]
    best: tuple[str, ...] | None = None
    for order in (seq, seq[::-1]):
        for shift in range(len(order)):
            cand = tuple(order[shift:] + order[:shift])
            if best is None or cand < best:
                best = cand
    return f"U{cycle.k}:" + "|".join(best)


def canonical_code(g: Graph) -> str:
    """Canonical code for trees and connected unicyclic graphs (exact), with a
    brute-force fallback for other small graphs."""
    kind = classify_shape(g).kind
    if kind == "tree":
        return tree_canonical_code(g)
    if kind == "unicyclic":
        return unicyclic_canonical_code(g)
    return brute_canonical_code(g)


def brute_canonical_code(g: Graph, cap: int = 8) -> str:
    """Least edge list over all vertex relabelings; exponential, test-scale only."""
    if g.n > cap:
        raise SizeCapError(f"{g.n} vertices exceed the brute canonical cap {cap}")
    best = None
    for perm in permutations(range(g.n)):
        cand = tuple(
            sorted((min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in g.edges)
        )
        if best is None or cand < best:
            best = cand
    return f"B{g.n}:{best}"


@lru_cache(maxsize=None)
def _trees_of_order(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, frozenset()),)
    found: dict[str, Graph] = {}
    for t in _trees_of_order(n - 1):
        for v in range(t.n):
            grown = Graph(n, t.edges | {(v, n - 1)})
            code = tree_canonical_code(grown)
            if code not in found:
                found[code] = grown
    return tuple(found[c] for c in sorted(found))


@lru_cache(maxsize=None)
def _unicyclic_of_order(n: int) -> tuple[Graph, ...]:
    found: dict[str, Graph] = {}
    ring = Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    found[unicyclic_canonical_code(ring)] = ring
    if n > 3:
        for u in _unicyclic_of_order(n - 1):
            for v in range(u.n):
                grown = Graph(n, u.edges | {(v, n - 1)})
                code = unicyclic_canonical_code(grown)
                if code not in found:
                    found[code] = grown
    return tuple(found[c] for c in sorted(found))


def enumerate_family(family: str, n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of the family at order ``n``
    ('trees' or 'unicyclic'), or every labeled graph ('labeled')."""
    if family == "trees":
        if not 1 <= n <= TREE_FAMILY_CAP:
            raise SizeCapError(f"trees are enumerated for 1 <= n <= {TREE_FAMILY_CAP}")
        yield from _trees_of_order(n)
    elif family == "unicyclic":
        if not 3 <= n <= UNICYCLIC_FAMILY_CAP:
            raise SizeCapError(
                f"unicyclic graphs are enumerated for 3 <= n <= {UNICYCLIC_FAMILY_CAP}"
            )
        yield from _unicyclic_of_order(n)
    elif family == "labeled":
        if not 1 <= n <= LABELED_FAMILY_CAP:
            raise SizeCapError(f"labeled graphs are enumerated for n <= {LABELED_FAMILY_CAP}")
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
    else:
        raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# sweep checks


@dataclass
class SweepContext:
    family: str
    seed: int
    rank_cap: int
    g6: str = ""
    shape: GraphShape | None = None

    def rng(self, tag: str) -> random.Random:
        digest = hashlib.blake2b(
            f"{self.seed}:{self.g6}:{tag}".encode(), digest_size=8
        ).digest()
        return random.Random(int.from_bytes(digest, "big"))


CheckFn = Callable[[Graph, SweepContext], tuple[list[str], list[str]]]


@dataclass(frozen=True)
class SweepCheck:
    id: str
    description: str
    applies: Callable[[Graph, SweepContext], bool]
    run: CheckFn


def _supported(g: Graph) -> bool:
    try:
        minimum_skew_rank(g)
        return True
    except UnsupportedShapeError:
        return False


def _is_tree_or_unicyclic(g: Graph, ctx: SweepContext) -> bool:
    return ctx.shape.kind in ("tree", "unicyclic")


def _is_connected_supported(g: Graph, ctx: SweepContext) -> bool:
    return ctx.shape.kind in ("tree", "unicyclic")


def _ck_round_trip(g: Graph, ctx: SweepContext):
    fails = []
    for fmt in ("edge-list", "graph6"):
        if parse_graph(serialize_graph(g, fmt), fmt) != g:
            fails.append(f"{fmt} round trip mismatch")
    return fails, []


def _ck_matching_vs_brute(g: Graph, ctx: SweepContext):
    m = maximum_matching(g)
    want = brute_matching(g)
    if m.size != want:
        return [f"maximum_matching size {m.size} != brute {want}"], []
    return [], []


def _ck_berge(g: Graph, ctx: SweepContext):
    m = maximum_matching(g)
    path = has_augmenting_path(g, m)
    if path is not None:
        return [f"augmenting path {path.vertices} beside a maximum matching"], []
    return [], []


def _ck_edge_deletion(g: Graph, ctx: SweepContext):
    fails = []
    base = matching_number(g)
    for e in g.sorted_edges:
        smaller = matching_number(g.without_edge(*e))
        if smaller not in (base, base - 1):
            fails.append(f"match drops from {base} to {smaller} deleting {e}")
    return fails, []


def _ck_unicyclic_split(g: Graph, ctx: SweepContext):
    cycle = find_unique_cycle(g)
    split = max(
        matching_number(g.without_edge(*e)) for e in cycle.edge_pairs()
    )
    want = brute_matching(g)
    if split != want:
        return [f"cycle-edge split gives {split}, brute force {want}"], []
    return [], []


def _ck_tree_formula(g: Graph, ctx: SweepContext):
    value = smr_tree(g)
    want = 2 * brute_matching(g)
    if value != want:
        return [f"tree formula {value} != 2*brute match {want}"], []
    return [], []


def _ck_tree_rank_constant(g: Graph, ctx: SweepContext):
    rng = ctx.rng("weights")
    want = 2 * brute_matching(g)
    for _ in range(20):
        weights = [rng.randint(1, 20) for _ in g.sorted_edges]
        r = integer_matrix_rank(rows_from_weights(g, weights))
        if r != want:
            return [f"random weighting has rank {r}, expected constant {want}"], []
    return [], []


def _ck_algorithm_vs_formula(g: Graph, ctx: SweepContext):
    try:
        value = smr_unicyclic(g).value
    except InternalContradictionError as exc:
        return [str(exc)], []
    formula = smr_unicyclic_formula(g)
    if value != formula:
        return [f"reduction {value} != matching formula {formula}"], []
    return [], []


def _ck_parity_and_bound(g: Graph, ctx: SweepContext):
    fails = []
    value = minimum_skew_rank(g).value
    top = max_skew_rank(g)
    if value % 2:
        fails.append(f"odd rank {value}")
    if value > top:
        fails.append(f"rank {value} above maximum {top}")
    if ctx.shape.kind == "tree" and value != top:
        fails.append(f"tree rank {value} != 2*match {top}")
    return fails, []


def _ck_unique_pm(g: Graph, ctx: SweepContext):
    value = minimum_skew_rank(g).value
    top = max_skew_rank(g)
    status, _ = is_unique_perfect_matching(g)
    full = value == g.n == top
    if full != (status == "unique"):
        return [f"rank pattern says {full}, perfect-matching count says {status}"], []
    return [], []


def _ck_induced_monotone(g: Graph, ctx: SweepContext):
    rng = ctx.rng("induced")
    base = minimum_skew_rank(g).value
    fails = []
    for _ in range(8):
        size = rng.randint(1, g.n)
        keep = rng.sample(range(g.n), size)
        sub, _ = induced_subgraph(g, keep)
        if not _supported(sub):
            continue
        value = minimum_skew_rank(sub).value
        if value > base:
            fails.append(f"induced subgraph on {sorted(keep)} has rank {value} > {base}")
    return fails, []


def _ck_diameter_chain(g: Graph, ctx: SweepContext):
    d = diameter(g)
    value = minimum_skew_rank(g).value
    middle = smr_path(d + 1)
    if not d <= middle <= value:
        return [f"chain broken: diam {d}, path value {middle}, rank {value}"], []
    return [], []


def _ck_deletion_lemma(g: Graph, ctx: SweepContext):
    base = minimum_skew_rank(g).value
    p = diametrical_paths(g)[0]
    if base != smr_path(p.order):
        return [], []
    off = sorted(set(range(g.n)) - set(p.vertices))
    candidates = [{v} for v in off]
    rng = ctx.rng("deletion")
    for _ in range(5):
        if len(off) >= 2:
            size = rng.randint(2, len(off))
            candidates.append(set(rng.sample(off, size)))
    fails = []
    for drop in candidates:
        rest, _ = delete_vertices(g, drop)
        if not _supported(rest):
            continue
        value = minimum_skew_rank(rest).value
        if value != base:
            fails.append(f"deleting off-path set {sorted(drop)} moves rank to {value}")
    return fails, []


def _ck_classification(g: Graph, ctx: SweepContext):
    if ctx.shape.kind == "tree" and g.n < 2:
        return [], []
    n = diameter(g) + 1
    direct = minimum_skew_rank(g).value == smr_path(n)
    notes: list[str] = []
    try:
        if ctx.shape.kind == "tree":
            verdict = tree_classification(g)
        else:
            verdict = unicyclic_classification(g)
    except InternalContradictionError as exc:
        return [str(exc)], notes
    if verdict.alternate_reading_agrees is False:
        notes.append(f"clause-4f readings disagree on {ctx.g6}")
    if verdict.holds != direct:
        return [
            f"theorem verdict {verdict.holds} (clause {verdict.clause}) "
            f"!= direct comparison {direct}"
        ], notes
    return [], notes


def _ck_cut_vertex(g: Graph, ctx: SweepContext):
    base = minimum_skew_rank(g).value
    comps = len(connected_components(g))
    fails = []
    for v in range(g.n):
        rest, _ = delete_vertices(g, {v})
        if len(connected_components(rest)) <= comps:
            continue
        try:
            value = cut_vertex_reduce(g, v).value
        except UnsupportedShapeError:
            continue
        if value != base:
            fails.append(f"cut-vertex reduction at {v} gives {value}, direct {base}")
    return fails, []


def _ck_spread(g: Graph, ctx: SweepContext):
    fails = []
    for v in range(g.n):
        try:
            skew_rank_spread(g, v)
        except InternalContradictionError as exc:
            fails.append(f"vertex {v}: {exc}")
    return fails, []


def _ck_equals_max(g: Graph, ctx: SweepContext):
    try:
        smr_equals_max(g)
    except InternalContradictionError as exc:
        return [str(exc)], []
    return [], []


def _ck_zminus_bound(g: Graph, ctx: SweepContext):
    bound = g.n - skew_zero_forcing_number(g)
    value = minimum_skew_rank(g).value
    if bound > value:
        return [f"forcing bound {bound} above rank {value}"], []
    return [], []


def _ck_certification_closure(g: Graph, ctx: SweepContext):
    floor = g.n - skew_zero_forcing_number(g)
    formula = minimum_skew_rank(g).value
    upper = brute_min_skew_rank(g, cap=ctx.rank_cap, stop_at=floor)
    if floor == formula == upper:
        return [], []
    return [
        f"closure gap: forcing bound {floor}, formula {formula}, witness search {upper}"
    ], []


def _ck_reduction_order(g: Graph, ctx: SweepContext):
    value = smr_unicyclic(g).value
    rng = ctx.rng("order")
    for _ in range(3):
        shuffled = _random_order_reduction_value(g, rng)
        if shuffled != value:
            return [f"random-order reduction gives {shuffled}, canonical {value}"], []
    return [], []


def _random_order_reduction_value(u: Graph, rng: random.Random) -> int:
    current = u
    s = 0
    while True:
        stars = list(iter_pendant_stars(current))
        if not stars:
            break
        star = stars[rng.randrange(len(stars))]
        current, _ = delete_vertices(current, set(star.vertices))
        s += 2
    if all(current.degree(v) == 2 for v in range(current.n)):
        return s + smr_cycle(current.n)
    return s + smr_partial_dandelion(recognize_partial_dandelion(current))


def _ck_rank_realization(g: Graph, ctx: SweepContext):
    lo = minimum_skew_rank(g).value
    hi = max_skew_rank(g)
    notes = []
    for target in range(lo, hi + 1, 2):
        found = min_witness_search(g, target, (1, 2, 3))
        if found is None:
            found = min_witness_search(g, target, (1, 2, 3, 4, 5))
        if found is None:
            notes.append(
                f"no integer witness of rank {target} on {ctx.g6} "
                f"with entries up to 5"
            )
        elif found.host != g:
            return [f"witness pattern mismatch for rank {target}"], notes
    return [], notes


def _ck_witness_max(g: Graph, ctx: SweepContext):
    m = random_max_witness(g, rng=ctx.rng("witness"))
    want = max_skew_rank(g)
    if m.rank() != want or m.host != g:
        return [f"random witness rank {m.rank()} != {want}"], []
    return [], []


CHECKS: dict[str, SweepCheck] = {
    c.id: c
    for c in [
        SweepCheck(
            "round-trip",
            "edge-list and graph6 round trips reproduce the graph",
            lambda g, ctx: True,
            _ck_round_trip,
        ),
        SweepCheck(
            "matching-vs-brute",
            "matching engine agrees with edge-subset search",
            lambda g, ctx: g.edge_count <= BRUTE_MATCH_CAP and _supported_matching(g),
            _ck_matching_vs_brute,
        ),
        SweepCheck(
            "berge",
            "no augmenting path beside a maximum matching",
            lambda g, ctx: g.edge_count <= BRUTE_MATCH_CAP and _supported_matching(g),
            _ck_berge,
        ),
        SweepCheck(
            "edge-deletion-monotone",
            "deleting an edge lowers the matching number by at most one",
            lambda g, ctx: g.edge_count <= BRUTE_MATCH_CAP and _supported_matching(g),
            _ck_edge_deletion,
        ),
        SweepCheck(
            "unicyclic-split",
            "cycle-edge split equals brute-force matching",
            lambda g, ctx: ctx.shape.kind == "unicyclic"
            and g.edge_count <= BRUTE_MATCH_CAP,
            _ck_unicyclic_split,
        ),
        SweepCheck(
            "tree-formula",
            "tree rank equals twice the brute-force matching number",
            lambda g, ctx: ctx.shape.kind == "tree" and g.edge_count <= BRUTE_MATCH_CAP,
            _ck_tree_formula,
        ),
        SweepCheck(
            "tree-rank-constant",
            "every weighting of a tree attains twice the matching number",
            lambda g, ctx: ctx.shape.kind == "tree" and g.edge_count <= BRUTE_MATCH_CAP,
            _ck_tree_rank_constant,
        ),
        SweepCheck(
            "algorithm-vs-corollary",
            "star reduction agrees with the matching closed form",
            lambda g, ctx: ctx.shape.kind == "unicyclic",
            _ck_algorithm_vs_formula,
        ),
        SweepCheck(
            "parity-and-bound",
            "ranks are even and at most twice the matching number",
            lambda g, ctx: _supported(g),
            _ck_parity_and_bound,
        ),
        SweepCheck(
            "unique-pm",
            "full rank happens exactly at a unique perfect matching",
            _is_tree_or_unicyclic,
            _ck_unique_pm,
        ),
        SweepCheck(
            "induced-monotone",
            "induced subgraphs never have larger rank",
            _is_tree_or_unicyclic,
            _ck_induced_monotone,
        ),
        SweepCheck(
            "diameter-chain",
            "diameter <= path value <= rank",
            _is_connected_supported,
            _ck_diameter_chain,
        ),
        SweepCheck(
            "deletion-lemma",
            "off-path deletions preserve rank when it matches the path value",
            _is_connected_supported,
            _ck_deletion_lemma,
        ),
        SweepCheck(
            "classification-equivalence",
            "theorem predicates agree with direct rank comparison",
            _is_tree_or_unicyclic,
            _ck_classification,
        ),
        SweepCheck(
            "cut-vertex-consistency",
            "cut-vertex reduction agrees with direct computation",
            _is_connected_supported,
            _ck_cut_vertex,
        ),
        SweepCheck(
            "spread-binary",
            "rank spread at every vertex is 0 or 2",
            _is_connected_supported,
            _ck_spread,
        ),
        SweepCheck(
            "smr-equals-max",
            "equality criterion for min and max rank",
            lambda g, ctx: ctx.shape.kind == "unicyclic",
            _ck_equals_max,
        ),
        SweepCheck(
            "zminus-lower-bound",
            "forcing-number bound stays below the rank",
            lambda g, ctx: g.n <= ZFORCE_CAP and _supported(g),
            _ck_zminus_bound,
        ),
        SweepCheck(
            "certification-closure",
            "witness search and forcing bound meet the formula value",
            lambda g, ctx: _is_tree_or_unicyclic(g, ctx)
            and g.edge_count <= ctx.rank_cap
            and g.n <= ZFORCE_CAP,
            _ck_certification_closure,
        ),
        SweepCheck(
            "reduction-order-independence",
            "pendant-star removal order does not change the value",
            lambda g, ctx: ctx.shape.kind == "unicyclic" and g.n <= 9,
            _ck_reduction_order,
        ),
        SweepCheck(
            "even-rank-realization",
            "every even rank between min and max has an integer witness",
            lambda g, ctx: _is_tree_or_unicyclic(g, ctx) and g.edge_count <= 9,
            _ck_rank_realization,
        ),
        SweepCheck(
            "witness-max-rank",
            "random witnesses attain twice the matching number",
            lambda g, ctx: g.edge_count <= BRUTE_MATCH_CAP and _supported_matching(g),
            _ck_witness_max,
        ),
    ]
}


def _supported_matching(g: Graph) -> bool:
    try:
        matching_number(g)
        return True
    except (UnsupportedShapeError, SizeCapError):
        return False


# ---------------------------------------------------------------------------
# sweep driver


@dataclass
class Counterexample:
    graph6: str
    check: str
    details: str


@dataclass
class SweepReport:
    """Per-check tallies and counterexamples for one enumeration sweep."""

    family: str
    n: int
    seed: int
    graph_count: int
    checks: dict[str, dict[str, int]]
    counterexamples: list[Counterexample] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "type": "sweep-report",
            "family": self.family,
            "n": self.n,
            "seed": self.seed,
            "graph_count": self.graph_count,
            "checks": {
                cid: {
                    "pass": tally["pass"],
                    "fail": tally["fail"],
                    "counterexamples": [
                        {"graph6": c.graph6, "check": c.check, "details": c.details}
                        for c in self.counterexamples
                        if c.check == cid
                    ],
                }
                for cid, tally in sorted(self.checks.items())
            },
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        lines = ["check,pass,fail"]
        for cid, tally in sorted(self.checks.items()):
            lines.append(f"{cid},{tally['pass']},{tally['fail']}")
        return "\n".join(lines) + "\n"


def available_checks() -> list[tuple[str, str]]:
    return [(c.id, c.description) for c in CHECKS.values()]


def run_sweep(
    family: str,
    n: int,
    checks: Sequence[str] | None = None,
    seed: int = 0,
    jobs: int = 1,
    rank_cap: int | None = None,
) -> SweepReport:
    """Run registered checks over every graph of a family at order ``n``.

    Results are deterministic for a given (family, n, checks, seed) and do
    not depend on ``jobs``: each graph derives its own random stream from the
    seed and its graph6 string.
    """
    ids = list(CHECKS) if checks is None else list(checks)
    unknown = [c for c in ids if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    cap = env_rank_cap() if rank_cap is None else rank_cap
    strings = [graph6(g) for g in enumerate_family(family, n)]
    if jobs <= 1 or len(strings) < 2 * jobs:
        tallies, counters, notes = _run_chunk((family, strings, ids, seed, cap))
    else:
        chunks = [
            (family, strings[i::jobs], ids, seed, cap) for i in range(jobs)
        ]
        tallies = {cid: {"pass": 0, "fail": 0} for cid in ids}
        counters: list[Counterexample] = []
        notes: list[str] = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part_tallies, part_counters, part_notes in pool.map(_run_chunk, chunks):
                for cid in ids:
                    tallies[cid]["pass"] += part_tallies[cid]["pass"]
                    tallies[cid]["fail"] += part_tallies[cid]["fail"]
                counters.extend(part_counters)
                notes.extend(part_notes)
    counters.sort(key=lambda c: (c.check, c.graph6, c.details))
    return SweepReport(
        family=family,
        n=n,
        seed=seed,
        graph_count=len(strings),
        checks=tallies,
        counterexamples=counters,
        notes=sorted(set(notes)),
    )


def _run_chunk(args) -> tuple[dict, list[Counterexample], list[str]]:
    family, strings, ids, seed, cap = args
    tallies = {cid: {"pass": 0, "fail": 0} for cid in ids}
    counters: list[Counterexample] = []
    notes: list[str] = []
    for g6 in strings:
        g = parse_graph(g6, "graph6")
        ctx = SweepContext(family=family, seed=seed, rank_cap=cap, g6=g6)
        ctx.shape = classify_shape(g)
        for cid in ids:
            check = CHECKS[cid]
            if not check.applies(g, ctx):
                continue
            fails, new_notes = check.run(g, ctx)
            notes.extend(new_notes)
            if fails:
                tallies[cid]["fail"] += 1
                counters.extend(
                    Counterexample(graph6=g6, check=cid, details=d) for d in fails
                )
            else:
                tallies[cid]["pass"] += 1
    return tallies, counters, notes


# ---------------------------------------------------------------------------
# small-case survey


def small_case_survey(max_n: int = 6) -> dict[int, list[str]]:
    """Unicyclic graphs of diameter at most 3 whose rank equals the
    diametrical-path value, grouped by path order (graph6 strings)."""
    positives: dict[int, list[str]] = {}
    for n in range(3, max_n + 1):
        for g in enumerate_family("unicyclic", n):
            d = diameter(g)
            if d > 3:
                continue
            if smr_unicyclic(g).value == smr_path(d + 1):
                positives.setdefault(d + 1, []).append(graph6(g))
    return {k: sorted(v) for k, v in sorted(positives.items())}
