"""Minimum skew rank: closed forms, the pendant-star reduction, and certificates.

The minimum skew rank of a graph is the smallest rank among real
skew-symmetric matrices whose off-diagonal nonzero pattern is exactly the
edge set.  For paths, cycles, trees, and connected unicyclic graphs the value
has exact combinatorial formulas; this module implements them together with
the pendant-star reduction that proves the unicyclic case, and cross-checks
every unicyclic answer against the matching-based closed form, aborting
loudly on disagreement instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InternalContradictionError, UnsupportedShapeError
from .graphs import (
    CycleInfo,
    Graph,
    classify_shape,
    connected_components,
    delete_vertices,
    find_unique_cycle,
    induced_subgraph,
)
from .matching import matching_number

VALID_METHODS = (
    "path-formula",
    "cycle-formula",
    "tree-matching",
    "star-reduction",
    "dandelion-formula",
    "cut-vertex",
    "forest-sum",
)


def smr_path(n: int) -> int:
    """Minimum skew rank of the path on ``n`` vertices: n if even, n-1 if odd."""
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return n if n % 2 == 0 else n - 1


def smr_cycle(n: int) -> int:
    """Minimum skew rank of the cycle on ``n`` vertices: n-2 if even, n-1 if odd."""
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return n - 2 if n % 2 == 0 else n - 1


def max_skew_rank(g: Graph) -> int:
    """Maximum skew rank: twice the matching number."""
    return 2 * matching_number(g)


def smr_tree(t: Graph) -> int:
    """Minimum skew rank of a tree (or forest): twice the matching number."""
    if t.edge_count != t.n - len(connected_components(t)):
        raise UnsupportedShapeError("input is not a forest")
    return 2 * matching_number(t)


# ---------------------------------------------------------------------------
# pendant stars and the reduction


@dataclass(frozen=True)
class PendantStar:
    """A vertex with at least one pendant leaf whose removal (with the leaves)
    keeps the rest connected unicyclic."""

    center: int
    leaves: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center,) + self.leaves


@dataclass(frozen=True)
class PartialDandelion:
    """A cycle with leaves appended at a nonempty subset of cycle vertices."""

    host: Graph
    cycle: CycleInfo
    attachments: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def k(self) -> int:
        """Number of cycle vertices carrying leaves."""
        return len(self.attachments)

    @property
    def attachment_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.attachments)

    @property
    def is_n_sun(self) -> bool:
        return self.k == self.cycle.k and all(len(ls) == 1 for _, ls in self.attachments)

    @property
    def is_partial_n_sun(self) -> bool:
        return self.k < self.cycle.k and all(len(ls) == 1 for _, ls in self.attachments)


@dataclass(frozen=True)
class StarStep:
    """One reduction step: the star removed (in original labels) and the
    remaining graph with its label map back to the original."""

    star: PendantStar
    remaining: Graph
    remaining_labels: tuple[int, ...]


@dataclass(frozen=True)
class StarReductionTrace:
    """Full record of the pendant-star reduction of a connected unicyclic graph."""

    host: Graph
    steps: tuple[StarStep, ...]
    terminal: Graph
    terminal_labels: tuple[int, ...]
    terminal_cycle: CycleInfo | None
    terminal_dandelion: PartialDandelion | None

    @property
    def s(self) -> int:
        """Accumulated rank contribution: 2 per removed star."""
        return 2 * len(self.steps)

    @property
    def kind(self) -> str:
        return "cycle" if self.terminal_cycle is not None else "dandelion"


@dataclass(frozen=True)
class SkewRankCertificate:
    """A minimum-skew-rank value with machine-checkable evidence."""

    value: int
    method: str
    trace: StarReductionTrace | None = None
    witness: object | None = None
    lower_bound: int | None = None

    def __post_init__(self) -> None:
        if self.value % 2 or self.value < 0:
            raise ValueError("minimum skew rank is always even and nonnegative")
        if self.method not in VALID_METHODS:
            raise ValueError(f"unknown method {self.method!r}")


def _require_connected_unicyclic(g: Graph) -> None:
    if classify_shape(g).kind != "unicyclic":
        raise UnsupportedShapeError("input is not a connected unicyclic graph")


def iter_pendant_stars(u: Graph) -> Iterable[PendantStar]:
    """All pendant stars of a connected unicyclic graph, by center label.

    A center must have degree at least two, and deleting it must leave
    exactly its pendant leaves as isolated vertices plus one connected
    unicyclic component.
    """
    _require_connected_unicyclic(u)
    for v in range(u.n):
        if u.degree(v) < 2:
            continue
        rest, labels = delete_vertices(u, {v})
        comps = connected_components(rest)
        singles = [c for c in comps if len(c) == 1]
        bigs = [c for c in comps if len(c) > 1]
        if not singles or len(bigs) != 1:
            continue
        big = set(bigs[0])
        big_edges = sum(1 for i, j in rest.edges if i in big and j in big)
        if big_edges != len(big):
            continue
        leaves = tuple(sorted(labels[c[0]] for c in singles))
        yield PendantStar(v, leaves)


def find_pendant_star(u: Graph) -> PendantStar | None:
    """The pendant star with the smallest center label, or ``None``."""
    return next(iter(iter_pendant_stars(u)), None)


def star_reduce(u: Graph) -> StarReductionTrace:
    """Repeatedly strip pendant stars until a bare cycle or partial dandelion.

    Each removal contributes 2 to the rank, so the minimum skew rank of the
    input equals that of the terminal graph plus ``trace.s``.  A terminal
    that is neither shape would falsify the reduction's correctness argument
    and raises :class:`InternalContradictionError` rather than guessing.
    """
    _require_connected_unicyclic(u)
    current = u
    labels = tuple(range(u.n))
    steps: list[StarStep] = []
    while True:
        star = find_pendant_star(current)
        if star is None:
            break
        original = PendantStar(
            labels[star.center], tuple(labels[v] for v in star.leaves)
        )
        nxt, kept = delete_vertices(current, set(star.vertices))
        labels = tuple(labels[i] for i in kept)
        if classify_shape(nxt).kind != "unicyclic":
            raise InternalContradictionError(
                "removing a pendant star did not leave a connected unicyclic graph"
            )
        steps.append(StarStep(star=original, remaining=nxt, remaining_labels=labels))
        current = nxt
    if all(current.degree(v) == 2 for v in range(current.n)):
        cycle = find_unique_cycle(current)
        dandelion = None
    else:
        dandelion = recognize_partial_dandelion(current)
        cycle = None
        if dandelion is None:
            raise InternalContradictionError(
                "star reduction terminated on a graph that is neither a bare "
                "cycle nor a partial dandelion"
            )
    return StarReductionTrace(
        host=u,
        steps=tuple(steps),
        terminal=current,
        terminal_labels=labels,
        terminal_cycle=cycle,
        terminal_dandelion=dandelion,
    )


def recognize_partial_dandelion(g: Graph) -> PartialDandelion | None:
    """The dandelion structure of ``g``, or ``None`` if some vertex outside
    the cycle is not a leaf hanging directly on it."""
    _require_connected_unicyclic(g)
    cycle = find_unique_cycle(g)
    on_cycle = set(cycle.vertices)
    attachments: dict[int, list[int]] = {}
    for v in range(g.n):
        if v in on_cycle:
            continue
        if g.degree(v) != 1:
            return None
        anchor = g.adjacency[v][0]
        if anchor not in on_cycle:
            return None
        attachments.setdefault(anchor, []).append(v)
    if not attachments:
        return None
    packed = tuple(
        (anchor, tuple(sorted(leaves)))
        for anchor, leaves in sorted(attachments.items())
    )
    return PartialDandelion(host=g, cycle=cycle, attachments=packed)


def smr_partial_dandelion(d: PartialDandelion) -> int:
    """2k plus twice the matching number of the graph minus the k anchors."""
    anchors = {anchor for anchor, _ in d.attachments}
    rest, _ = delete_vertices(d.host, anchors)
    return 2 * d.k + 2 * matching_number(rest)


def smr_unicyclic(u: Graph) -> SkewRankCertificate:
    """Minimum skew rank of a connected unicyclic graph, via star reduction.

    The reduction value (terminal formula plus 2 per removed star) is checked
    against the matching closed form before being returned.
    """
    trace = star_reduce(u)
    if trace.terminal_cycle is not None:
        terminal_value = smr_cycle(trace.terminal_cycle.k)
    else:
        terminal_value = smr_partial_dandelion(trace.terminal_dandelion)
    value = terminal_value + trace.s
    formula = _matching_formula(u, trace)
    if value != formula:
        raise InternalContradictionError(
            f"star reduction gives {value} but the matching formula gives {formula}"
        )
    if trace.steps:
        method = "star-reduction"
    elif trace.terminal_cycle is not None:
        method = "cycle-formula"
    else:
        method = "dandelion-formula"
    return SkewRankCertificate(value=value, method=method, trace=trace)


def _matching_formula(u: Graph, trace: StarReductionTrace) -> int:
    m = matching_number(u)
    cycle = trace.terminal_cycle
    if cycle is not None and cycle.k % 2 == 0 and cycle.k >= 4:
        return 2 * m - 2
    return 2 * m


def smr_unicyclic_formula(u: Graph) -> int:
    """Matching closed form: 2*match - 2 when the star-reduced form is a bare
    even cycle, 2*match otherwise."""
    _require_connected_unicyclic(u)
    return _matching_formula(u, star_reduce(u))


def smr_equals_max(u: Graph) -> bool:
    """Whether the minimum and maximum skew ranks coincide: true exactly when
    the cycle length is odd or the star-reduced form is not the bare cycle."""
    trace = star_reduce(u)
    k = find_unique_cycle(u).k
    predicted = k % 2 == 1 or trace.terminal_cycle is None
    direct = smr_unicyclic(u).value == max_skew_rank(u)
    if predicted != direct:
        raise InternalContradictionError(
            f"equality criterion predicts {predicted} but direct comparison gives {direct}"
        )
    return predicted


# ---------------------------------------------------------------------------
# general dispatch, forests, rank spread, cut vertices


def smr_forest(f: Graph) -> int:
    """Sum of per-component minimum skew ranks (block-diagonal additivity);
    every component must be a tree or connected unicyclic."""
    total = 0
    for comp in connected_components(f):
        sub, _ = induced_subgraph(f, comp)
        kind = classify_shape(sub).kind
        if kind == "tree":
            total += 2 * matching_number(sub)
        elif kind == "unicyclic":
            total += smr_unicyclic(sub).value
        else:
            raise UnsupportedShapeError(
                "a component is neither a tree nor connected unicyclic"
            )
    return total


def minimum_skew_rank(g: Graph) -> SkewRankCertificate:
    """Minimum skew rank of any graph whose components are trees or unicyclic."""
    shape = classify_shape(g)
    if shape.kind == "tree":
        if _is_path_graph(g):
            return SkewRankCertificate(value=smr_path(g.n), method="path-formula")
        return SkewRankCertificate(value=2 * matching_number(g), method="tree-matching")
    if shape.kind == "unicyclic":
        return smr_unicyclic(g)
    return SkewRankCertificate(value=smr_forest(g), method="forest-sum")


def _is_path_graph(g: Graph) -> bool:
    if g.n == 0 or not len(connected_components(g)) == 1:
        return False
    if g.n == 1:
        return True
    degrees = sorted(g.degree(v) for v in range(g.n))
    return g.edge_count == g.n - 1 and degrees[0] == degrees[1] == 1 and degrees[-1] <= 2


def skew_rank_spread(g: Graph, v: int) -> int:
    """Rank drop when deleting ``v``: always 0 or 2."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    whole = minimum_skew_rank(g).value
    rest, _ = delete_vertices(g, {v})
    spread = whole - minimum_skew_rank(rest).value
    if spread not in (0, 2):
        raise InternalContradictionError(f"rank spread {spread} is not 0 or 2")
    return spread


def cut_vertex_reduce(g: Graph, v: int) -> SkewRankCertificate:
    """Minimum skew rank through a cut vertex.

    With branches G_i (each component of g-v together with v), the answer is
    the sum of the branch values without v, plus 2 exactly when some branch
    has rank spread 2 at v.  Every branch must be a tree or connected
    unicyclic; the surrounding graph itself may be neither.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    base_comps = connected_components(g)
    rest, labels = delete_vertices(g, {v})
    rest_comps = connected_components(rest)
    if len(rest_comps) <= len(base_comps):
        raise ValueError(f"vertex {v} is not a cut-vertex")
    total = 0
    spreads: list[int] = []
    for comp in rest_comps:
        members = {labels[i] for i in comp}
        without, _ = induced_subgraph(g, members)
        without_value = minimum_skew_rank(without).value
        total += without_value
        if not any(g.has_edge(v, w) for w in members):
            continue  # a component v never touched has spread 0 by additivity
        branch, _ = induced_subgraph(g, members | {v})
        kind = classify_shape(branch).kind
        if kind not in ("tree", "unicyclic"):
            raise UnsupportedShapeError(
                "a branch at the cut-vertex is neither a tree nor connected unicyclic"
            )
        spread = minimum_skew_rank(branch).value - without_value
        if spread not in (0, 2):
            raise InternalContradictionError(f"branch rank spread {spread} is not 0 or 2")
        spreads.append(spread)
    value = total + (2 if any(s == 2 for s in spreads) else 0)
    return SkewRankCertificate(value=value, method="cut-vertex")
