"""Structural recognizers and decision procedures for rank-equality theorems.

The central question: when does the minimum skew rank of a tree or connected
unicyclic graph equal that of one of its diametrical paths?  The answers are
structural (centipede conditions on joints, and for unicyclic graphs a small
table of admissible cycle placements).  Predicates here quantify
existentially over diametrical paths and both orientations of each; the
enumeration sweeps in :mod:`skewrank.oracle` confirm that this reading agrees
with direct computation on every graph they visit.

Clause identifiers for the even-length case mirror the characterization's own
numbering (1 through 6 with sub-letters) so that a failed verdict points at a
specific condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InternalContradictionError, UnsupportedShapeError
from .graphs import (
    CycleInfo,
    Graph,
    Path,
    classify_shape,
    delete_vertices,
    diameter,
    diametrical_paths,
    find_unique_cycle,
    graph6,
    is_path_in,
)
from .ranks import smr_path, smr_unicyclic


@dataclass(frozen=True)
class Centipede:
    """A tree that is a path (the spine) plus leaves on interior spine vertices.

    Joints are the 1-based spine indices carrying legs; the centipede is
    regular when no two consecutive spine vertices are joints.
    """

    spine: Path
    joints: tuple[int, ...]
    legs: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def regular(self) -> bool:
        return all(b - a >= 2 for a, b in zip(self.joints, self.joints[1:]))

    @property
    def leg_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.legs)


@dataclass(frozen=True)
class ClassificationVerdict:
    """Outcome of a rank-equality decision.

    When the predicate holds, the witnessing spine orientation and structure
    are attached; when it fails, ``clause`` names the first violated
    condition for the first spine orientation tried.
    """

    holds: bool
    case: str
    path_order: int
    clause: str | None
    detail: str
    spine: Path | None = None
    centipede: Centipede | None = None
    cycle_offset: int | None = None
    shared_vertices: tuple[int, ...] | None = None
    off_path_vertices: tuple[int, ...] | None = None
    alternate_reading_agrees: bool | None = None


def recognize_centipede(t: Graph, spine: Path | Sequence[int]) -> Centipede | None:
    """Centipede structure of ``t`` relative to ``spine``, or ``None``.

    Fails (returns ``None``) when some off-spine vertex is not a leaf hanging
    on an interior spine vertex.
    """
    seq = tuple(spine.vertices if isinstance(spine, Path) else spine)
    if not is_path_in(t, seq):
        raise ValueError("spine is not a path of the tree")
    spine_set = set(seq)
    interior = set(seq[1:-1])
    position = {v: i + 1 for i, v in enumerate(seq)}
    legs: dict[int, list[int]] = {}
    for v in range(t.n):
        if v in spine_set:
            continue
        if t.degree(v) != 1:
            return None
        anchor = t.adjacency[v][0]
        if anchor not in interior:
            return None
        legs.setdefault(position[anchor], []).append(v)
    packed = tuple((i, tuple(sorted(vs))) for i, vs in sorted(legs.items()))
    return Centipede(spine=Path(seq), joints=tuple(sorted(legs)), legs=packed)


def _bad_joint_pair(joints: Sequence[int], n: int) -> tuple[int, int] | None:
    """First pair of joints (r odd, s even, 3 <= r < s <= n-2), if any."""
    for r in joints:
        if r % 2 == 0 or r < 3:
            continue
        for s in joints:
            if s % 2 == 0 and r < s <= n - 2:
                return r, s
    return None


def tree_classification(t: Graph) -> ClassificationVerdict:
    """Decide whether the minimum skew rank of a tree equals that of its
    diametrical path.

    With a diametrical path on n vertices: for odd n the tree must be a
    regular centipede whose joints are all even-indexed; for even n it must
    be a centipede with no joint pair (r odd, s even, 3 <= r < s <= n-2).
    Every diametrical path is tried in both orientations.
    """
    if classify_shape(t).kind != "tree":
        raise UnsupportedShapeError("input is not a tree")
    if t.n < 2:
        raise ValueError("classification needs a tree with at least two vertices")
    paths = diametrical_paths(t)
    n = paths[0].order
    case = "tree-odd" if n % 2 else "tree-even"
    first_clause: str | None = None
    first_detail = ""
    for p in paths:
        for seq in (p.vertices, p.vertices[::-1]):
            cp = recognize_centipede(t, seq)
            clause, detail = _tree_spine_failure(cp, n)
            if clause is None:
                return ClassificationVerdict(
                    holds=True,
                    case=case,
                    path_order=n,
                    clause=None,
                    detail=f"centipede with joints {cp.joints} on spine {seq}",
                    spine=Path(seq),
                    centipede=cp,
                )
            if first_clause is None:
                first_clause, first_detail = clause, detail
    return ClassificationVerdict(
        holds=False, case=case, path_order=n, clause=first_clause, detail=first_detail
    )


def _tree_spine_failure(cp: Centipede | None, n: int) -> tuple[str | None, str]:
    if cp is None:
        return "centipede", "some off-spine vertex is not a leaf on an interior spine vertex"
    if n % 2 == 1:
        if not cp.regular:
            return "odd-irregular", f"consecutive joints among {cp.joints}"
        odd_joints = [j for j in cp.joints if j % 2 == 1]
        if odd_joints:
            return "odd-joint-parity", f"odd-indexed joint at {odd_joints[0]}"
        return None, ""
    bad = _bad_joint_pair(cp.joints, n)
    if bad:
        return "even-joint-pair", f"joints r={bad[0]} (odd), s={bad[1]} (even)"
    return None, ""


# ---------------------------------------------------------------------------
# unicyclic classification


def unicyclic_classification(u: Graph) -> ClassificationVerdict:
    """Decide whether the minimum skew rank of a connected unicyclic graph
    equals that of its diametrical path.

    Dispatch on the diametrical path order n: n <= 4 is decided by direct
    computation; odd n >= 5 requires a 4-cycle meeting the path in three
    vertices whose off-path vertex leaves a regular centipede with
    even-indexed joints; even n >= 6 applies the clause table (conditions 1-6).
    The verdict is cross-checked against direct computation and an internal
    contradiction aborts rather than returning a wrong answer.
    """
    if classify_shape(u).kind != "unicyclic":
        raise UnsupportedShapeError("input is not a connected unicyclic graph")
    cycle = find_unique_cycle(u)
    paths = diametrical_paths(u)
    n = paths[0].order
    direct = smr_unicyclic(u).value == smr_path(n)
    if n <= 4:
        value = smr_unicyclic(u).value
        verdict = ClassificationVerdict(
            holds=direct,
            case="unicyclic-small",
            path_order=n,
            clause=None if direct else "small-direct",
            detail=f"direct computation: rank {value} vs path value {smr_path(n)}",
        )
        return verdict
    if n % 2 == 1:
        holds, verdict = _decide_odd(u, cycle, paths, n)
    else:
        orientations = [seq for p in paths for seq in (p.vertices, p.vertices[::-1])]
        holds, verdict = _decide_even(u, cycle, orientations, n, corrected_4f=True)
        literal_holds, _ = _decide_even(u, cycle, orientations, n, corrected_4f=False)
        verdict = _with_agreement(verdict, holds == literal_holds)
    if holds != direct:
        raise InternalContradictionError(
            f"theorem verdict {holds} disagrees with direct computation {direct} "
            f"on {graph6(u)}"
        )
    return verdict


def _with_agreement(v: ClassificationVerdict, agrees: bool) -> ClassificationVerdict:
    return ClassificationVerdict(
        holds=v.holds,
        case=v.case,
        path_order=v.path_order,
        clause=v.clause,
        detail=v.detail,
        spine=v.spine,
        centipede=v.centipede,
        cycle_offset=v.cycle_offset,
        shared_vertices=v.shared_vertices,
        off_path_vertices=v.off_path_vertices,
        alternate_reading_agrees=agrees,
    )


def _decide_odd(
    u: Graph, cycle: CycleInfo, paths: list[Path], n: int
) -> tuple[bool, ClassificationVerdict]:
    """Odd case, universal over diametrical paths.

    Every diametrical path must meet the cycle in three consecutive vertices
    and leave a regular, even-jointed centipede when its off-path cycle
    vertex is deleted.  Universality matters: the path rerouted through the
    cycle is also diametrical, so this constrains both interior cycle
    vertices, exactly as the even case's per-vertex condition does.
    """
    witness = None
    for p in paths:
        ok_here = False
        failure: tuple[str, str] | None = None
        for seq in (p.vertices, p.vertices[::-1]):
            ok, clause, detail, info = _odd_case(u, cycle, seq)
            if ok:
                ok_here = True
                if witness is None:
                    witness = (seq, detail, info)
                break
            if failure is None:
                failure = (clause, detail)
        if not ok_here:
            return False, ClassificationVerdict(
                holds=False,
                case="unicyclic-odd",
                path_order=n,
                clause=failure[0],
                detail=f"path {p.vertices}: {failure[1]}",
            )
    seq, detail, info = witness
    j, cp, shared, off = info
    return True, ClassificationVerdict(
        holds=True,
        case="unicyclic-odd",
        path_order=n,
        clause=None,
        detail=detail,
        spine=Path(seq),
        centipede=cp,
        cycle_offset=j,
        shared_vertices=shared,
        off_path_vertices=off,
    )


def _odd_case(u: Graph, cycle: CycleInfo, seq: tuple[int, ...]):
    n = len(seq)
    position = {v: i + 1 for i, v in enumerate(seq)}
    on_positions = sorted(position[v] for v in cycle.vertices if v in position)
    off = tuple(sorted(v for v in cycle.vertices if v not in position))
    if cycle.k != 4:
        return False, "odd-cycle-length", f"cycle has length {cycle.k}, not 4", None
    j = _run_offset(on_positions, 3)
    if len(off) != 1 or j is None:
        return (
            False,
            "odd-placement",
            "cycle does not meet the path in three consecutive vertices",
            None,
        )
    w = off[0]
    rest, labels = delete_vertices(u, {w})
    if classify_shape(rest).kind != "tree":
        return False, "odd-centipede", f"deleting {w} leaves a non-tree", None
    new_of_old = {old: new for new, old in enumerate(labels)}
    seq_t = tuple(new_of_old[v] for v in seq)
    if diameter(rest) != n - 1:
        return (
            False,
            "odd-path-not-diametrical",
            f"deleting {w} changes the diameter",
            None,
        )
    cp = recognize_centipede(rest, seq_t)
    if cp is None:
        return False, "odd-centipede", f"graph minus {w} is not a centipede", None
    if not cp.regular:
        return False, "odd-irregular", f"consecutive joints among {cp.joints}", None
    odd_joints = [i for i in cp.joints if i % 2 == 1]
    if odd_joints:
        return False, "odd-joint-parity", f"odd-indexed joint at {odd_joints[0]}", None
    shared = tuple(seq[i - 1] for i in on_positions)
    detail = (
        f"4-cycle at offset {j}; removing {w} leaves a regular centipede "
        f"with even joints {cp.joints}"
    )
    return True, None, detail, (j, cp, shared, off)


def _decide_even(
    u: Graph,
    cycle: CycleInfo,
    orientations: list[tuple[int, ...]],
    n: int,
    corrected_4f: bool,
) -> tuple[bool, ClassificationVerdict]:
    first: tuple[str, str] | None = None
    for seq in orientations:
        ok, clause, detail, j = _even_case(u, cycle, seq, corrected_4f)
        if ok:
            position = {v: i + 1 for i, v in enumerate(seq)}
            shared = tuple(v for v in seq if v in set(cycle.vertices))
            off = tuple(sorted(v for v in cycle.vertices if v not in position))
            return True, ClassificationVerdict(
                holds=True,
                case="unicyclic-even",
                path_order=n,
                clause=None,
                detail=detail,
                spine=Path(seq),
                cycle_offset=j,
                shared_vertices=shared,
                off_path_vertices=off,
            )
        if first is None:
            first = (clause, detail)
    return False, ClassificationVerdict(
        holds=False,
        case="unicyclic-even",
        path_order=n,
        clause=first[0],
        detail=first[1],
    )


def _even_case(
    u: Graph, cycle: CycleInfo, seq: tuple[int, ...], corrected_4f: bool
):
    """Evaluate the even-length clause table for one spine orientation.

    Returns (ok, clause, detail, cycle offset).  ``corrected_4f`` switches the
    guard of clause 4f between the mirror-symmetric reading (j = n-2, matching
    clause 4e under path reversal) and the literal one (j = n, never active
    given 4a).
    """
    n = len(seq)
    position = {v: i + 1 for i, v in enumerate(seq)}
    on_positions = sorted(position[v] for v in cycle.vertices if v in position)
    off = [v for v in cycle.vertices if v not in position]
    k = cycle.k

    def d(i: int) -> int:
        return u.degree(seq[i - 1])

    for w in sorted(off):
        if not _off_vertex_leaves_centipede(u, seq, w, off):
            return False, "1", f"deleting cycle vertex {w} violates the centipede condition", None
    if k not in (3, 4, 6):
        return False, "2", f"cycle length {k} not in {{3, 4, 6}}", None
    if k == 3:
        j = _run_offset(on_positions, 2)
        if j is None:
            return False, "3-placement", "3-cycle does not meet the path in two consecutive vertices", None
        if j == 1 and not (d(1) == 2 and d(2) == 3):
            return False, "3b", "degrees at positions 1 and 2 must be 2 and 3", j
        if j == n - 1 and not (d(n) == 2 and d(n - 1) == 3):
            return False, "3c", "degrees at positions n and n-1 must be 2 and 3", j
        if j % 2 == 1 and 3 <= j <= n - 3 and not (d(j) == 3 and d(j + 1) == 3):
            return False, "3d", f"degrees at positions {j} and {j + 1} must be 3", j
        if not _tails_degree_two(d, n, j, j + 1):
            return False, "3e", "a vertex off the cycle span has extra neighbors", j
        return True, None, f"3-cycle at offset {j}", j
    if k == 4:
        if len(on_positions) == 3:
            j = _run_offset(on_positions, 3)
            if j is None:
                return False, "4-placement", "shared vertices are not consecutive", None
            if d(j + 1) != 2:
                return False, "4b", f"degree at position {j + 1} must be 2", j
            if j == 1 and d(1) != 2:
                return False, "4c", "degree at position 1 must be 2", j
            if j == n - 2 and d(n) != 2:
                return False, "4d", "degree at position n must be 2", j
            if j == 1 and d(3) > 3 and not _all_two(d, _between(0, 3, n)):
                return False, "4e", "even positions above 3 must have degree 2", j
            guard_4f = (j == n - 2) if corrected_4f else (j == n)
            if guard_4f and d(n - 2) > 3 and not _all_two(d, _between(1, 1, n - 2)):
                return False, "4f", "odd positions below n-2 must have degree 2", j
            if (
                j % 2 == 1
                and 3 <= j <= n - 3
                and (d(j) > 3 or d(j + 2) > 3)
                and not _all_two(d, _between(0, j + 2, n))
            ):
                return False, "4g", "even positions above the cycle span must have degree 2", j
            if (
                j % 2 == 0
                and 2 <= j <= n - 4
                and (d(j) > 3 or d(j + 2) > 3)
                and not _all_two(d, _between(1, 1, j))
            ):
                return False, "4h", "odd positions below the cycle span must have degree 2", j
            for r in _between(1, 3 - 1, n - 3 + 1):
                if r in (j, j + 2) or d(r) <= 2:
                    continue
                tail = [i for i in _between(0, r, n) if i not in (j, j + 2)]
                if not _all_two(d, tail):
                    return False, "4i", f"joint at odd position {r} forbids later even joints", j
            for r in _between(0, 4 - 1, n - 2 + 1):
                if r in (j, j + 2) or d(r) <= 2:
                    continue
                head = [i for i in _between(1, 1, r) if i not in (j, j + 2)]
                if not _all_two(d, head):
                    return False, "4j", f"joint at even position {r} forbids earlier odd joints", j
            return True, None, f"4-cycle spanning three path vertices at offset {j}", j
        if len(on_positions) == 2:
            j = _run_offset(on_positions, 2)
            if j is None:
                return False, "5-placement", "shared vertices are not consecutive", None
            if j % 2 == 0 or not 3 <= j <= n - 3:
                return False, "5a", f"offset {j} must be odd with 3 <= j <= n-3", j
            if not (d(j) == 3 and d(j + 1) == 3):
                return False, "5b", f"degrees at positions {j} and {j + 1} must be 3", j
            if not _tails_degree_two(d, n, j, j + 1):
                return False, "5c", "a vertex off the cycle span has extra neighbors", j
            return True, None, f"4-cycle spanning two path vertices at offset {j}", j
        # neither premise pattern applies; conditions 1 and 2 alone decide
        return True, None, "4-cycle placement outside the premise patterns", None
    # k == 6
    j = _run_offset(on_positions, 4)
    if j is None:
        return False, "6-placement", "6-cycle does not meet the path in four consecutive vertices", None
    if j % 2 == 0:
        return False, "6a", f"offset {j} must be odd", j
    if not (d(j + 1) == 2 and d(j + 2) == 2):
        return False, "6b", f"degrees at positions {j + 1} and {j + 2} must be 2", j
    if j == 1 and not (d(1) == 2 and d(4) == 3):
        return False, "6c", "degrees at positions 1 and 4 must be 2 and 3", j
    if j == n - 3 and not (d(n) == 2 and d(n - 3) == 3):
        return False, "6d", "degrees at positions n and n-3 must be 2 and 3", j
    if 3 <= j <= n - 5 and not (d(j) == 3 and d(j + 3) == 3):
        return False, "6e", f"degrees at positions {j} and {j + 3} must be 3", j
    if not _tails_degree_two(d, n, j, j + 1):
        return False, "6f", "a vertex off the cycle span has extra neighbors", j
    return True, None, f"6-cycle at offset {j}", j


def _off_vertex_leaves_centipede(
    u: Graph, seq: tuple[int, ...], w: int, off: Sequence[int]
) -> bool:
    """Condition 1 for one off-path cycle vertex ``w``.

    Either deleting ``w`` leaves a centipede for which the original spine is
    still diametrical with no forbidden joint pair, or it leaves a centipede
    whose diametrical path extends the spine by another off-path cycle vertex
    ``z`` hanging at an end, with all joints odd-indexed (z at the front) or
    even-indexed (z at the back) relative to the original numbering.
    """
    n = len(seq)
    rest, labels = delete_vertices(u, {w})
    if classify_shape(rest).kind != "tree":
        return False
    new_of_old = {old: new for new, old in enumerate(labels)}
    seq_t = tuple(new_of_old[v] for v in seq)
    diam_rest = diameter(rest)
    if diam_rest == n - 1:
        cp = recognize_centipede(rest, seq_t)
        if cp is not None and _bad_joint_pair(cp.joints, n) is None:
            return True
    for z in off:
        if z == w:
            continue
        for endpoint, front in ((seq[0], True), (seq[-1], False)):
            if not u.has_edge(z, endpoint):
                continue
            if diam_rest != n:
                continue
            extended = (
                (new_of_old[z],) + seq_t if front else seq_t + (new_of_old[z],)
            )
            if not is_path_in(rest, extended):
                continue
            cp = recognize_centipede(rest, extended)
            if cp is None:
                continue
            # map joint positions on the extended spine back to the original numbering
            original_index = [i - 1 if front else i for i in cp.joints]
            want = 1 if front else 0
            if all(i % 2 == want for i in original_index):
                return True
    return False


def _run_offset(positions: Sequence[int], length: int) -> int | None:
    """Starting index when ``positions`` is exactly a consecutive run."""
    if len(positions) != length:
        return None
    start = positions[0]
    return start if list(positions) == list(range(start, start + length)) else None


def _between(parity: int, lo: int, hi: int) -> list[int]:
    """Indices of the given parity strictly between lo and hi."""
    return [i for i in range(lo + 1, hi) if i % 2 == parity]


def _all_two(d, indices: Sequence[int]) -> bool:
    return all(d(i) == 2 for i in indices)


def _tails_degree_two(d, n: int, low: int, high: int) -> bool:
    """Degree-2 requirement on odd positions below ``low`` and even positions
    above ``high`` (exclusive on both sides)."""
    return _all_two(d, _between(1, 1, low)) and _all_two(d, _between(0, high, n))


# ---------------------------------------------------------------------------
# fixture builders


def path(n: int) -> Graph:
    """The path on ``n`` vertices, labeled 0..n-1 along the spine."""
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """The cycle on ``n`` vertices, labeled 0..n-1 around the ring."""
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def centipede(n: int, legs: Mapping[int, int] | None = None) -> Graph:
    """A spine path 0..n-1 with ``legs[i]`` leaves on the 1-based interior
    spine index ``i``; leaf labels continue from n in joint order."""
    if n < 1:
        raise ValueError("a centipede needs at least one spine vertex")
    legs = dict(legs or {})
    edges = [(i, i + 1) for i in range(n - 1)]
    nxt = n
    for idx in sorted(legs):
        if not 2 <= idx <= n - 1:
            raise ValueError(f"joint index {idx} is not an interior spine position")
        if legs[idx] < 1:
            raise ValueError(f"joint {idx} needs at least one leg")
        for _ in range(legs[idx]):
            edges.append((idx - 1, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def n_sun(n: int) -> Graph:
    """A cycle 0..n-1 with one leaf n+i on every cycle vertex i."""
    if n < 3:
        raise ValueError("a sun needs a cycle of at least three vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.extend((i, n + i) for i in range(n))
    return Graph.from_edges(2 * n, edges)


def dandelion(n: int, attachments: Mapping[int, int]) -> Graph:
    """A cycle 0..n-1 with ``attachments[i]`` leaves on the 1-based cycle
    position ``i``; the attachment set must be nonempty."""
    if n < 3:
        raise ValueError("a dandelion needs a cycle of at least three vertices")
    if not attachments:
        raise ValueError("a dandelion needs at least one attachment vertex")
    edges = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for idx in sorted(attachments):
        if not 1 <= idx <= n:
            raise ValueError(f"attachment index {idx} is not a cycle position")
        if attachments[idx] < 1:
            raise ValueError(f"attachment {idx} needs at least one leaf")
        for _ in range(attachments[idx]):
            edges.append((idx - 1, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


_PINEAPPLE_RULES = {
    1: ("odd", (3, -1), "odd", lambda n, j: (3, j)),
    2: ("odd", (1, -3), "even", lambda n, j: (j + 1, n - 2)),
    3: ("even", (4, -2), "odd", lambda n, j: (3, j - 1)),
    4: ("even", (2, -4), "even", lambda n, j: (j + 2, n - 2)),
}


def pineapple_graph(variant: int, n: int, j: int, i: int) -> Graph:
    """A path 0..n-1 plus a vertex w adjacent to positions j and j+1 and a
    leaf z at position i (all 1-based); the four variants differ only in the
    allowed parities and ranges of j and i."""
    if variant not in _PINEAPPLE_RULES:
        raise ValueError(f"variant must be 1..4, got {variant}")
    if n < 6 or n % 2:
        raise ValueError("n must be even and at least 6")
    j_parity, (j_lo, j_hi_off), i_parity, i_range = _PINEAPPLE_RULES[variant]
    j_hi = n + j_hi_off
    if j % 2 != (1 if j_parity == "odd" else 0):
        raise ValueError(f"variant {variant} requires j {j_parity}")
    if not j_lo <= j <= j_hi:
        raise ValueError(f"variant {variant} requires {j_lo} <= j <= n{j_hi_off}")
    i_lo, i_hi = i_range(n, j)
    if i % 2 != (1 if i_parity == "odd" else 0):
        raise ValueError(f"variant {variant} requires i {i_parity}")
    if not i_lo <= i <= i_hi:
        raise ValueError(f"variant {variant} requires {i_lo} <= i <= {i_hi}")
    w, z = n, n + 1
    edges = [(a, a + 1) for a in range(n - 1)]
    edges.extend([(j - 1, w), (w, j), (i - 1, z)])
    return Graph.from_edges(n + 2, edges)
