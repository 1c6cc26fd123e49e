"""State sum over acceptable thickened-arc objects of the intersection digraph.

The labeled intersection digraph of a diagram has one vertex per chord, a
loop leaving every vertex, an uncolored arc small->large for every crossing
pair, and a red arc inner->outer for every nesting pair.  An acceptable
object is a set of arcs, each thickened at one end, such that every vertex
meets 0, 2 or 4 arc-ends, exactly half of the ends at a vertex are thickened
there, and when two arcs are thickened at a vertex one enters and one leaves
(a loop counts as leaving, contributes two ends and is thickened at its
initial segment).

Candidate arcs, per underlying arc:
  * loop at v: one candidate;
  * uncolored arc (u, v), u < v: thickened at u or at v, the reversed
    orientation never occurs, and both thickenings may coexist in one object;
  * red pair inner i / outer j: both orientations i->j and j->i are
    candidates, each thickened at i, independently selectable.

The partition function is
    J(G) = sum over acceptable K of
           2^deg4(K) * (λ+2)^(|V| - deg4(K)) * x_K * (-1)^a(K)
with deg4(K) the number of degree-4 vertices, a(K) the number of arcs
thickened at their initial end, and x_K the product of integer arc weights
(all 1 by default).
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .caps import DEFAULT_STATESUM_CHORDS, SizeCapError
from .diagrams import ChordDiagram
from .polynomials import LAM_PLUS_TWO, ZERO, IntPoly

ArcKey = tuple


@dataclass(frozen=True, order=True)
class ThickenedArc:
    """One candidate arc: orientation tail->head, thickened at `thick`."""

    kind: str  # "loop" | "uncolored" | "red"
    tail: int
    head: int
    thick: int

    @property
    def thickened_at_initial(self) -> bool:
        return self.thick == self.tail

    def underlying_key(self) -> ArcKey:
        if self.kind == "loop":
            return ("loop", self.tail)
        if self.kind == "uncolored":
            return ("uncolored", self.tail, self.head)
        # Both orientations of a red pair share one underlying arc, keyed by
        # the inner vertex (the thickened one) first.
        other = self.head if self.thick == self.tail else self.tail
        return ("red", self.thick, other)

    def to_text(self) -> str:
        """1-based display form, e.g. "loop@2", "1->3@1", "red:3->2@3"."""
        if self.kind == "loop":
            return f"loop@{self.tail + 1}"
        prefix = "red:" if self.kind == "red" else ""
        return f"{prefix}{self.tail + 1}->{self.head + 1}@{self.thick + 1}"


@dataclass
class LabeledIntersectionDigraph:
    """Digraph with one loop per vertex, uncolored arcs and red arcs.

    `uncolored` holds pairs (u, v) with u < v; `red` holds (inner, outer)
    nesting pairs, thickening pinned at the inner vertex.  Arc weights map
    underlying-arc keys to integers and default to 1.  Treated as immutable
    after construction.
    """

    n: int
    uncolored: tuple[tuple[int, int], ...]
    red: tuple[tuple[int, int], ...]
    weights: dict[ArcKey, int] = field(default_factory=dict)

    def __post_init__(self):
        pairs = set()
        for u, v in self.uncolored:
            if not (0 <= u < v < self.n):
                raise ValueError(f"uncolored arc ({u}, {v}) must satisfy 0 <= u < v < n")
            if (u, v) in pairs:
                raise ValueError(f"duplicate uncolored arc ({u}, {v})")
            pairs.add((u, v))
        red_pairs = set()
        for i, j in self.red:
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"red arc ({i}, {j}) out of range")
            key = (min(i, j), max(i, j))
            if key in pairs:
                raise ValueError(f"red arc ({i}, {j}) duplicates an uncolored arc")
            if key in red_pairs:
                raise ValueError(f"duplicate red arc on pair {key}")
            red_pairs.add(key)

    def weight(self, key: ArcKey) -> int:
        return self.weights.get(key, 1)


@dataclass(frozen=True)
class AcceptableObject:
    """An acceptable set of thickened arcs with its two statistics."""

    arcs: tuple[ThickenedArc, ...]
    deg4: int
    a: int


def build_lid(
    d: ChordDiagram, weights: Mapping[ArcKey, int] | None = None
) -> LabeledIntersectionDigraph:
    """Labeled intersection digraph of a diagram (vertices inherit chord order)."""
    n = d.n
    uncolored = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if d.intersects(i, j)
    )
    red = tuple(
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and d.contains(i, j)
    )
    return LabeledIntersectionDigraph(n, uncolored, red, dict(weights or {}))


def candidate_arcs(g: LabeledIntersectionDigraph) -> tuple[ThickenedArc, ...]:
    """The full candidate universe, grouped by the smaller incident vertex."""
    out: list[ThickenedArc] = []
    for stage in _stage_candidates(g):
        out.extend(stage)
    return tuple(out)


def _stage_candidates(g: LabeledIntersectionDigraph) -> list[list[ThickenedArc]]:
    # Stage v lists every candidate whose smaller endpoint is v; after the
    # stage is decided, vertex v meets no further candidates.
    uncolored = set(g.uncolored)
    red_by_pair: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j in g.red:
        red_by_pair[(min(i, j), max(i, j))] = (i, j)
    stages: list[list[ThickenedArc]] = []
    for v in range(g.n):
        cands = [ThickenedArc("loop", v, v, v)]
        for w in range(v + 1, g.n):
            if (v, w) in uncolored:
                cands.append(ThickenedArc("uncolored", v, w, v))
                cands.append(ThickenedArc("uncolored", v, w, w))
            pair = red_by_pair.get((v, w))
            if pair is not None:
                inner, outer = pair
                cands.append(ThickenedArc("red", inner, outer, inner))
                cands.append(ThickenedArc("red", outer, inner, inner))
        stages.append(cands)
    return stages


def _vertex_effects(c: ThickenedArc) -> tuple[tuple[int, int, int, int, int], ...]:
    # (vertex, ends, thickened-here, thickened-in, thickened-out)
    if c.kind == "loop":
        return ((c.tail, 2, 1, 0, 1),)
    if c.thick == c.tail:
        return ((c.tail, 1, 1, 0, 1), (c.head, 1, 0, 0, 0))
    return ((c.tail, 1, 0, 0, 0), (c.head, 1, 1, 1, 0))


def is_acceptable(
    g: LabeledIntersectionDigraph, arcs: Sequence[ThickenedArc]
) -> bool:
    """Validator for the acceptability constraints (duplicates rejected)."""
    universe = set(candidate_arcs(g))
    if len(set(arcs)) != len(tuple(arcs)):
        return False
    ends = [0] * g.n
    thick = [0] * g.n
    tin = [0] * g.n
    tout = [0] * g.n
    for c in arcs:
        if c not in universe:
            return False
        for v, de, dt, din, dout in _vertex_effects(c):
            ends[v] += de
            thick[v] += dt
            tin[v] += din
            tout[v] += dout
    for v in range(g.n):
        if ends[v] not in (0, 2, 4):
            return False
        if 2 * thick[v] != ends[v]:
            return False
        if thick[v] == 2 and not (tin[v] == 1 and tout[v] == 1):
            return False
    return True


def object_stats(arcs: Sequence[ThickenedArc], n: int) -> tuple[int, int]:
    """(deg4, a) of an arc set: degree-4 vertex count and initial-thickened count."""
    ends = [0] * n
    for c in arcs:
        for v, de, *_ in _vertex_effects(c):
            ends[v] += de
    deg4 = sum(1 for v in range(n) if ends[v] == 4)
    a = sum(1 for c in arcs if c.thickened_at_initial)
    return deg4, a


def enumerate_acceptable(
    g: LabeledIntersectionDigraph,
) -> Iterator[AcceptableObject]:
    """All acceptable objects, each exactly once, in a deterministic order.

    Backtracking over candidates grouped by smaller endpoint; a vertex is
    validated exactly when its last incident candidate has been decided, and
    partial selections violating the running bounds (at most four ends, at
    most one thickened-in and one thickened-out) are pruned immediately.
    """
    n = g.n
    if n == 0:
        yield AcceptableObject((), 0, 0)
        return
    stages = _stage_candidates(g)
    effects = {id(c): _vertex_effects(c) for stage in stages for c in stage}
    ends = [0] * n
    thick = [0] * n
    tin = [0] * n
    tout = [0] * n
    chosen: list[ThickenedArc] = []

    def vertex_ok(v: int) -> bool:
        e = ends[v]
        if e not in (0, 2, 4):
            return False
        if 2 * thick[v] != e:
            return False
        return thick[v] != 2 or (tin[v] == 1 and tout[v] == 1)

    def go(stage_idx: int, cand_idx: int) -> Iterator[AcceptableObject]:
        stage = stages[stage_idx]
        if cand_idx == len(stage):
            if not vertex_ok(stage_idx):
                return
            if stage_idx + 1 == n:
                deg4 = sum(1 for v in range(n) if ends[v] == 4)
                a = sum(1 for c in chosen if c.thickened_at_initial)
                yield AcceptableObject(tuple(chosen), deg4, a)
            else:
                yield from go(stage_idx + 1, 0)
            return
        c = stage[cand_idx]
        yield from go(stage_idx, cand_idx + 1)
        eff = effects[id(c)]
        ok = True
        for v, de, dt, din, dout in eff:
            ends[v] += de
            thick[v] += dt
            tin[v] += din
            tout[v] += dout
            if ends[v] > 4 or tin[v] > 1 or tout[v] > 1:
                ok = False
        if ok:
            chosen.append(c)
            yield from go(stage_idx, cand_idx + 1)
            chosen.pop()
        for v, de, dt, din, dout in eff:
            ends[v] -= de
            thick[v] -= dt
            tin[v] -= din
            tout[v] -= dout

    yield from go(0, 0)


def object_weight(g: LabeledIntersectionDigraph, obj: AcceptableObject) -> int:
    """x_K: product of the underlying-arc weights of the object's arcs."""
    w = 1
    for c in obj.arcs:
        w *= g.weight(c.underlying_key())
    return w


def deg4_signed_sums(g: LabeledIntersectionDigraph) -> list[int]:
    """Entry k: sum of (-1)^a(K) x_K over acceptable K with deg4(K) = k."""
    sums = [0] * (g.n + 1)
    for obj in enumerate_acceptable(g):
        w = object_weight(g, obj)
        sums[obj.deg4] += -w if obj.a & 1 else w
    return sums


def assemble_state_sum(sums: Sequence[int]) -> IntPoly:
    """Partition function from the deg4-graded census: sum of 2^k s_k (λ+2)^(n-k)."""
    n = len(sums) - 1
    total = ZERO
    for k, s in enumerate(sums):
        if s:
            total = total + (s << k) * LAM_PLUS_TWO ** (n - k)
    return total


def j_state_sum(g: LabeledIntersectionDigraph) -> IntPoly:
    """Exact partition function J(G) over all acceptable objects."""
    return assemble_state_sum(deg4_signed_sums(g))


def wj_via_statesum(d: ChordDiagram, chord_cap: int = DEFAULT_STATESUM_CHORDS) -> IntPoly:
    """Weight-system value as J(LID(D)) with unit arc weights."""
    if d.n > chord_cap:
        raise SizeCapError(f"chord count {d.n} exceeds state-sum cap {chord_cap}")
    return j_state_sum(build_lid(d))


def wjj_n_coefficient(
    d: ChordDiagram, k: int, chord_cap: int = DEFAULT_STATESUM_CHORDS
) -> int:
    """Census coefficient 2^k sum of (-1)^a over objects with deg4 = k.

    Equals the coefficient of d^(n-k) of the weight-system value in the
    shifted basis d = λ + 2.
    """
    if not 0 <= k <= d.n:
        raise ValueError(f"census index {k} out of range 0..{d.n}")
    if d.n > chord_cap:
        raise SizeCapError(f"chord count {d.n} exceeds state-sum cap {chord_cap}")
    return deg4_signed_sums(build_lid(d))[k] << k


def census_records(
    d: ChordDiagram, chord_cap: int = DEFAULT_STATESUM_CHORDS
) -> Iterator[dict]:
    """One record per acceptable object, for line-delimited export."""
    if d.n > chord_cap:
        raise SizeCapError(f"chord count {d.n} exceeds state-sum cap {chord_cap}")
    g = build_lid(d)
    for obj in enumerate_acceptable(g):
        w = object_weight(g, obj)
        sign = -1 if obj.a & 1 else 1
        contribution = (sign * w * (1 << obj.deg4)) * LAM_PLUS_TWO ** (g.n - obj.deg4)
        yield {
            "arcs": [c.to_text() for c in obj.arcs],
            "deg4": obj.deg4,
            "a": obj.a,
            "contribution": contribution.to_text(),
        }
