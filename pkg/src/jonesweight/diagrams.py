"""Chord diagrams on an oriented line.

A diagram with n chords is a perfect matching of the points 1..2n.  Chords
are ordered by their left endpoint; all predicates and matrices index chords
0-based in that order.  The text format is the involution list
``CDP[a_1,...,a_2n]`` where a_i is the partner of point i.
"""

from __future__ import annotations

import random
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass


class CDPError(ValueError):
    """Raised when a CDP string does not describe a chord diagram."""


@dataclass(frozen=True)
class ChordDiagram:
    """Perfect matching of {1..2n}, chords sorted by left endpoint.

    Invariants: each chord is a pair (left, right) with left < right, the 2n
    endpoints are exactly {1..2n}, and left endpoints strictly increase.
    """

    chords: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: list[int] = []
        prev_left = 0
        for pair in self.chords:
            if len(pair) != 2:
                raise ValueError(f"chord {pair!r} is not an endpoint pair")
            left, right = pair
            if not (isinstance(left, int) and isinstance(right, int)):
                raise ValueError(f"chord {pair!r} has non-integer endpoints")
            if not left < right:
                raise ValueError(f"chord {pair!r} must satisfy left < right")
            if not left > prev_left:
                raise ValueError("chords must be sorted by strictly increasing left endpoint")
            prev_left = left
            seen.extend(pair)
        if sorted(seen) != list(range(1, 2 * len(self.chords) + 1)):
            raise ValueError("endpoints must be exactly {1..2n}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> ChordDiagram:
        """Build a diagram from unordered endpoint pairs, normalizing order."""
        normalized = sorted((min(a, b), max(a, b)) for a, b in pairs)
        return cls(tuple(normalized))

    @property
    def n(self) -> int:
        return len(self.chords)

    def involution(self) -> tuple[int, ...]:
        """Partner array: entry i-1 is the point matched with point i."""
        out = [0] * (2 * self.n)
        for left, right in self.chords:
            out[left - 1] = right
            out[right - 1] = left
        return tuple(out)

    def to_cdp(self) -> str:
        """Canonical serialization, e.g. "CDP[5,7,6,8,1,3,2,4]"."""
        return "CDP[" + ",".join(str(v) for v in self.involution()) + "]"

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"chord index {i} out of range for {self.n} chords")

    def intersects(self, i: int, j: int) -> bool:
        """True iff chords i and j cross (their endpoints interleave)."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise ValueError("intersects requires distinct chords")
        a, b = self.chords[i]
        c, d = self.chords[j]
        return (a < c < b < d) or (c < a < d < b)

    def contains(self, i: int, j: int) -> bool:
        """True iff chord i lies completely inside chord j."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise ValueError("contains requires distinct chords")
        a, b = self.chords[i]
        c, d = self.chords[j]
        return c < a < b < d

    def has_isolated_chord(self) -> bool:
        """True iff some chord crosses no other chord."""
        return any(
            not any(self.intersects(i, j) for j in range(self.n) if j != i)
            for i in range(self.n)
        )

    def intersection_matrix(self) -> list[list[int]]:
        """Antisymmetric n x n matrix: entry (i, j) = sign(i - j) if i, j cross."""
        n = self.n
        im = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if self.intersects(i, j):
                    im[i][j] = -1
                    im[j][i] = 1
        return im


EMPTY = ChordDiagram(())


def parse_cdp(text: str) -> ChordDiagram:
    """Parse the involution format, with or without the ``CDP[...]`` wrapper.

    The list (a_1,...,a_2n) must be a fixed-point-free involution of 1..2n;
    its 2-cycles are the chords.  An empty list is the empty diagram.
    """
    body = text.strip()
    if body.startswith("CDP[") and body.endswith("]"):
        body = body[4:-1]
    tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
    values: list[int] = []
    for t in tokens:
        try:
            values.append(int(t))
        except ValueError:
            raise CDPError(f"non-integer entry {t!r}") from None
    if len(values) % 2 != 0:
        raise CDPError(f"involution list has odd length {len(values)}")
    size = len(values)
    if sorted(values) != list(range(1, size + 1)):
        raise CDPError(f"entries must be a permutation of 1..{size}")
    pairs = []
    for i, a in enumerate(values, start=1):
        if a == i:
            raise CDPError(f"point {i} is matched with itself")
        if values[a - 1] != i:
            raise CDPError(f"list is not an involution at point {i}")
        if i < a:
            pairs.append((i, a))
    return ChordDiagram.from_pairs(pairs)


def _matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    # Pair the smallest remaining point with each later point, recursively.
    if not points:
        yield []
        return
    a = points[0]
    for idx in range(1, len(points)):
        b = points[idx]
        rest = points[1:idx] + points[idx + 1:]
        for tail in _matchings(rest):
            yield [(a, b)] + tail


def enumerate_diagrams(n: int) -> Iterator[ChordDiagram]:
    """All (2n-1)!! diagrams with n chords, each once, in a deterministic order."""
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    for chords in _matchings(tuple(range(1, 2 * n + 1))):
        # The recursion pairs ascending minima, so chords arrive sorted by left.
        yield ChordDiagram(tuple(chords))


def random_diagram(n: int, rng: random.Random) -> ChordDiagram:
    """Uniform random diagram with n chords."""
    points = list(range(1, 2 * n + 1))
    rng.shuffle(points)
    return ChordDiagram.from_pairs(
        (points[2 * k], points[2 * k + 1]) for k in range(n)
    )


def concatenate(first: ChordDiagram, second: ChordDiagram) -> ChordDiagram:
    """Place two diagrams side by side on the line (no interaction)."""
    shift = 2 * first.n
    shifted = [(left + shift, right + shift) for left, right in second.chords]
    return ChordDiagram(first.chords + tuple(shifted))


@dataclass(frozen=True)
class FourTermQuadruple:
    """Four diagrams differing only in the position of one chord endpoint.

    The free endpoint of the half-attached chord is inserted immediately
    before/after each endpoint of the target chord.  The four-term relation
    asserts (after_left - before_left) + (after_right - before_right) = 0
    for any weight system.
    """

    before_left: ChordDiagram
    after_left: ChordDiagram
    before_right: ChordDiagram
    after_right: ChordDiagram
    base: tuple[tuple[int, int], ...]
    target: tuple[int, int]
    anchor: int

    def members(self) -> tuple[ChordDiagram, ChordDiagram, ChordDiagram, ChordDiagram]:
        return (self.before_left, self.after_left, self.before_right, self.after_right)


def _insert_free_endpoint(
    base: list[tuple[int, int]], anchor: int, gap: int
) -> ChordDiagram:
    # gap = number of old points strictly before the new point
    def relabel(p: int) -> int:
        return p if p <= gap else p + 1

    pairs = [(relabel(a), relabel(b)) for a, b in base]
    pairs.append((relabel(anchor), gap + 1))
    return ChordDiagram.from_pairs(pairs)


def four_term_quadruples(n: int) -> Iterator[FourTermQuadruple]:
    """All four-term relation instances with n chords, duplicate-free.

    Bases are partial matchings on 2n-1 points leaving one point (the anchor
    of the half-attached chord) unmatched; for each full chord of the base,
    the free endpoint is inserted around its two endpoints.
    """
    if n < 2:
        raise ValueError("four-term instances need at least 2 chords")
    total = 2 * n - 1
    seen: set[tuple] = set()
    for anchor in range(1, total + 1):
        rest = tuple(p for p in range(1, total + 1) if p != anchor)
        for base in _matchings(rest):
            for target in base:
                a, b = target
                quad = FourTermQuadruple(
                    before_left=_insert_free_endpoint(base, anchor, a - 1),
                    after_left=_insert_free_endpoint(base, anchor, a),
                    before_right=_insert_free_endpoint(base, anchor, b - 1),
                    after_right=_insert_free_endpoint(base, anchor, b),
                    base=tuple(base),
                    target=target,
                    anchor=anchor,
                )
                key = tuple(d.chords for d in quad.members())
                if key in seen:
                    continue
                seen.add(key)
                yield quad
