"""Definition-level computation: sum over chord colorings of local weights.

Each chord is colored with one of five operators {I, B+0, B+1, B-0, B-1}.
A coloring induces integer labels on the 2n+1 segments of the base line,
read left to right starting from 0: a B+1 chord raises the label at its left
endpoint and lowers it at its right endpoint, a B-1 chord does the reverse,
and the other colors leave labels unchanged.  The weight of a chord depends
on the labels k, k' of the segments ending at its two endpoints:

    I    ->  λ + 2
    B+ε  ->  -(-1)^ε (1 + k)(λ + 1 - k')
    B-ε  ->  -(-1)^ε (1 + k')(λ + 1 - k)

and the weight-system value is the sum over all 5^n colorings of the product
of chord weights.  Cost is 5^n; practical to a dozen chords or so.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import product

from .caps import DEFAULT_RECURSION_CHORDS, SizeCapError
from .diagrams import ChordDiagram
from .polynomials import IntPoly

COLORS = ("I", "B+0", "B+1", "B-0", "B-1")
_CODE = {name: idx for idx, name in enumerate(COLORS)}
_I, _BP0, _BP1, _BM0, _BM1 = range(5)

# Label deltas at a left/right endpoint, indexed by color code.
_LEFT_DELTA = (0, 0, 1, 0, -1)
_RIGHT_DELTA = (0, 0, -1, 0, 1)


def _endpoint_owners(d: ChordDiagram) -> list[tuple[int, bool]]:
    # owners[p-1] = (chord index, is_left) for point p
    owners: list[tuple[int, bool]] = [(-1, False)] * (2 * d.n)
    for v, (left, right) in enumerate(d.chords):
        owners[left - 1] = (v, True)
        owners[right - 1] = (v, False)
    return owners


def _codes(d: ChordDiagram, coloring: Sequence[str]) -> list[int]:
    if len(coloring) != d.n:
        raise ValueError(f"coloring must assign all {d.n} chords")
    try:
        return [_CODE[c] for c in coloring]
    except KeyError as exc:
        raise ValueError(f"unknown chord color {exc.args[0]!r}") from None


def segment_labels(d: ChordDiagram, coloring: Sequence[str]) -> tuple[int, ...]:
    """Labels of the 2n+1 segments, left to right; first and last are 0."""
    codes = _codes(d, coloring)
    owners = _endpoint_owners(d)
    labels = [0]
    cur = 0
    for v, is_left in owners:
        cur += _LEFT_DELTA[codes[v]] if is_left else _RIGHT_DELTA[codes[v]]
        labels.append(cur)
    return tuple(labels)


def _endpoint_labels(
    codes: Sequence[int], owners: Sequence[tuple[int, bool]], n: int
) -> tuple[list[int], list[int]]:
    # k and k' per chord: the label of the segment ending at each endpoint,
    # i.e. the running label just before the endpoint is processed.
    kl = [0] * n
    kr = [0] * n
    cur = 0
    for v, is_left in owners:
        if is_left:
            kl[v] = cur
            cur += _LEFT_DELTA[codes[v]]
        else:
            kr[v] = cur
            cur += _RIGHT_DELTA[codes[v]]
    return kl, kr


def _weight(code: int, k: int, kp: int) -> IntPoly:
    if code == _I:
        return IntPoly((2, 1))
    if code == _BP0:
        return IntPoly((-(1 + k) * (1 - kp), -(1 + k)))
    if code == _BP1:
        return IntPoly(((1 + k) * (1 - kp), (1 + k)))
    if code == _BM0:
        return IntPoly((-(1 + kp) * (1 - k), -(1 + kp)))
    return IntPoly(((1 + kp) * (1 - k), (1 + kp)))


def chord_weights(d: ChordDiagram, coloring: Sequence[str]) -> list[IntPoly]:
    """Per-chord local weights under the given coloring."""
    codes = _codes(d, coloring)
    owners = _endpoint_owners(d)
    kl, kr = _endpoint_labels(codes, owners, d.n)
    return [_weight(codes[v], kl[v], kr[v]) for v in range(d.n)]


def coloring_weight(d: ChordDiagram, coloring: Sequence[str]) -> IntPoly:
    """Product of the chord weights of one coloring."""
    total = IntPoly((1,))
    for w in chord_weights(d, coloring):
        if not w:
            return w
        total = total * w
    return total


def wj_via_recursion(d: ChordDiagram, chord_cap: int = DEFAULT_RECURSION_CHORDS) -> IntPoly:
    """Weight-system value as the exact sum over all 5^n colorings.

    Colorings are visited as a base-5 odometer over chords in left-endpoint
    order.  Each coloring contributes an integer scalar times a product of
    monic linear factors, accumulated coefficient-wise.
    """
    n = d.n
    if n > chord_cap:
        raise SizeCapError(f"chord count {n} exceeds recursion-method cap {chord_cap}")
    owners = _endpoint_owners(d)
    acc = [0] * (n + 1)
    for codes in product(range(5), repeat=n):
        kl, kr = _endpoint_labels(codes, owners, n)
        scalar = 1
        roots: list[int] = []  # constant terms of the monic linear factors
        for v in range(n):
            code = codes[v]
            if code == _I:
                roots.append(2)
            elif code == _BP0 or code == _BP1:
                scalar *= (1 + kl[v]) if code == _BP1 else -(1 + kl[v])
                roots.append(1 - kr[v])
            else:
                scalar *= (1 + kr[v]) if code == _BM1 else -(1 + kr[v])
                roots.append(1 - kl[v])
            if scalar == 0:
                break
        if scalar == 0:
            continue
        prod = [0] * (n + 1)
        prod[0] = 1
        plen = 1
        for t in roots:
            prod[plen] = prod[plen - 1]
            for u in range(plen - 1, 0, -1):
                prod[u] = prod[u] * t + prod[u - 1]
            prod[0] *= t
            plen += 1
        for u in range(plen):
            acc[u] += scalar * prod[u]
    return IntPoly(acc)


def coloring_trace(d: ChordDiagram) -> Iterator[dict]:
    """Per-coloring records (coloring, labels, weights, product) for debugging."""
    for names in product(COLORS, repeat=d.n):
        weights = chord_weights(d, names)
        total = IntPoly((1,))
        for w in weights:
            total = total * w
        yield {
            "coloring": list(names),
            "labels": list(segment_labels(d, names)),
            "weights": [w.to_text() for w in weights],
            "product": total.to_text(),
        }
