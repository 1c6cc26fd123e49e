"""Permanents of polynomial matrices and the blown-up intersection matrix.

The weight-system value of a diagram with n chords is the permanent of a
3n x 3n matrix assembled from fixed 3 x 3 blocks over Z[λ]; the leading
coefficient alone is the permanent of the plain n x n intersection matrix.

Two permanent engines are provided: Ryser's inclusion-exclusion with
Gray-code row-sum updates (production), and the factorial expansion over
all permutations (oracle).  Both work in the polynomial ring directly.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import permutations

from .caps import (
    DEFAULT_NAIVE_CAP,
    DEFAULT_PERMANENT_CHORDS,
    DEFAULT_RYSER_CAP,
    SizeCapError,
)
from .diagrams import ChordDiagram
from .polynomials import ONE, ZERO, IntPoly

_L = IntPoly((0, 1))
_L2 = IntPoly((2, 1))

# 3x3 blocks of the blown-up matrix: diagonal, crossing below/above the
# diagonal, and containment.
BLOCK_DIAGONAL = (
    (_L2, ZERO, ZERO),
    (ZERO, _L2, ONE),
    (_L, -_L2, ONE),
)
BLOCK_CROSS_BELOW = (  # chords cross, row chord comes later (i > j)
    (ONE, ONE, ZERO),
    (ZERO, ZERO, ZERO),
    (ZERO, ZERO, ZERO),
)
BLOCK_CROSS_ABOVE = (  # chords cross, row chord comes first (i < j)
    (ZERO, ZERO, ZERO),
    (-ONE, -ONE, ZERO),
    (ZERO, ZERO, ZERO),
)
BLOCK_CONTAINED = (  # row chord completely inside column chord
    (ONE, ONE, ZERO),
    (-ONE, -ONE, ZERO),
    (ZERO, ZERO, ZERO),
)
_BLOCK_ZERO = ((ZERO,) * 3,) * 3

BLOCK_LABELS = {
    id(BLOCK_DIAGONAL): "A0",
    id(BLOCK_CROSS_BELOW): "A+",
    id(BLOCK_CROSS_ABOVE): "A-",
    id(BLOCK_CONTAINED): "Ac",
    id(_BLOCK_ZERO): "0",
}


class PolyMatrix:
    """Square matrix with IntPoly entries (plain ints are coerced)."""

    __slots__ = ("rows",)

    rows: tuple[tuple[IntPoly, ...], ...]

    def __init__(self, rows: Iterable[Iterable[IntPoly | int]]) -> None:
        built = []
        for row in rows:
            entries = []
            for e in row:
                p = IntPoly._coerce(e)
                if p is None:
                    raise TypeError(f"matrix entry {e!r} is not a polynomial or int")
                entries.append(p)
            built.append(tuple(entries))
        object.__setattr__(self, "rows", tuple(built))
        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise ValueError("matrix must be square")

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> IntPoly:
        return self.rows[i][j]

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(zip(*self.rows)) if self.size else PolyMatrix(())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"PolyMatrix(size={self.size})"

    def to_grid(self, var: str = "λ") -> str:
        """Row-major text grid, tab-separated canonical entry strings."""
        return "\n".join("\t".join(e.to_text(var) for e in row) for row in self.rows)


def _select_block(d: ChordDiagram, i: int, j: int):
    if i == j:
        return BLOCK_DIAGONAL
    if d.intersects(i, j):
        return BLOCK_CROSS_BELOW if i > j else BLOCK_CROSS_ABOVE
    if d.contains(i, j):
        return BLOCK_CONTAINED
    return _BLOCK_ZERO


def build_imj(d: ChordDiagram) -> PolyMatrix:
    """Blown-up 3n x 3n block matrix whose permanent is the weight-system value."""
    n = d.n
    rows: list[list[IntPoly]] = [[] for _ in range(3 * n)]
    for i in range(n):
        for j in range(n):
            block = _select_block(d, i, j)
            for r in range(3):
                rows[3 * i + r].extend(block[r])
    return PolyMatrix(rows)


def imj_block_labels(d: ChordDiagram) -> list[list[str]]:
    """n x n grid of block labels (A0, A+, A-, Ac, 0) for the blown-up matrix."""
    return [
        [BLOCK_LABELS[id(_select_block(d, i, j))] for j in range(d.n)]
        for i in range(d.n)
    ]


def permanent_naive(matrix: PolyMatrix, cap: int = DEFAULT_NAIVE_CAP) -> IntPoly:
    """Permanent by the factorial expansion; oracle only, guarded by `cap`."""
    m = matrix.size
    if m > cap:
        raise SizeCapError(f"matrix size {m} exceeds naive-permanent cap {cap}")
    rows = matrix.rows
    total = ZERO
    for perm in permutations(range(m)):
        term = ONE
        for i, j in enumerate(perm):
            e = rows[i][j]
            if not e:
                term = None
                break
            term = term * e
        if term is not None:
            total = total + term
    return total


def permanent_ryser(matrix: PolyMatrix, cap: int = DEFAULT_RYSER_CAP) -> IntPoly:
    """Permanent by Ryser's formula with Gray-code incremental row sums.

    Per(M) = (-1)^m sum over column subsets S of (-1)^|S| of the product over
    rows of the row sum restricted to S.  Subsets are visited in Gray-code
    order so each step changes one column; an all-zero row sum short-circuits
    the product.  Exact over Z[λ].
    """
    m = matrix.size
    if m > cap:
        raise SizeCapError(f"matrix size {m} exceeds Ryser cap {cap}")
    if m == 0:
        return ONE
    width = max((len(e.coeffs) for row in matrix.rows for e in row), default=0)
    if width == 0:
        return ZERO
    if width <= 2:
        return _ryser_linear(matrix, m)
    return _ryser_general(matrix, m, width)


def _ryser_linear(matrix: PolyMatrix, m: int) -> IntPoly:
    # Entries of degree <= 1: row sums are coefficient pairs held in two
    # flat arrays, and the running product is expanded in place.
    cols: list[list[tuple[int, int, int]]] = []
    for j in range(m):
        nz = []
        for i in range(m):
            cs = matrix.rows[i][j].coeffs
            if cs:
                a = cs[0]
                b = cs[1] if len(cs) > 1 else 0
                nz.append((i, a, b))
        cols.append(nz)

    sa = [0] * m
    sb = [0] * m
    row_is_zero = [True] * m
    zero_rows = m
    acc = [0] * (m + 1)
    mask = 0
    for k in range(1, 1 << m):
        low = k & -k
        j = low.bit_length() - 1
        mask ^= low
        if mask & low:
            for i, a, b in cols[j]:
                sa[i] += a
                sb[i] += b
                z = not (sa[i] or sb[i])
                if z != row_is_zero[i]:
                    row_is_zero[i] = z
                    zero_rows += 1 if z else -1
        else:
            for i, a, b in cols[j]:
                sa[i] -= a
                sb[i] -= b
                z = not (sa[i] or sb[i])
                if z != row_is_zero[i]:
                    row_is_zero[i] = z
                    zero_rows += 1 if z else -1
        if zero_rows:
            continue
        prod = [0] * (m + 1)
        prod[0] = 1
        plen = 1
        for i in range(m):
            a = sa[i]
            b = sb[i]
            if b:
                prod[plen] = prod[plen - 1] * b
                for t in range(plen - 1, 0, -1):
                    prod[t] = prod[t] * a + prod[t - 1] * b
                prod[0] *= a
                plen += 1
            else:
                for t in range(plen):
                    prod[t] *= a
        if (m - mask.bit_count()) & 1:
            for t in range(plen):
                acc[t] -= prod[t]
        else:
            for t in range(plen):
                acc[t] += prod[t]
    return IntPoly(acc)


def _ryser_general(matrix: PolyMatrix, m: int, width: int) -> IntPoly:
    cols: list[list[tuple[int, tuple[int, ...]]]] = []
    for j in range(m):
        nz = []
        for i in range(m):
            cs = matrix.rows[i][j].coeffs
            if cs:
                nz.append((i, cs + (0,) * (width - len(cs))))
        cols.append(nz)

    sums = [[0] * width for _ in range(m)]
    row_is_zero = [True] * m
    zero_rows = m
    acc = [0] * (m * (width - 1) + 1)
    mask = 0
    for k in range(1, 1 << m):
        low = k & -k
        j = low.bit_length() - 1
        mask ^= low
        sign = 1 if mask & low else -1
        for i, entry in cols[j]:
            s = sums[i]
            for t in range(width):
                s[t] += sign * entry[t]
            z = not any(s)
            if z != row_is_zero[i]:
                row_is_zero[i] = z
                zero_rows += 1 if z else -1
        if zero_rows:
            continue
        prod = [1]
        for i in range(m):
            s = sums[i]
            nxt = [0] * (len(prod) + width - 1)
            for t, pt in enumerate(prod):
                if pt:
                    for u in range(width):
                        if s[u]:
                            nxt[t + u] += pt * s[u]
            prod = nxt
        if (m - mask.bit_count()) & 1:
            for t, pt in enumerate(prod):
                acc[t] -= pt
        else:
            for t, pt in enumerate(prod):
                acc[t] += pt
    return IntPoly(acc)


def wj_via_permanent(
    d: ChordDiagram,
    chord_cap: int = DEFAULT_PERMANENT_CHORDS,
    ryser_cap: int | None = None,
) -> IntPoly:
    """Weight-system value as the permanent of the blown-up matrix."""
    if d.n > chord_cap:
        raise SizeCapError(f"chord count {d.n} exceeds permanent-method cap {chord_cap}")
    cap = ryser_cap if ryser_cap is not None else max(DEFAULT_RYSER_CAP, 3 * chord_cap)
    return permanent_ryser(build_imj(d), cap=cap)


def wjj_via_permanent(d: ChordDiagram, chord_cap: int = DEFAULT_PERMANENT_CHORDS) -> int:
    """Leading-order value: permanent of the integer intersection matrix."""
    if d.n > chord_cap:
        raise SizeCapError(f"chord count {d.n} exceeds permanent-method cap {chord_cap}")
    per = permanent_ryser(PolyMatrix(d.intersection_matrix()), cap=max(DEFAULT_RYSER_CAP, d.n))
    return per.coefficient(0)


def int_matrix_grid(rows: Sequence[Sequence[int]]) -> str:
    """Tab-separated text grid for an integer matrix."""
    return "\n".join("\t".join(str(v) for v in row) for row in rows)
