"""Permanent engines and the blown-up matrix pipeline."""

import random

import pytest

from jonesweight.caps import SizeCapError
from jonesweight.diagrams import ChordDiagram, enumerate_diagrams, parse_cdp
from jonesweight.permanent import (
    BLOCK_CONTAINED,
    BLOCK_CROSS_ABOVE,
    BLOCK_CROSS_BELOW,
    BLOCK_DIAGONAL,
    PolyMatrix,
    build_imj,
    imj_block_labels,
    permanent_naive,
    permanent_ryser,
    wj_via_permanent,
    wjj_via_permanent,
)
from jonesweight.polynomials import ONE, ZERO, IntPoly

GOLDEN = parse_cdp("CDP[5,7,6,8,1,3,2,4]")
GOLDEN_WJ = IntPoly((0, -40, -4, 16, 4))
CROSS = ChordDiagram(((1, 3), (2, 4)))


def rand_poly(rng, max_deg=1, bound=3):
    return IntPoly([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg) + 1)])


def rand_matrix(rng, size, max_deg=1, bound=3):
    return PolyMatrix(
        [[rand_poly(rng, max_deg, bound) for _ in range(size)] for _ in range(size)]
    )


class TestPolyMatrix:
    def test_square_required(self):
        with pytest.raises(ValueError):
            PolyMatrix([[ONE, ZERO]])

    def test_int_coercion(self):
        m = PolyMatrix([[0, -1], [1, 0]])
        assert m.entry(0, 1) == IntPoly((-1,))

    def test_transpose(self):
        m = PolyMatrix([[1, 2], [3, 4]])
        assert m.transpose().rows == PolyMatrix([[1, 3], [2, 4]]).rows


class TestBuildImj:
    def test_single_chord_is_diagonal_block(self):
        m = build_imj(parse_cdp("2 1"))
        assert m.rows == PolyMatrix(BLOCK_DIAGONAL).rows

    def test_empty(self):
        assert build_imj(parse_cdp("")).size == 0

    def test_golden_block_layout(self):
        assert imj_block_labels(GOLDEN) == [
            ["A0", "A-", "A-", "A-"],
            ["A+", "A0", "0", "A-"],
            ["A+", "Ac", "A0", "A-"],
            ["A+", "A+", "A+", "A0"],
        ]

    def test_golden_blocks_match_entries(self):
        m = build_imj(GOLDEN)
        assert m.size == 12
        # spot-check the containment block at block position (2, 1)
        block = [[m.entry(6 + r, 3 + c) for c in range(3)] for r in range(3)]
        assert [[e for e in row] for row in block] == [list(r) for r in BLOCK_CONTAINED]
        above = [[m.entry(0 + r, 3 + c) for c in range(3)] for r in range(3)]
        assert above == [list(r) for r in BLOCK_CROSS_ABOVE]
        below = [[m.entry(3 + r, 0 + c) for c in range(3)] for r in range(3)]
        assert below == [list(r) for r in BLOCK_CROSS_BELOW]


class TestPermanentValues:
    def test_diagonal_block_permanent_is_zero(self):
        # By the 6-permutation expansion: (λ+2)^2 from the identity,
        # -(λ+2)^2 from swapping the last two columns, all else zero.
        m = PolyMatrix(BLOCK_DIAGONAL)
        assert permanent_naive(m) == ZERO
        assert permanent_ryser(m) == ZERO

    def test_empty_matrix(self):
        assert permanent_naive(PolyMatrix(())) == ONE
        assert permanent_ryser(PolyMatrix(())) == ONE

    def test_two_by_two_int(self):
        m = PolyMatrix([[0, -1], [1, 0]])
        assert permanent_naive(m) == IntPoly((-1,))
        assert permanent_ryser(m) == IntPoly((-1,))

    def test_diagonal_matrix_is_product(self):
        p1, p2, p3 = IntPoly((1, 1)), IntPoly((0, 2)), IntPoly((-3,))
        m = PolyMatrix([[p1, ZERO, ZERO], [ZERO, p2, ZERO], [ZERO, ZERO, p3]])
        assert permanent_ryser(m) == p1 * p2 * p3

    def test_size_caps(self):
        big = PolyMatrix([[1] * 10 for _ in range(10)])
        with pytest.raises(SizeCapError):
            permanent_naive(big)
        with pytest.raises(SizeCapError):
            permanent_ryser(big, cap=9)


class TestRyserAgainstNaive:
    def test_all_imj_up_to_two_chords(self):
        for n in range(3):
            for d in enumerate_diagrams(n):
                m = build_imj(d)
                assert permanent_ryser(m) == permanent_naive(m)

    def test_random_linear_entries(self):
        rng = random.Random(11)
        for _ in range(500):
            m = rand_matrix(rng, 5, max_deg=1)
            assert permanent_ryser(m) == permanent_naive(m)

    def test_random_higher_degree_entries(self):
        # exercises the general-width product path
        rng = random.Random(12)
        for _ in range(100):
            m = rand_matrix(rng, rng.randint(0, 4), max_deg=4, bound=5)
            assert permanent_ryser(m) == permanent_naive(m)


class TestPermanentInvariance:
    def test_transpose_and_permutations(self):
        rng = random.Random(13)
        for _ in range(200):
            size = rng.randint(1, 5)
            m = rand_matrix(rng, size)
            per = permanent_ryser(m)
            assert permanent_ryser(m.transpose()) == per
            rows = list(range(size))
            cols = list(range(size))
            rng.shuffle(rows)
            rng.shuffle(cols)
            shuffled = PolyMatrix(
                [[m.entry(i, j) for j in cols] for i in rows]
            )
            assert permanent_ryser(shuffled) == per

    def test_row_multilinearity(self):
        rng = random.Random(14)
        for _ in range(200):
            size = rng.randint(1, 4)
            m = rand_matrix(rng, size)
            row = rng.randrange(size)
            c = rng.randint(-5, 5)
            scaled = PolyMatrix(
                [
                    [c * e if i == row else e for j, e in enumerate(r)]
                    for i, r in enumerate(m.rows)
                ]
            )
            assert permanent_ryser(scaled) == c * permanent_ryser(m)


class TestWeightSystemViaPermanent:
    def test_golden(self):
        assert wj_via_permanent(GOLDEN) == GOLDEN_WJ

    def test_single_chord(self):
        assert wj_via_permanent(parse_cdp("2 1")) == ZERO

    def test_cross(self):
        assert wj_via_permanent(CROSS) == IntPoly((0, -2, -1))

    def test_chord_cap(self):
        nine = ChordDiagram.from_pairs((2 * k + 1, 2 * k + 2) for k in range(9))
        with pytest.raises(SizeCapError):
            wj_via_permanent(nine)
        with pytest.raises(SizeCapError):
            wjj_via_permanent(nine)

    def test_leading_coefficient_identity(self, exhaustive_data):
        for n, entries in exhaustive_data.items():
            for e in entries:
                assert e.permanent.coefficient(n) == e.im_permanent

    def test_degree_bounded_by_chords(self, exhaustive_data):
        for n, entries in exhaustive_data.items():
            for e in entries:
                assert e.permanent.degree is None or e.permanent.degree <= n


class TestLeadingPermanent:
    def test_golden(self):
        assert wjj_via_permanent(GOLDEN) == 4

    def test_cross(self):
        assert wjj_via_permanent(CROSS) == -1

    def test_isolated_chord_gives_zero(self):
        for d in enumerate_diagrams(3):
            if d.has_isolated_chord():
                assert wjj_via_permanent(d) == 0
