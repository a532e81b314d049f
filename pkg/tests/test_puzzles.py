import pytest
from hypothesis import given

from tfplkit.dyck import degree, enumerate_dyck, leq, word_to_diagram
from tfplkit.fpl import EnumerationBoundError
from tfplkit.lr import lr_coefficient
from tfplkit.puzzles import (
    DOWN_TRIANGLES,
    UP_TRIANGLES,
    Puzzle,
    enumerate_puzzles,
    has_boundary,
    lattice,
    puzzle_count,
    validate_puzzle,
)

from .strategies import word_triples

SAMPLE = ("00011101", "00011011", "00110101")


def triples(n):
    words = enumerate_dyck(n)
    return [(s, t, p) for s in words for t in words for p in words]


class TestLattice:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_sizes(self, n):
        lat = lattice(n)
        side = 2 * n
        assert lat.triangle_count == side * side
        assert len(lat.up) == side * (side + 1) // 2
        assert lat.size == 3 * side * (side + 1) // 2

    @pytest.mark.parametrize("n", range(1, 4))
    def test_shared_edges(self, n):
        # every interior edge belongs to exactly two unit triangles, boundary edges to one
        lat = lattice(n)
        uses = [0] * lat.size
        for _, idx in lat.up + lat.down:
            for i in idx:
                uses[i] += 1
        assert uses.count(1) == 3 * 2 * n
        assert set(uses) == {1, 2}

    def test_allowed_pieces(self):
        assert len(UP_TRIANGLES) == len(DOWN_TRIANGLES) == 5
        # (left, base, right) = (1, 0, 2) reads 0, 2, 1 counterclockwise
        assert (1, 0, 2) not in UP_TRIANGLES
        assert (0, 0, 0) in UP_TRIANGLES and (1, 1, 1) in DOWN_TRIANGLES


class TestValidation:
    def test_all_zero_labeling_passes_triangle_check(self):
        lat = lattice(1)
        assert validate_puzzle(Puzzle(1, (0,) * lat.size))

    def test_clockwise_piece_rejected(self):
        lat = lattice(1)
        (p,) = enumerate_puzzles("01", "01", "01")
        labels = list(p.labels)
        (_, (a, b, c)) = lat.up[0]
        labels[a], labels[b], labels[c] = 1, 0, 2
        assert not validate_puzzle(Puzzle(1, tuple(labels)))

    def test_incomplete_rejected(self):
        with pytest.raises(ValueError):
            validate_puzzle(Puzzle(1, (0, 1)))

    def test_n1_puzzle_by_hand(self):
        (p,) = enumerate_puzzles("01", "01", "01")
        assert (p.sigma, p.tau, p.pi) == ("01", "01", "01")
        # the bottom-left unit triangle has sides 0 on the left and bottom
        assert p.S(0, 0) == 0 and p.H(0, 0) == 0 and p.S(0, 1) == 0
        assert p.H(0, 1) == 1 and p.S(1, 0) == 1
        assert validate_puzzle(p)

    def test_sample_puzzle(self):
        puzzles = enumerate_puzzles(*SAMPLE)
        assert len(puzzles) == 1
        assert validate_puzzle(puzzles[0]) and has_boundary(puzzles[0], *SAMPLE)


class TestCounts:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_count_equals_lr(self, n):
        for s, t, p in triples(n):
            c = lr_coefficient(word_to_diagram(p), word_to_diagram(s), word_to_diagram(t))
            assert puzzle_count(s, t, p) == c, (s, t, p)

    @pytest.mark.parametrize("n", range(1, 4))
    def test_enumeration_agrees_with_count(self, n):
        for s, t, p in triples(n):
            puzzles = enumerate_puzzles(s, t, p)
            assert len(puzzles) == puzzle_count(s, t, p)
            assert len(set(puzzles)) == len(puzzles)
            assert all(validate_puzzle(q) and has_boundary(q, s, t, p) for q in puzzles)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_unit_boundary(self, n):
        e = "0" * n + "1" * n
        for p in enumerate_dyck(n):
            assert puzzle_count(e, p, p) == 1
        assert puzzle_count(e, e, e) == 1

    @given(word_triples(1, 4))
    def test_vanishing(self, triple):
        s, t, p = triple
        if not leq(s, p) or not leq(t, p) or degree(s) + degree(t) != degree(p):
            assert puzzle_count(s, t, p) == 0

    @given(word_triples(1, 4))
    def test_count_symmetry(self, triple):
        s, t, p = triple
        assert puzzle_count(s, t, p) == puzzle_count(t, s, p)

    def test_bound_refusal(self):
        with pytest.raises(EnumerationBoundError):
            puzzle_count("000111", "000111", "000111", max_n=2)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            puzzle_count("01", "0011", "0011")

    @given(word_triples(1, 3))
    def test_json_round_trip(self, triple):
        for q in enumerate_puzzles(*triple):
            assert Puzzle.from_json(q.to_json()) == q
