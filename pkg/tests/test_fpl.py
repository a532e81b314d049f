from fractions import Fraction
from itertools import combinations
from math import factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tfplkit.dyck import enumerate_dyck, linkpattern_to_word, word_to_linkpattern
from tfplkit.fpl import (
    EnumerationBoundError,
    GridFPL,
    a_pi,
    a_pi_m,
    enumerate_fpl,
    external_edges,
    fpl_census,
    link_pattern,
    pi_union_m,
)
from tfplkit.identities import interpolate_api, leading_term_matches
from tfplkit.polynomial import Polynomial, interpolate


def asm_count(n):
    return prod(factorial(3 * j + 1) for j in range(n)) // prod(factorial(n + j) for j in range(n))


def brute_census(n):
    """Try every subset of inner grid edges; keep those with all degrees 2."""
    inner = [((x, y), (x + 1, y)) for x in range(n - 1) for y in range(n)]
    inner += [((x, y), (x, y + 1)) for x in range(n) for y in range(n - 1)]
    ext = external_edges(n)
    base = {}
    for v, _ in ext:
        base[v] = base.get(v, 0) + 1
    counts = {}
    for r in range(len(inner) + 1):
        for subset in combinations(inner, r):
            deg = dict(base)
            for p, q in subset:
                deg[p] = deg.get(p, 0) + 1
                deg[q] = deg.get(q, 0) + 1
            if any(deg.get((x, y), 0) != 2 for x in range(n) for y in range(n)):
                continue
            # walk from each outer point to the outer point at the other end
            adj = {}
            for p, q in list(subset) + ext:
                adj.setdefault(p, []).append(q)
                adj.setdefault(q, []).append(p)
            label = {outer: k + 1 for k, (_, outer) in enumerate(ext)}
            pairs = set()
            for start in label:
                prev, cur = None, start
                while cur == start or cur not in label:
                    prev, cur = cur, next(w for w in adj[cur] if w != prev)
                pairs.add(tuple(sorted((label[start], label[cur]))))
            word = linkpattern_to_word(pairs, n)
            counts[word] = counts.get(word, 0) + 1
    return counts


def rotate(word):
    """Shift every label of the link pattern by one, modulo 2n."""
    size = len(word)
    pairs = [tuple(sorted(((i % size) + 1, (j % size) + 1))) for i, j in word_to_linkpattern(word)]
    return linkpattern_to_word(pairs, size // 2)


class TestEnumeration:
    @pytest.mark.parametrize("n, total", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429)])
    def test_totals_match_asm_numbers(self, n, total):
        assert len(enumerate_fpl(n)) == total == asm_count(n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_census_matches_subset_brute_force(self, n):
        expected = brute_census(n)
        assert {w: c for w, c in fpl_census(n).items() if c} == expected

    def test_n2_numbering_by_hand(self):
        # 1 on the left, 2 on the bottom, 3 on the right, 4 on the top
        assert [e[1] for e in external_edges(2)] == [(-1, 1), (0, -1), (2, 0), (1, 2)]
        patterns = {}
        for f in enumerate_fpl(2):
            vertical = ((0, 0), (0, 1)) in f.edges
            patterns["vertical" if vertical else "horizontal"] = link_pattern(f)
        assert patterns == {"vertical": "0101", "horizontal": "0011"}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_all_valid_and_patterns_sum(self, n):
        fpls = enumerate_fpl(n)
        if n <= 4:
            assert all(f.is_valid() for f in fpls)
        assert sum(fpl_census(n).values()) == len(fpls)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_rotation_invariance(self, n):
        census = fpl_census(n)
        for pi, count in census.items():
            assert census[rotate(pi)] == count

    def test_bound_refusal(self):
        with pytest.raises(EnumerationBoundError):
            enumerate_fpl(8)
        with pytest.raises(EnumerationBoundError):
            enumerate_fpl(4, max_n=3)

    def test_json_round_trip(self):
        for f in enumerate_fpl(3):
            assert GridFPL.from_json(f.to_json()) == f


class TestCounts:
    @pytest.mark.parametrize("pi, count", [("01", 1), ("0011", 1), ("0101", 1)])
    def test_a_pi(self, pi, count):
        assert a_pi(pi) == count

    def test_n3_sums_to_seven(self):
        assert sum(a_pi(pi) for pi in enumerate_dyck(3)) == 7

    @pytest.mark.parametrize("pi, m, word", [("01", 0, "01"), ("01", 2, "000111"), ("0011", 1, "000111")])
    def test_pi_union_m(self, pi, m, word):
        assert pi_union_m(pi, m) == word

    @pytest.mark.parametrize("pi, m, count", [("01", 0, 1), ("01", 1, 1), ("01", 2, 1)])
    def test_a_pi_m(self, pi, m, count):
        assert a_pi_m(pi, m) == count == a_pi(pi_union_m(pi, m))

    def test_interpolation_examples(self):
        assert interpolate_api("01", [0, 1, 2, 3]) == Polynomial.constant(1)
        line = interpolate_api("0101", [0, 1, 2])
        assert line.degree == 1 and line.leading == 1

    @pytest.mark.parametrize("pi", ["0011", "0101", "000111", "001011", "010011", "001101"])
    def test_leading_coefficient(self, pi):
        points = range(0, 6 - len(pi) // 2)
        assert leading_term_matches(interpolate_api(pi, points), pi)

    def test_interpolation_needs_points(self):
        with pytest.raises(ValueError):
            interpolate_api("010101", [0, 1])


class TestPolynomial:
    @given(st.lists(st.integers(-5, 5), max_size=5), st.lists(st.integers(-5, 5), max_size=5), st.integers(-6, 6))
    def test_ring_operations_evaluate_pointwise(self, a, b, x):
        p, q = Polynomial(a), Polynomial(b)
        assert (p + q)(x) == p(x) + q(x)
        assert (p - q)(x) == p(x) - q(x)
        assert (p * q)(x) == p(x) * q(x)

    @given(st.lists(st.fractions(max_denominator=7), min_size=1, max_size=5))
    def test_interpolation_recovers_polynomial(self, coeffs):
        p = Polynomial(coeffs)
        assert interpolate([(x, p(x)) for x in range(len(coeffs))]) == p

    def test_json_round_trip(self):
        p = Polynomial([Fraction(1, 2), 0, Fraction(-3, 4)])
        assert p.to_json() == ["1/2", "0/1", "-3/4"]
        assert Polynomial.from_json(p.to_json()) == p

    def test_zero_polynomial(self):
        assert Polynomial([0, 0]).degree == -1
        assert Polynomial().leading == 0

    def test_render_variable(self):
        assert Polynomial([2, 0, Fraction(1, 3)]).render("m") == "(1/3)*m^2 + 2"
        assert str(Polynomial([0, 1])) == "N"
