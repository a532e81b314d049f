from collections import Counter
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tfplkit.dyck import contains, partitions, ssyt_count
from tfplkit.lr import lr_coefficient, lr_tableaux, schur_product_expand

from .strategies import shapes


def schur_monomials(shape, k):
    """s_shape(x_1..x_k) as a Counter of exponent vectors, from all fillings."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = Counter()
    for values in product(range(k), repeat=len(cells)):
        t = dict(zip(cells, values))
        if all(t[r, c] <= t[r, c + 1] for r, c in cells if (r, c + 1) in t) and all(
            t[r, c] < t[r + 1, c] for r, c in cells if (r + 1, c) in t
        ):
            exp = [0] * k
            for v in values:
                exp[v] += 1
            out[tuple(exp)] += 1
    return out


def schur_expand_by_monomials(mu, nu):
    """Expand s_mu s_nu by peeling off dominant monomials."""
    k = sum(mu) + sum(nu)
    a, b = schur_monomials(mu, k), schur_monomials(nu, k)
    poly = Counter()
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            poly[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    result = {}
    while any(poly.values()):
        top = max(e for e, c in poly.items() if c)
        coeff = poly[top]
        lam = tuple(p for p in top if p)
        result[lam] = coeff
        for e, c in schur_monomials(lam, k).items():
            poly[e] -= coeff * c
    return result


class TestExamples:
    def test_empty_factor(self):
        assert lr_coefficient((2, 1), (), (2, 1)) == 1

    def test_two_boxes(self):
        assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
        assert lr_coefficient((2, 1), (1,), (1,)) == 0

    def test_classic_multiplicity(self):
        assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2

    def test_expansions(self):
        assert schur_product_expand((), (2, 1)) == {(2, 1): 1}
        assert schur_product_expand((1,), (1,)) == {(2,): 1, (1, 1): 1}
        with pytest.raises(ValueError):
            schur_product_expand((2,), (2,), max_size=3)

    def test_tableaux_are_lr_fillings(self):
        tabs = list(lr_tableaux((3, 2, 1), (2, 1), (2, 1)))
        assert len(tabs) == 2
        for t in tabs:
            assert sorted(t.values()) == [1, 1, 2]


class TestAgainstOracles:
    @pytest.mark.parametrize(
        "mu, nu",
        [(mu, nu) for a in range(4) for b in range(4 - a + 1) if a + b <= 5 for mu in partitions(a) for nu in partitions(b)],
    )
    def test_matches_monomial_expansion(self, mu, nu):
        assert schur_product_expand(mu, nu) == schur_expand_by_monomials(mu, nu)

    @given(shapes(5), st.integers(0, 5))
    def test_pieri_rule(self, mu, k):
        # s_mu * h_k: add a horizontal strip of k boxes
        for lam in partitions(sum(mu) + k):
            padded = list(mu) + [0] * (len(lam) - len(mu))
            strip = contains(lam, mu) and all(
                lam[i + 1] <= padded[i] for i in range(len(lam) - 1)
            )
            assert lr_coefficient(lam, mu, (k,) if k else ()) == int(strip)

    @given(shapes(5), st.integers(0, 3), st.integers(0, 3))
    def test_two_alphabet_specialization(self, lam, a, b):
        total = 0
        for k in range(sum(lam) + 1):
            for mu in partitions(k):
                for nu in partitions(sum(lam) - k):
                    c = lr_coefficient(lam, mu, nu)
                    if c:
                        total += c * ssyt_count(mu, a) * ssyt_count(nu, b)
        assert total == ssyt_count(lam, a + b)

    @given(shapes(3), shapes(3), st.integers(1, 4))
    def test_one_alphabet_specialization(self, mu, nu, N):
        expansion = schur_product_expand(mu, nu)
        assert sum(c * ssyt_count(lam, N) for lam, c in expansion.items()) == ssyt_count(mu, N) * ssyt_count(nu, N)


class TestStructure:
    @pytest.mark.parametrize("size", range(0, 9))
    def test_symmetry(self, size):
        for lam in partitions(size):
            for k in range(size + 1):
                for mu in partitions(k):
                    for nu in partitions(size - k):
                        assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)

    @given(shapes(6), shapes(4), shapes(4))
    def test_vanishing(self, lam, mu, nu):
        if not (contains(lam, mu) and contains(lam, nu) and sum(mu) + sum(nu) == sum(lam)):
            assert lr_coefficient(lam, mu, nu) == 0

    @given(shapes(6))
    def test_unit(self, lam):
        assert lr_coefficient(lam, (), lam) == 1
