from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monomial_lab.core import family_mnt, make_ideal, mu, power, squarefree_veronese
from monomial_lab.errors import DomainError
from monomial_lab.freiman import (
    analytic_spread_equigen,
    freiman_family_check,
    freiman_test,
    integer_rank,
)

from conftest import fraction_rank

matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=5)
)


@given(matrices)
def test_rank_matches_fraction_elimination(rows):
    assert integer_rank(rows) == fraction_rank(rows)


def test_rank_examples():
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([]) == 0
    assert integer_rank([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == 3


class TestSpread:
    def test_family(self):
        assert analytic_spread_equigen(family_mnt((4, 2))) == 4

    def test_principal(self):
        assert analytic_spread_equigen(make_ideal(3, [(1, 2, 0)])) == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_maximal_ideal(self, n):
        assert analytic_spread_equigen(squarefree_veronese(n, 1)) == n

    @pytest.mark.parametrize("n", range(2, 9))
    def test_family_full_rank(self, n):
        assert analytic_spread_equigen(family_mnt((n, 3))) == n

    def test_rejects_mixed_degrees(self):
        with pytest.raises(DomainError):
            analytic_spread_equigen(make_ideal(2, [(2, 0), (0, 3)]))
        with pytest.raises(DomainError):
            freiman_test(make_ideal(2, []))


class TestFreiman:
    def test_m53(self):
        r = freiman_test(family_mnt((5, 3)))
        assert r.is_freiman and r.mu_I2 == 15 == comb(6, 2)

    def test_maximal_ideal(self):
        r = freiman_test(squarefree_veronese(4, 1))
        assert (r.mu_I, r.mu_I2, r.spread, r.bound) == (4, 10, 4, 10)
        assert r.is_freiman

    def test_non_freiman(self):
        r = freiman_test(make_ideal(2, [(4, 0), (3, 1), (0, 4)]))
        assert (r.mu_I2, r.spread, r.bound) == (6, 2, 5)
        assert not r.is_freiman
        assert r.bound_holds

    def test_family_examples(self):
        assert freiman_family_check(3, 2)
        assert freiman_test(family_mnt((3, 2))).mu_I2 == 6
        assert freiman_family_check(7, 1)
        assert freiman_test(family_mnt((7, 1))).mu_I2 == 28
        r = freiman_test(family_mnt((2, 5)))
        assert (r.mu_I, r.mu_I2, r.spread, r.bound) == (2, 3, 2, 3)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_mu_square_independent_of_t(self, n):
        values = {mu(power(family_mnt((n, t)), 2)) for t in (1, 2, 5)}
        assert values == {comb(n + 1, 2)}

    @given(
        st.integers(1, 3).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.integers(1, 3).flatmap(
                    lambda d: st.lists(
                        st.lists(st.integers(0, d), min_size=n, max_size=n).filter(lambda v: sum(v) == d),
                        min_size=1,
                        max_size=5,
                    )
                ),
            )
        )
    )
    def test_bound_reported(self, data):
        # Soft property: a violation would be a finding, not a library error.
        n, gens = data
        I = make_ideal(n, gens)
        r = freiman_test(I)
        assert r.is_freiman == (r.mu_I2 == r.bound)
        assert r.bound_holds
