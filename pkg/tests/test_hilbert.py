"""Tests for exact Hilbert-function values and their closed forms."""

import pytest
from fractions import Fraction
from math import comb

from fiberforge.candidate import generators_lambda
from fiberforge.errors import NotHomogeneous, OutOfTable
from fiberforge.hilbert import (
    hf_closed,
    hf_exact,
    initial_monomials,
    monomials_of_degree,
)
from fiberforge.rings import Polynomial, omega_order, ring_W, wvar

W4 = ring_W(4)


def _lambda_gens(d):
    return [rec.value for rec in generators_lambda(d, "all")]


class TestMonomialEnumeration:
    def test_count(self):
        # dim of the degree-k slice of a polynomial ring in n variables
        n = W4.nvars
        for k in (0, 1, 2, 3):
            assert len(monomials_of_degree(W4, k)) == comb(k + n - 1, k)

    def test_descending(self):
        order = omega_order(W4)
        ms = monomials_of_degree(W4, 2, order)
        keys = [order.key(m.exps) for m in ms]
        assert keys == sorted(keys, reverse=True)


class TestExactValues:
    def test_degree2_matches_closed_form(self):
        for d in (4, 5, 6):
            assert hf_exact(_lambda_gens(d), 2) == hf_closed("IX2", d)

    def test_degree3_matches_closed_form(self):
        for d in (4, 5):
            assert hf_exact(_lambda_gens(d), 3) == hf_closed("IX3", d)

    def test_degree_below_generators(self):
        assert hf_exact(_lambda_gens(4), 1) == 0
        assert hf_exact(_lambda_gens(4), 0) == 0

    def test_inhomogeneous_rejected(self):
        f = Polynomial(
            W4,
            {
                W4.monomial_of(wvar(1, 2)).exps: Fraction(1),
                W4.monomial_of(wvar(1, 2), wvar(1, 2)).exps: Fraction(1),
            },
        )
        with pytest.raises(NotHomogeneous):
            hf_exact([f], 2)

    def test_empty_gens(self):
        assert hf_exact([W4.zero()], 2) == 0


class TestClosedForms:
    def test_known_values(self):
        assert [hf_closed("IX2", d) for d in (4, 5, 6, 7)] == [10, 35, 84, 168]
        assert [hf_closed("IX3", d) for d in (4, 5, 6)] == [81, 350, 1078]

    def test_fiber_complement(self):
        # codim of I(X)_2 inside the quadrics of the ambient ring
        for d in (4, 5, 6):
            assert hf_closed("W", d, 2) - hf_closed("IX2", d) == hf_closed(
                "fiber", d, 2
            )

    def test_out_of_table(self):
        with pytest.raises(OutOfTable):
            hf_closed("IX2", 4, 3)
        with pytest.raises(OutOfTable):
            hf_closed("fiber", 4, 1)
        with pytest.raises(OutOfTable):
            hf_closed("nope", 4, 2)


class TestInitialIdeal:
    def test_initial_count_equals_hf(self):
        gens = _lambda_gens(4)
        for k in (2, 3):
            assert len(initial_monomials(gens, k)) == hf_exact(gens, k)

    def test_degree_one_empty(self):
        assert initial_monomials(_lambda_gens(4), 1) == set()

    def test_initial_degree2_is_census(self):
        from fiberforge.census import census_degree2

        got = {m.exps for m in initial_monomials(_lambda_gens(4), 2)}
        want = {m.exps for m in census_degree2(4)}
        assert got == want
