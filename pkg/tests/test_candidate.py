"""Tests for the candidate-ideal generators and the named catalogue."""

import pytest
from fractions import Fraction

from fiberforge.candidate import (
    catalogue_entries,
    check_criterion_c,
    errata_report,
    generators_lambda,
    minor_ideal_U,
    named_generator,
    epsilon,
    phi_W,
    quadric_image,
)
from fiberforge.errors import BadParams, DimensionTooSmall
from fiberforge.groebner import buchberger
from fiberforge.rings import (
    Polynomial,
    omega_order,
    ring_U,
    ring_W,
    wvar,
)

from fiberforge.cli import DOCUMENTED_ERRATA_KEYS

W4 = ring_W(4)


def _wpoly(d, *terms):
    ring = ring_W(d)
    f = ring.zero()
    for coeff, pairs in terms:
        mono = ring.monomial_of(*(wvar(i, j) for i, j in pairs))
        f = f + Polynomial(ring, {mono.exps: Fraction(coeff)})
    return f


class TestGeneratorCounts:
    def test_counts_d4(self):
        assert len(generators_lambda(4, 0)) == 3
        assert len(generators_lambda(4, 1)) == 6
        assert len(generators_lambda(4, 2)) == 3
        assert len(generators_lambda(4, "all")) == 12

    def test_dimension_too_small(self):
        with pytest.raises(DimensionTooSmall):
            generators_lambda(3)

    def test_bad_part(self):
        with pytest.raises(BadParams):
            generators_lambda(4, part=5)

    def test_counts_grow_with_d(self):
        assert len(generators_lambda(5, "all")) > len(generators_lambda(4, "all"))


class TestGeneratorValues:
    def test_sign_normalized(self):
        for rec in generators_lambda(5, "all"):
            c, lead = rec.value.leading()
            assert c > 0
            assert lead == rec.leading

    def test_part0_is_plucker_shape(self):
        # [12|34] = w_13 w_24 - w_14 w_23
        recs = generators_lambda(4, 0)
        want = _wpoly(4, (1, [(1, 3), (2, 4)]), (-1, [(1, 4), (2, 3)]))
        values = {rec.value for rec in recs}
        assert want in values or -want in values

    def test_part1_kills_phi_w(self):
        for rec in generators_lambda(4, 1):
            assert phi_W(rec.value).is_zero

    def test_all_generators_vanish_under_phi_w(self):
        for d in (4, 5, 6):
            for rec in generators_lambda(d, "all"):
                assert phi_W(rec.value).is_zero

    def test_generators_homogeneous_quadrics(self):
        for rec in generators_lambda(5, "all"):
            assert rec.value.is_homogeneous()
            assert rec.value.degree() == 2


class TestHomomorphisms:
    def test_quadric_image_offdiagonal(self):
        f = quadric_image(4, 1, 2)
        assert not f.is_zero and f.degree() == 2

    def test_epsilon_criterion_c(self):
        gbN = buchberger(minor_ideal_U(4), omega_order(ring_U(4)))
        for rec in generators_lambda(4, "all"):
            assert check_criterion_c(rec.value, gbN)

    def test_epsilon_nonmember(self):
        gbN = buchberger(minor_ideal_U(4), omega_order(ring_U(4)))
        w12 = W4.variable(wvar(1, 2))
        assert not check_criterion_c(w12 * w12, gbN)

    def test_epsilon_is_a_ring_map(self):
        f = _wpoly(4, (1, [(1, 1), (2, 2)]))
        g = _wpoly(4, (1, [(1, 2), (1, 2)]))
        assert epsilon(f + g) == epsilon(f) + epsilon(g)
        assert epsilon(f * g) == epsilon(f) * epsilon(g)


class TestCatalogue:
    def test_g1_34_expansion(self):
        entry = named_generator("g1", (3, 4), 4)
        want = _wpoly(
            4,
            (1, [(2, 3), (2, 4)]),
            (-1, [(1, 3), (1, 4)]),
            (-1, [(2, 2), (3, 4)]),
            (1, [(1, 1), (3, 4)]),
        )
        assert entry.value == want or entry.value == -want

    def test_g3f1_expansion(self):
        # G3.F1(i, j) leads with w_13 w_23 w_ij
        entry = named_generator("G3.F1", (4, 5), 5)
        _, lead = entry.value.leading(omega_order(ring_W(5)))
        assert lead == entry.claimed_leading

    def test_bad_params(self):
        with pytest.raises(BadParams):
            named_generator("g1", (4, 3), 5)
        with pytest.raises(BadParams):
            named_generator("G2.F1", (2, 3, 4), 5)
        with pytest.raises(BadParams):
            named_generator("G3.F1", (3, 4), 5)

    def test_catalogue_deterministic(self):
        a = catalogue_entries(5)
        b = catalogue_entries(5)
        assert [(e.key, e.params) for e in a] == [(e.key, e.params) for e in b]

    def test_catalogue_values_vanish_under_phi_w(self):
        for entry in catalogue_entries(4):
            assert phi_W(entry.value).is_zero

    def test_claimed_leads_homogeneous(self):
        for entry in catalogue_entries(5):
            assert entry.value.is_homogeneous()
            assert entry.claimed_leading.degree == entry.value.degree()


class TestErrata:
    def test_errata_keys_pinned(self):
        for d in (4, 5, 6):
            keys = {entry.key for entry, _ in errata_report(d)}
            assert keys <= set(DOCUMENTED_ERRATA_KEYS)

    def test_documented_errata_present(self):
        keys = {entry.key for entry, _ in errata_report(5)}
        assert keys == set(DOCUMENTED_ERRATA_KEYS)
