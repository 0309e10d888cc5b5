"""Tests for Buchberger's algorithm, normal forms, and elimination."""

import pytest
from fractions import Fraction

from fiberforge.errors import (
    BeyondTruncation,
    BudgetExceeded,
    RingMismatch,
    TruncationNeedsHomogeneous,
)
from fiberforge.groebner import (
    buchberger,
    eliminate,
    ideal_contains,
    ideal_equal,
    kernel_of_hom,
    normal_form,
    transport,
)
from fiberforge.rings import (
    Polynomial,
    Ring,
    VariableId,
    VarKind,
    elimination_order,
    omega_order,
    ring_W,
    wvar,
    xvar,
)

W4 = ring_W(4)
OMEGA4 = omega_order(W4)


def _wpoly(*terms):
    f = W4.zero()
    for coeff, pairs in terms:
        mono = W4.monomial_of(*(wvar(i, j) for i, j in pairs))
        f = f + Polynomial(W4, {mono.exps: Fraction(coeff)})
    return f


def _small_rings():
    """A two-variable source ring and its squared-monomial target."""
    w11 = VariableId(VarKind.W, (1, 1))
    w12 = VariableId(VarKind.W, (1, 2))
    w22 = VariableId(VarKind.W, (2, 2))
    source = Ring("Wsq", (w11, w12, w22), 2)
    x1, x2 = xvar(1), xvar(2)
    target = Ring("Xsq", (x1, x2), 2)
    images = {
        w11: target.variable(x1) * target.variable(x1),
        w12: target.variable(x1) * target.variable(x2),
        w22: target.variable(x2) * target.variable(x2),
    }
    return source, target, images, (w11, w12, w22)


class TestBuchberger:
    def test_veronese_kernel(self):
        source, target, images, (w11, w12, w22) = _small_rings()
        gb = kernel_of_hom(source, target, images)
        # Kernel is generated by w_11 w_22 - w_12^2.
        assert len(gb.elements) == 1
        f = gb.elements[0]
        v11 = source.variable(w11)
        v12 = source.variable(w12)
        v22 = source.variable(w22)
        assert f == v11 * v22 - v12 * v12 or f == v12 * v12 - v11 * v22

    def test_normal_form_reduces(self):
        source, target, images, (w11, w12, w22) = _small_rings()
        gb = kernel_of_hom(source, target, images)
        v11 = source.variable(w11)
        v12 = source.variable(w12)
        v22 = source.variable(w22)
        # w_12^2 reduces to w_11 w_22 modulo the Veronese kernel.
        assert normal_form(v12 * v12, gb) == v11 * v22

    def test_reduced_basis_is_monic_and_sorted(self):
        gens = [_wpoly((2, [(1, 2), (3, 4)]), (-2, [(1, 3), (2, 4)]))]
        gb = buchberger(gens, OMEGA4)
        for f in gb.elements:
            c, _ = f.leading(OMEGA4)
            assert c == 1

    def test_zero_generators_dropped(self):
        gb = buchberger([W4.zero(), _wpoly((1, [(1, 2)]))], OMEGA4)
        assert len(gb.elements) == 1

    def test_ring_mismatch(self):
        gb = buchberger([_wpoly((1, [(1, 2)]))], OMEGA4)
        other = ring_W(5)
        g = Polynomial(other, {other.monomial_of(wvar(1, 2)).exps: Fraction(1)})
        with pytest.raises(RingMismatch):
            normal_form(g, gb)


class TestTruncation:
    def test_needs_homogeneous(self):
        f = _wpoly((1, [(1, 2), (1, 2)]), (1, [(1, 2)]))
        with pytest.raises(TruncationNeedsHomogeneous):
            buchberger([f], OMEGA4, max_degree=3)

    def test_beyond_truncation(self):
        f = _wpoly((1, [(1, 2), (3, 4)]), (-1, [(1, 3), (2, 4)]))
        gb = buchberger([f], OMEGA4, max_degree=2)
        assert gb.truncation_degree == 2
        cubic = _wpoly((1, [(1, 2), (1, 2), (1, 2)]))
        with pytest.raises(BeyondTruncation):
            normal_form(cubic, gb)

    def test_truncated_agrees_below_cutoff(self):
        from fiberforge.candidate import generators_lambda

        gens = [rec.value for rec in generators_lambda(4, "all")]
        full = buchberger(gens, OMEGA4)
        trunc = buchberger(gens, OMEGA4, max_degree=2)
        full_deg2 = [f for f in full.elements if f.degree() == 2]
        assert sorted(map(hash, trunc.elements)) == sorted(map(hash, full_deg2))


class TestBudget:
    def test_budget_exceeded_carries_partial(self):
        from fiberforge.candidate import generators_lambda

        gens = [rec.value for rec in generators_lambda(6, "all")]
        with pytest.raises(BudgetExceeded) as info:
            buchberger(gens, omega_order(ring_W(6)), time_budget=1e-9)
        assert info.value.partial is not None
        assert info.value.partial.elements


class TestElimination:
    def test_elimination_order_blocks(self):
        order = elimination_order(W4, frozenset({wvar(1, 1)}))
        m_elim = W4.monomial_of(wvar(1, 1))
        m_kept = W4.monomial_of(wvar(3, 4), wvar(3, 4), wvar(3, 4))
        assert order.key(m_elim.exps) > order.key(m_kept.exps)

    def test_eliminate_veronese(self):
        source, target, images, names = _small_rings()
        joint = Ring("J", target.vars + source.vars, 2)
        gens = []
        for v, img in images.items():
            gens.append(transport(joint.variable(v), joint) - transport(img, joint))
        kept = eliminate(gens, joint, frozenset(target.vars))
        assert len(kept) == 1
        used = {
            v
            for f in kept
            for m in (f.terms or {})
            for v, e in zip(joint.vars, m)
            if e
        }
        assert used <= set(source.vars)


class TestIdealPredicates:
    def test_ideal_equal_true(self):
        a = [_wpoly((1, [(1, 2), (3, 4)]), (-1, [(1, 3), (2, 4)]))]
        b = [f.scale(Fraction(-3)) for f in a]
        assert ideal_equal(a, b, OMEGA4)

    def test_ideal_equal_false(self):
        a = [_wpoly((1, [(1, 2)]))]
        b = [_wpoly((1, [(1, 3)]))]
        assert not ideal_equal(a, b, OMEGA4)

    def test_ideal_contains(self):
        gen = _wpoly((1, [(1, 2), (3, 4)]), (-1, [(1, 3), (2, 4)]))
        gb = buchberger([gen], OMEGA4)
        w11 = W4.variable(wvar(1, 1))
        assert ideal_contains(gb, [gen * w11])
        assert not ideal_contains(gb, [w11])
