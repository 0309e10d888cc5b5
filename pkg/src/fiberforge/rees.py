"""The quadric ideal I, its powers, syzygies, and the Rees ideal J = L + Lambda*S.

L is the symmetric-algebra part, read off a basis of the linear syzygies of
the generators; Lambda is the fiber part from ``candidate``.  An elimination
oracle computes the full Rees kernel independently for cross-certification,
and ``integrality_witness`` produces the degree-two equation of integrality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .candidate import epsilon, generators_lambda, quadric_image
from .errors import DimensionTooSmall
from .groebner import eliminate, transport
from .hilbert import _int_rows, _rank, monomials_of_degree
from .rings import (
    Polynomial,
    ring_R,
    ring_Rees,
    ring_S,
    ring_U,
    ring_W,
    tvar,
    uvar,
    wvar,
)


@dataclass(frozen=True)
class QuadricIdeal:
    d: int
    gens: tuple  # ordered to match the w-variable sequence

    @property
    def labels(self) -> tuple:
        return tuple(v.index for v in ring_W(self.d).vars)


def build_ideal_I(d: int) -> QuadricIdeal:
    """The quadrics x_i*x_j (i < j) and x_k^2 - x_d^2 (k < d), in the
    same order as the w-variable sequence."""
    if d < 4:
        raise DimensionTooSmall(f"need d >= 4, got {d}")
    gens = tuple(quadric_image(d, *v.index) for v in ring_W(d).vars)
    return QuadricIdeal(d, gens)


def power_check(d: int, k: int) -> bool:
    """True iff k-fold products of the generators span all degree-2k forms."""
    ideal = build_ideal_I(d)
    R = ring_R(d)
    products = []
    for combo in itertools.combinations_with_replacement(ideal.gens, k):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        products.append(p.terms)
    basis = monomials_of_degree(R, 2 * k)
    colindex = {m.exps: p for p, m in enumerate(basis)}
    return _rank(_int_rows(products, colindex)) == comb(d + 2 * k - 1, 2 * k)


def _rref(rows, ncols):
    """Reduced row echelon form over Q; returns (rref rows, pivot columns)."""
    mat = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


@dataclass(frozen=True)
class SyzygyMatrix:
    d: int
    columns: tuple  # each column: tuple of linear forms over R, one per gen

    def __len__(self) -> int:
        return len(self.columns)


def linear_syzygies(d: int) -> SyzygyMatrix:
    """A basis of the linear syzygies of the generators of I.

    Kernel of (a_k) -> sum a_k * g_k from n copies of the linear forms into
    the cubics, via reduced echelon form (deterministic columns).
    """
    ideal = build_ideal_I(d)
    R = ring_R(d)
    lin = monomials_of_degree(R, 1)
    cubics = monomials_of_degree(R, 3)
    colindex = {m.exps: p for p, m in enumerate(cubics)}
    # unknowns: (generator, linear monomial) pairs
    unknowns = [(gi, m) for gi in range(len(ideal.gens)) for m in lin]
    rows = [[Fraction(0)] * len(unknowns) for _ in cubics]
    for uidx, (gi, m) in enumerate(unknowns):
        for t, c in ideal.gens[gi].terms.items():
            prod = tuple(a + b for a, b in zip(m.exps, t))
            rows[colindex[prod]][uidx] = c
    rref, pivots = _rref(rows, len(unknowns))
    free = [c for c in range(len(unknowns)) if c not in pivots]
    columns = []
    for fc in free:
        vec = {fc: Fraction(1)}
        for prow, pc in zip(rref, pivots):
            if prow[fc]:
                vec[pc] = -prow[fc]
        col = []
        for gi in range(len(ideal.gens)):
            form = R.zero()
            for li, m in enumerate(lin):
                c = vec.get(gi * len(lin) + li)
                if c:
                    form = form + Polynomial(R, {m.exps: c})
            col.append(form)
        columns.append(tuple(col))
    return SyzygyMatrix(d, tuple(columns))


def sym_algebra_ideal(d: int) -> list:
    """Entries of w . theta: the defining ideal of the symmetric algebra."""
    S = ring_S(d)
    wpolys = [S.variable(v) for v in ring_W(d).vars]
    out = []
    for col in linear_syzygies(d).columns:
        entry = S.zero()
        for wp, form in zip(wpolys, col):
            if not form.is_zero:
                entry = entry + wp * transport(form, S)
        out.append(entry)
    return out


def rees_ideal(d: int) -> list:
    """Generators of J = L + Lambda*S over S = R[w]."""
    S = ring_S(d)
    out = list(sym_algebra_ideal(d))
    out.extend(transport(g.value, S) for g in generators_lambda(d))
    return out


def rees_substitution(d: int) -> dict:
    """The map S -> R[t] with x fixed and w_ij -> t*g_ij."""
    T = ring_Rees(d)
    t = T.variable(tvar())
    hom = {v: T.variable(v) for v in ring_R(d).vars}
    for v in ring_W(d).vars:
        hom[v] = t * transport(quadric_image(d, *v.index), T)
    return hom


def rees_kernel_oracle(d: int, time_budget: float | None = None) -> list:
    """Kernel of S -> R[t] by eliminating t from (w_ij - t*g_ij).

    Raises BudgetExceeded (with partial state) if the budget runs out.
    """
    T = ring_Rees(d)
    t = T.variable(tvar())
    gens = []
    for v in ring_W(d).vars:
        gens.append(T.variable(v) - t * transport(quadric_image(d, *v.index), T))
    kept = eliminate(gens, T, frozenset({tvar()}), time_budget)
    return [transport(f, ring_S(d)) for f in kept]


@dataclass(frozen=True)
class IntegralityWitness:
    d: int
    combo: Polynomial  # degree-2 polynomial over W with phi_W(combo) = x_d^4
    h: Polynomial  # u_dd^2 - epsilon(combo), over U


def integrality_witness(d: int) -> IntegralityWitness:
    """The degree-two equation of integrality for u_dd over the fiber.

    Solves phi_W(sum a_s m_s) = x_d^4 over the degree-2 monomials of W by
    reduced echelon form with free variables at zero (deterministic).
    """
    if d < 4:
        raise DimensionTooSmall(f"need d >= 4, got {d}")
    W, R, U = ring_W(d), ring_R(d), ring_U(d)
    wmons = monomials_of_degree(W, 2)
    quartics = monomials_of_degree(R, 4)
    rowindex = {m.exps: p for p, m in enumerate(quartics)}
    images = []
    for m in wmons:
        vs = m.variables()
        if len(vs) == 1:
            img = quadric_image(d, *vs[0].index) * quadric_image(d, *vs[0].index)
        else:
            img = quadric_image(d, *vs[0].index) * quadric_image(d, *vs[1].index)
        images.append(img)
    xd4 = tuple(4 if v.index == (d,) else 0 for v in R.vars)
    rows = [[Fraction(0)] * (len(wmons) + 1) for _ in quartics]
    for col, img in enumerate(images):
        for t, c in img.terms.items():
            rows[rowindex[t]][col] = c
    rows[rowindex[xd4]][len(wmons)] = Fraction(1)
    rref, pivots = _rref(rows, len(wmons) + 1)
    if len(wmons) in pivots:
        raise ArithmeticError("x_d^4 is not in the span of the quadric products")
    sol = {}
    for prow, pc in zip(rref, pivots):
        if prow[len(wmons)]:
            sol[pc] = prow[len(wmons)]
    combo = W.zero()
    for col, coeff in sorted(sol.items()):
        combo = combo + Polynomial(W, {wmons[col].exps: coeff})
    udd2 = U.monomial_of(uvar(d, d), uvar(d, d))
    h = Polynomial(U, {udd2.exps: Fraction(1)}) - epsilon(combo)
    return IntegralityWitness(d, combo, h)
