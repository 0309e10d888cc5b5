"""Hilbert functions of graded ideals by exact linear algebra.

The rank route is deliberately independent of the Groebner engine: the
degree-k slice of an ideal is spanned by generator multiples, and its
dimension is the rank of the coefficient matrix under fraction-free
integer elimination.  Closed forms for the same numbers live in
``hf_closed`` so the two can be compared.
"""

from __future__ import annotations

import itertools
from math import comb, gcd

from .errors import NotHomogeneous, OutOfTable
from .rings import Monomial, OrderSpec, Polynomial, Ring, omega_order


def monomials_of_degree(ring: Ring, k: int, order: OrderSpec | None = None):
    """All degree-k monomials of the ring, descending under the order."""
    order = order or omega_order(ring)
    n = ring.nvars
    out = []
    for combo in itertools.combinations_with_replacement(range(n), k):
        exps = [0] * n
        for p in combo:
            exps[p] += 1
        out.append(tuple(exps))
    out.sort(key=order.key, reverse=True)
    return [Monomial(ring, e) for e in out]


def _int_rows(products, colindex):
    """Generator multiples as integer sparse rows {column: int}."""
    rows = []
    for terms in products:
        denom = 1
        for c in terms.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        row = {}
        g = 0
        for m, c in terms.items():
            v = int(c * denom)
            row[colindex[m]] = v
            g = gcd(g, v)
        if row:
            if g > 1:
                row = {j: v // g for j, v in row.items()}
            rows.append(row)
    return rows


def _rank(rows) -> int:
    """Rank by incremental fraction-free elimination on sparse int rows."""
    pivots: dict = {}  # leading column -> normalized row
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {j: v // g for j, v in row.items()}
                pivots[c] = row
                rank += 1
                break
            a, b = piv[c], row[c]
            new = {}
            for j, v in row.items():
                s = a * v - b * piv.get(j, 0)
                if s:
                    new[j] = s
            for j, v in piv.items():
                if j not in row:
                    s = -b * v
                    if s:
                        new[j] = s
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {j: v // g for j, v in new.items()}
            row = new
    return rank


def hf_exact(gens, k: int) -> int:
    """Dimension of the degree-k slice of the ideal generated by ``gens``."""
    gens = [g for g in gens if not g.is_zero]
    if not gens or k < 0:
        return 0
    ring = gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise NotHomogeneous(f"inhomogeneous generator: {g!r}")
    order = omega_order(ring)
    basis = monomials_of_degree(ring, k, order)
    colindex = {m.exps: p for p, m in enumerate(basis)}
    products = []
    for g in gens:
        e = g.degree()
        if e > k:
            continue
        for m in monomials_of_degree(ring, k - e, order):
            shifted = {
                tuple(a + b for a, b in zip(m.exps, t)): c
                for t, c in g.terms.items()
            }
            products.append(shifted)
    return _rank(_int_rows(products, colindex))


def hf_closed(which: str, d: int, k: int | None = None) -> int:
    """The closed-form Hilbert values for the rings in play."""
    if which == "IX2":
        if k not in (None, 2):
            raise OutOfTable("IX2 is the degree-2 value")
        return 2 * (d + 2) * (d + 1) * d * (d - 3) // 24
    if which == "IX3":
        if k not in (None, 3):
            raise OutOfTable("IX3 is the degree-3 value")
        num = (
            14 * d**6 + 30 * d**5 - 40 * d**4 - 210 * d**3 - 334 * d**2 - 180 * d
        )
        return num // 720
    if which == "W":
        if k is None or k < 0:
            raise OutOfTable("W needs a degree k >= 0")
        n = comb(d + 1, 2) - 1
        return comb(k + n - 1, k)
    if which == "fiber":
        if k is None or k < 2:
            raise OutOfTable("the fiber closed form holds for k >= 2 only")
        return comb(d + 2 * k - 1, 2 * k)
    raise OutOfTable(f"unknown closed form {which!r}")


def initial_monomials(gens, k: int, order: OrderSpec | None = None):
    """All degree-k monomials of the initial ideal, via a truncated basis."""
    from .groebner import buchberger

    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return set()
    ring = gens[0].ring
    order = order or omega_order(ring)
    gb = buchberger(gens, order, max_degree=k)
    lts = [m.exps for m in gb.leading_monomials()]
    out = set()
    for m in monomials_of_degree(ring, k, order):
        if any(all(a <= b for a, b in zip(lt, m.exps)) for lt in lts):
            out.add(m)
    return out
