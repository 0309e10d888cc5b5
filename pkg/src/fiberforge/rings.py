"""Exact sparse multivariate polynomials over Q with the matrix-variable orders.

Variables come in four flavours: ambient ``x_i``, fiber ``w_ij`` (symmetric
pair indices, no ``w_dd``), Veronese ``u_ij`` (symmetric, ``u_dd`` present)
and a single Rees variable ``t``.  Monomials are exponent tuples over a
fixed ring; the graded reverse lexicographic order used throughout sorts
pair variables ascending by (max index, min index):

    w_11 < w_12 < w_22 < w_13 < w_23 < w_33 < w_14 < ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import (
    BadIndex,
    IncomparableVariables,
    PartialHomomorphism,
    RingMismatch,
    UnknownVariable,
    ZeroPolynomial,
)


class VarKind(Enum):
    X = "x"
    W = "w"
    U = "u"
    T = "t"


@dataclass(frozen=True, order=False)
class VariableId:
    """A tagged variable: x_i, w_ij, u_ij or t.

    Pair indices are canonicalized to i <= j on construction.
    """

    kind: VarKind
    index: tuple

    def __post_init__(self):
        if self.kind in (VarKind.W, VarKind.U):
            i, j = self.index
            if i < 1 or j < 1:
                raise BadIndex(f"pair index out of range: {self.index}")
            if i > j:
                object.__setattr__(self, "index", (j, i))
        elif self.kind is VarKind.X:
            (i,) = self.index
            if i < 1:
                raise BadIndex(f"x index out of range: {i}")

    @property
    def is_pair(self) -> bool:
        return self.kind in (VarKind.W, VarKind.U)

    def __repr__(self):
        if self.kind is VarKind.T:
            return "t"
        if self.kind is VarKind.X:
            return f"x[{self.index[0]}]"
        return f"{self.kind.value}[{self.index[0]},{self.index[1]}]"


def xvar(i: int) -> VariableId:
    return VariableId(VarKind.X, (i,))


def wvar(i: int, j: int, d: int | None = None) -> VariableId:
    v = VariableId(VarKind.W, (i, j))
    if d is not None:
        if max(v.index) > d:
            raise BadIndex(f"w index beyond dimension {d}: {v.index}")
        if v.index == (d, d):
            raise BadIndex(f"w[{d},{d}] does not exist (diagonal corner is zero)")
    return v


def uvar(i: int, j: int, d: int | None = None) -> VariableId:
    v = VariableId(VarKind.U, (i, j))
    if d is not None and max(v.index) > d:
        raise BadIndex(f"u index beyond dimension {d}: {v.index}")
    return v


def tvar() -> VariableId:
    return VariableId(VarKind.T, ())


def cmp_vars_omega(a: VariableId, b: VariableId) -> int:
    """Compare two pair variables in the omega sequence; -1, 0 or 1."""
    if a.kind is not b.kind or not a.is_pair or not b.is_pair:
        raise IncomparableVariables(f"cannot compare {a!r} and {b!r} under omega")
    ka = (max(a.index), min(a.index))
    kb = (max(b.index), min(b.index))
    return (ka > kb) - (ka < kb)


def _pair_sort_key(v: VariableId):
    return (max(v.index), min(v.index))


class Ring:
    """A named polynomial ring with a fixed ascending variable sequence."""

    __slots__ = ("name", "vars", "index", "d")

    def __init__(self, name: str, variables: tuple, d: int):
        self.name = name
        self.vars = tuple(variables)
        self.index = {v: p for p, v in enumerate(self.vars)}
        self.d = d

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def position(self, v: VariableId) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVariable(f"{v!r} not in ring {self.name}") from None

    def variable(self, v: VariableId) -> "Polynomial":
        p = self.position(v)
        exps = [0] * self.nvars
        exps[p] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(1)})

    def monomial(self, exps) -> "Monomial":
        return Monomial(self, tuple(exps))

    def monomial_of(self, *variables) -> "Monomial":
        """Monomial from a list of VariableIds (with multiplicity)."""
        exps = [0] * self.nvars
        for v in variables:
            exps[self.position(v)] += 1
        return Monomial(self, tuple(exps))

    def __repr__(self):
        return f"Ring({self.name}, {self.nvars} vars)"


def _w_sequence(d: int):
    pairs = sorted(
        (wvar(i, j) for i in range(1, d + 1) for j in range(i, d + 1)
         if (i, j) != (d, d)),
        key=_pair_sort_key,
    )
    return tuple(pairs)


def _u_sequence(d: int):
    pairs = sorted(
        (uvar(i, j) for i in range(1, d + 1) for j in range(i, d + 1)),
        key=_pair_sort_key,
    )
    return tuple(pairs)


@lru_cache(maxsize=None)
def ring_R(d: int) -> Ring:
    return Ring(f"R{d}", tuple(xvar(i) for i in range(1, d + 1)), d)


@lru_cache(maxsize=None)
def ring_W(d: int) -> Ring:
    return Ring(f"W{d}", _w_sequence(d), d)


@lru_cache(maxsize=None)
def ring_U(d: int) -> Ring:
    return Ring(f"U{d}", _u_sequence(d), d)


@lru_cache(maxsize=None)
def ring_S(d: int) -> Ring:
    """S = R[w...]: the x block followed by the w block."""
    return Ring(f"S{d}", ring_R(d).vars + ring_W(d).vars, d)


@lru_cache(maxsize=None)
def ring_Rees(d: int) -> Ring:
    """S[t], used by the Rees elimination oracle (t listed last)."""
    return Ring(f"Rees{d}", ring_S(d).vars + (tvar(),), d)


class Monomial:
    """An exponent tuple over a fixed ring."""

    __slots__ = ("ring", "exps", "_hash")

    def __init__(self, ring: Ring, exps: tuple):
        if len(exps) != ring.nvars:
            raise UnknownVariable("exponent tuple length does not match ring")
        self.ring = ring
        self.exps = exps
        self._hash = hash((ring.name, exps))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def exponents(self) -> dict:
        return {v: e for v, e in zip(self.ring.vars, self.exps) if e}

    def variables(self):
        return [v for v, e in zip(self.ring.vars, self.exps) if e]

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.ring is not other.ring:
            raise RingMismatch("monomials over different rings")
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.ring is other.ring
            and self.exps == other.exps
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not any(self.exps):
            return "1"
        parts = []
        for v, e in zip(self.ring.vars, self.exps):
            if e == 1:
                parts.append(repr(v))
            elif e > 1:
                parts.append(f"{v!r}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class OrderSpec:
    """A monomial order: omega-grevlex or a block elimination order.

    ``blocks`` lists variable positions per block; earlier blocks are
    eliminated first (compare greater).  Inside each block the comparison
    is graded reverse lexicographic over the ring's ascending sequence.
    """

    kind: str
    ring: Ring
    blocks: tuple

    def key(self, exps: tuple):
        return tuple(
            (
                sum(exps[p] for p in blk),
                tuple(-exps[p] for p in blk),
            )
            for blk in self.blocks
        )

    def monomial_key(self, m: Monomial):
        if m.ring is not self.ring:
            raise UnknownVariable(
                f"monomial over {m.ring.name} compared under {self.ring.name} order"
            )
        return self.key(m.exps)


@lru_cache(maxsize=None)
def omega_order(ring: Ring) -> OrderSpec:
    return OrderSpec("omega_grevlex", ring, (tuple(range(ring.nvars)),))


def elimination_order(ring: Ring, eliminated: frozenset) -> OrderSpec:
    """Two-block order: ``eliminated`` variables first (greater block)."""
    first = tuple(p for p, v in enumerate(ring.vars) if v in eliminated)
    second = tuple(p for p, v in enumerate(ring.vars) if v not in eliminated)
    if len(first) != len(eliminated):
        raise UnknownVariable("eliminated variables not all in ring")
    return OrderSpec("block_elimination", ring, (first, second))


def cmp_monomials(order: OrderSpec, m1: Monomial, m2: Monomial) -> int:
    k1, k2 = order.monomial_key(m1), order.monomial_key(m2)
    return (k1 > k2) - (k1 < k2)


class Polynomial:
    """A sparse polynomial: ring plus {exponent tuple: Fraction} terms.

    Values are immutable by convention; all operations return new objects
    and never keep zero coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_items(ring: Ring, items) -> "Polynomial":
        terms = {}
        for exps, c in items:
            c = Fraction(c)
            if c:
                acc = terms.get(exps)
                c = c if acc is None else acc + c
                if c:
                    terms[exps] = c
                else:
                    del terms[exps]
        return Polynomial(ring, terms)

    # -- predicates ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring:
            raise RingMismatch(
                f"mixed rings {self.ring.name} and {other.ring.name}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            s = c if acc is None else acc + c
            if s:
                terms[m] = s
            elif acc is not None:
                del terms[m]
        return Polynomial(self.ring, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                acc = terms.get(m)
                s = c if acc is None else acc + c
                if s:
                    terms[m] = s
                elif acc is not None:
                    del terms[m]
        return Polynomial(self.ring, terms)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring is other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.name, frozenset(self.terms.items())))

    # -- order-aware views -------------------------------------------------

    def sorted_terms(self, order: OrderSpec | None = None):
        """Terms as (coefficient, Monomial), descending by the order."""
        order = order or omega_order(self.ring)
        exps = sorted(self.terms, key=order.key, reverse=True)
        return [(self.terms[m], Monomial(self.ring, m)) for m in exps]

    def leading(self, order: OrderSpec | None = None):
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        order = order or omega_order(self.ring)
        m = max(self.terms, key=order.key)
        return self.terms[m], Monomial(self.ring, m)

    def __repr__(self):
        return format_poly(self)


def poly_add(f, g):
    return f + g


def poly_sub(f, g):
    return f - g


def poly_mul(f, g):
    return f * g


def leading_term(order: OrderSpec, f: Polynomial):
    """The order-greatest term of f as (coefficient, Monomial)."""
    return f.leading(order)


def apply_hom(f: Polynomial, hom: dict, target: Ring) -> Polynomial:
    """Apply a ring homomorphism given by variable images.

    ``hom`` maps VariableId -> Polynomial over ``target``.  Every variable
    occurring in ``f`` must have an image.
    """
    result = target.zero()
    pow_cache: dict = {}

    def power(v: VariableId, e: int) -> Polynomial:
        key = (v, e)
        got = pow_cache.get(key)
        if got is not None:
            return got
        if e == 1:
            img = hom.get(v)
            if img is None:
                raise PartialHomomorphism(f"no image for {v!r}")
            if img.ring is not target:
                raise RingMismatch("homomorphism images in mixed rings")
            p = img
        else:
            p = power(v, e - 1) * power(v, 1)
        pow_cache[key] = p
        return p

    rvars = f.ring.vars
    for exps, c in f.terms.items():
        term = Polynomial(target, {(0,) * target.nvars: c})
        for pos, e in enumerate(exps):
            if e:
                term = term * power(rvars[pos], e)
        result = result + term
    return result


# -- serialization ---------------------------------------------------------


def _var_token(v: VariableId) -> str:
    return repr(v)


def _exp_key(v: VariableId) -> str:
    if v.kind is VarKind.T:
        return "t"
    return ",".join(str(i) for i in v.index)


def format_poly(f: Polynomial, order: OrderSpec | None = None) -> str:
    """Deterministic text form: terms descending, `±c*w[i,j]^e*...`."""
    if f.is_zero:
        return "0"
    parts = []
    for c, m in f.sorted_terms(order):
        sign = "+" if c > 0 else "-"
        factors = []
        a = abs(c)
        if a != 1 or not any(m.exps):
            factors.append(str(a))
        for v, e in zip(f.ring.vars, m.exps):
            if e == 1:
                factors.append(_var_token(v))
            elif e > 1:
                factors.append(f"{_var_token(v)}^{e}")
        parts.append(sign + "*".join(factors))
    return "".join(parts)


def poly_to_json(f: Polynomial, order: OrderSpec | None = None) -> dict:
    """JSON form with deterministic (descending) term ordering."""
    terms = []
    for c, m in f.sorted_terms(order):
        exp = {
            _exp_key(v): e for v, e in zip(f.ring.vars, m.exps) if e
        }
        terms.append({"coeff": str(c), "exp": exp})
    return {"ring": f.ring.name, "terms": terms}
