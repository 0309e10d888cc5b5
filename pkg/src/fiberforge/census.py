"""Monomial censuses of the initial ideal in degrees 2 and 3.

Everything here is pure enumeration from the definitions, kept independent
of the Groebner engine so the truncated-basis computation can serve as a
cross-check rather than the source.

Degree 2: K0 (four distinct indices), K1 (one shared index), K2 (squares).
Degree 3: the T-sets partition the multiples of the degree-2 census by
their tau-greatest factorization; the G-families are the listed monomials
not divisible by any degree-2 census element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import BadParams, NotInS, OutOfTable
from .rings import Monomial, cmp_vars_omega, omega_order, ring_W, wvar


@dataclass(frozen=True)
class CensusSet:
    family: str
    d: int
    params: tuple
    members: frozenset
    expected: int | None = None


def _wm(d, *vids) -> Monomial:
    return ring_W(d).monomial_of(*vids)


def _vkey(v):
    return (max(v.index), min(v.index))


@lru_cache(maxsize=None)
def census_degree2(d: int) -> frozenset:
    """[in]_2 = K0 + K1 + K2, enumerated straight from the definitions."""
    return frozenset(
        enum_census(d, "K0").members
        | enum_census(d, "K1").members
        | enum_census(d, "K2").members
    )


def _k0(d):
    out = set()
    for i, j, k, l in itertools.combinations(range(1, d + 1), 4):
        out.add(_wm(d, wvar(i, k), wvar(j, l)))
        out.add(_wm(d, wvar(i, l), wvar(j, k)))
    return out


def _k1(d):
    key = omega_order(ring_W(d)).key
    out = set()
    for i, j in itertools.combinations(range(1, d + 1), 2):
        comp = sorted(set(range(1, d + 1)) - {i, j})
        for l in comp[1:]:
            if l == d:
                # the w_ij*w_dd candidate vanishes with the missing corner
                out.add(_wm(d, wvar(i, d), wvar(j, d)))
            else:
                m1 = _wm(d, wvar(j, l), wvar(i, l))
                m2 = _wm(d, wvar(i, j), wvar(l, l))
                out.add(m1 if key(m1.exps) > key(m2.exps) else m2)
    return out


def _k2(d):
    out = set()
    for i in range(2, d + 1):
        for j in range(max(i + 1, 4), d + 1):
            out.add(_wm(d, wvar(i, j), wvar(i, j)))
    return out


@lru_cache(maxsize=None)
def s_set(d: int, i: int, j: int) -> frozenset:
    """Variables w_kl with w_kl * w_ij in the degree-2 census, w_kl <= w_ij."""
    if not (1 <= i <= j <= d) or (i, j) == (d, d):
        raise BadParams(f"S needs a valid variable pair, got {(i, j)}")
    census = census_degree2(d)
    vij = wvar(i, j)
    out = set()
    for v in ring_W(d).vars:
        if _vkey(v) <= _vkey(vij) and _wm(d, v, vij) in census:
            out.add(v)
    return frozenset(out)


def _factorizations(d: int, m: Monomial, census, s_cache):
    """All ((i,j),(k,l)) with w_kl in S_ij and w_ij*w_kl dividing m."""
    vs = m.variables()
    mults = m.exponents
    out = []
    for vij in set(vs):
        for vkl in set(vs):
            if vij == vkl and mults[vij] < 2:
                continue
            if _vkey(vkl) > _vkey(vij):
                continue
            if _wm(d, vij, vkl) not in census:
                continue
            sij = s_cache.get(vij.index)
            if sij is None:
                sij = s_set(d, *vij.index)
                s_cache[vij.index] = sij
            if vkl in sij:
                out.append((vij.index, vkl.index))
    return out


def t_set(d: int, ij: tuple, kl: tuple) -> frozenset:
    """The degree-3 monomials charged to the factor pair (w_ij, w_kl).

    A multiple of the degree-2 census belongs to the tau-greatest pair
    that divides it; this makes the T-sets a partition of those multiples.
    """
    i, j = ij
    sij = s_set(d, i, j)
    vkl = wvar(*kl)
    if vkl not in sij:
        raise NotInS(f"w{kl} is not in S_{ij} at d={d}")
    census = census_degree2(d)
    s_cache: dict = {}
    vij = wvar(i, j)
    target = (_vkey(vij), _vkey(vkl))
    out = set()
    for vab in ring_W(d).vars:
        m = _wm(d, vab, vkl, vij)
        facs = _factorizations(d, m, census, s_cache)
        best = max((_vkey(wvar(*a)), _vkey(wvar(*b))) for a, b in facs)
        if best == target:
            out.add(m)
    return frozenset(out)


def t_total(d: int) -> frozenset:
    """All degree-3 monomials divisible by a degree-2 census element."""
    census = census_degree2(d)
    W = ring_W(d)
    out = set()
    for c in census:
        for v in W.vars:
            out.add(_wm(d, v) * c)
    return frozenset(out)


def _g1(d):
    w13, w23, w22, w12, w1d = wvar(1, 3), wvar(2, 3), wvar(2, 2), wvar(1, 2), wvar(1, d)
    return {
        _wm(d, w13, w23, w23),
        _wm(d, w13, w13, w23),
        _wm(d, w22, w13, w23),
        _wm(d, w23, w23, w23),
        _wm(d, w12, w1d, w1d),
        _wm(d, w22, w1d, w1d),
    }


def _g2(d):
    return {
        _wm(d, wvar(1, i), wvar(1, j), wvar(1, k))
        for i, j, k in itertools.combinations_with_replacement(range(3, d + 1), 3)
    }


def _g34(d, prefix):
    out = set()
    for i in range(3, d + 1):
        for j in range(i, d + 1):
            if (i, j) == (d, d):
                continue
            out.add(_wm(d, *prefix, wvar(i, j)))
    return out


_FAMILIES = ("K0", "K1", "K2", "S", "Tkl", "Tmax", "Ttotal", "G1", "G2", "G3", "G4")


def enum_census(d: int, family: str, params: tuple = ()) -> CensusSet:
    """Enumerate one census family; see count_closed for expected sizes."""
    if d < 4:
        raise BadParams(f"census needs d >= 4, got {d}")
    params = tuple(params)
    if family == "K0":
        members = _k0(d)
    elif family == "K1":
        members = _k1(d)
    elif family == "K2":
        members = _k2(d)
    elif family == "S":
        i, j = params
        members = {_wm(d, v) for v in s_set(d, i, j)}
    elif family == "Tkl":
        ij, kl = params
        members = t_set(d, tuple(ij), tuple(kl))
    elif family == "Tmax":
        i, j = params
        sij = s_set(d, i, j)
        if not sij:
            raise NotInS(f"S_{params} is empty at d={d}")
        members = t_set(d, (i, j), max(sij, key=_vkey).index)
    elif family == "Ttotal":
        members = t_total(d)
    elif family == "G1":
        members = _g1(d)
    elif family == "G2":
        members = _g2(d)
    elif family == "G3":
        members = _g34(d, (wvar(1, 3), wvar(2, 3)))
    elif family == "G4":
        members = _g34(d, (wvar(2, 3), wvar(2, 3)))
    else:
        raise BadParams(f"unknown census family {family!r}")
    try:
        expected = count_closed(d, family, params)
    except OutOfTable:
        expected = None
    return CensusSet(family, d, params, frozenset(members), expected)


def count_closed(d: int, family: str, params: tuple = ()) -> int:
    """Closed-form census sizes; OutOfTable where no formula applies."""
    params = tuple(params)
    if family == "K0":
        return 2 * comb(d, 4)
    if family == "K1":
        return (d - 3) * comb(d, 2)
    if family == "K2":
        return d * (d - 3) // 2
    if family == "S":
        i, j = params
        if i == j or (i, j) in ((1, 2), (1, 3), (2, 3)):
            return 0
        if i == 1:
            return j * (j - 3) // 2
        if 1 < i < j:
            return (j - i) * (i + j - 1) // 2
        raise OutOfTable(f"no closed form for S at {params}")
    if family == "Tmax":
        i, j = params
        num = d * d - 2 * d * j + 3 * d + 2 * j * j - 4 * j + 2 * i
        assert num % 2 == 0
        return num // 2
    if family == "Ttotal":
        num = (
            14 * d**6 + 30 * d**5 - 40 * d**4 - 330 * d**3
            - 694 * d**2 + 1740 * d - 4320
        )
        assert num % 720 == 0
        return num // 720
    if family == "G1":
        return 6
    if family == "G2":
        return (d - 2) + (d - 2) * (d - 3) + comb(d - 2, 3)
    if family in ("G3", "G4"):
        return d * (d - 3) // 2
    if family == "Gsum":
        num = 120 * d**3 + 360 * d**2 - 1920 * d + 4320
        assert num % 720 == 0
        return num // 720
    raise OutOfTable(f"no closed form for {family!r} at {params}")


def _nonempty_s_pairs(d: int):
    for j in range(1, d + 1):
        for i in range(1, j + 1):
            if (i, j) == (d, d):
                continue
            if s_set(d, i, j):
                yield (i, j)


@dataclass
class CensusReport:
    d: int
    checks: list

    @property
    def ok(self) -> bool:
        return all(c[3] for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c[3]]


def verify_census(d: int) -> CensusReport:
    """Every closed-form count and structural claim, as one report."""
    checks = []

    def check(name, expected, actual):
        checks.append((name, expected, actual, expected == actual))

    for fam in ("K0", "K1", "K2"):
        check(f"|{fam}|", count_closed(d, fam), len(enum_census(d, fam).members))
    census = census_degree2(d)
    hf2 = 2 * (d + 2) * (d + 1) * d * (d - 3) // 24
    check("degree-2 census size", hf2, len(census))

    svals = {}
    for j in range(1, d + 1):
        for i in range(1, j + 1):
            if (i, j) == (d, d):
                continue
            sij = s_set(d, i, j)
            svals[(i, j)] = sij
            check(f"|S_{i}{j}|", count_closed(d, "S", (i, j)), len(sij))

    # membership characterizations by largest variable divisor
    char_ok = True
    for (i, j), sij in svals.items():
        for v in ring_W(d).vars:
            k, l = v.index
            if i == 1 and 1 < j:
                expect = 1 < k and 2 < l < j
            elif 1 < i < j:
                expect = (i < l < j) or (l == j and k <= i)
            else:
                expect = False
            if (i, j) in ((1, 2), (1, 3), (2, 3)) or i == j:
                expect = False
            if (v in sij) != expect:
                char_ok = False
    checks.append(("S membership characterization", True, char_ok, char_ok))

    for i, j in _nonempty_s_pairs(d):
        mx = max(svals[(i, j)], key=_vkey)
        expect = wvar(j - 1, j - 1) if i == 1 else wvar(i, j)
        check(f"max S_{i}{j}", expect, mx)
        check(
            f"|Tmax_{i}{j}|",
            count_closed(d, "Tmax", (i, j)),
            len(t_set(d, (i, j), mx.index)),
        )

    all_t = []
    total = 0
    for i, j in _nonempty_s_pairs(d):
        sij = sorted(svals[(i, j)], key=_vkey, reverse=True)
        sizes = [len(t_set(d, (i, j), v.index)) for v in sij]
        tmax = count_closed(d, "Tmax", (i, j))
        check(
            f"T_{i}{j} consecutive sizes",
            list(range(tmax, tmax - len(sij), -1)),
            sizes,
        )
        check(
            f"T_{i}{j} partial sum",
            len(sij) * (2 * tmax - len(sij) + 1) // 2,
            sum(sizes),
        )
        total += sum(sizes)
        for v in sij:
            all_t.append(t_set(d, (i, j), v.index))

    check("|T| closed form", count_closed(d, "Ttotal"), total)
    union = set().union(*all_t) if all_t else set()
    check("T sets disjoint", sum(len(t) for t in all_t), len(union))
    check("T sets cover the census multiples", True, t_total(d) == frozenset(union))

    gsets = {fam: enum_census(d, fam).members for fam in ("G1", "G2", "G3", "G4")}
    for fam, members in gsets.items():
        check(f"|{fam}|", count_closed(d, fam), len(members))
    gall = set().union(*gsets.values())
    check("G sets disjoint", sum(len(g) for g in gsets.values()), len(gall))
    check("G disjoint from T", set(), gall & union)
    check(
        "Gsum closed form",
        count_closed(d, "Gsum"),
        sum(len(g) for g in gsets.values()),
    )

    from .candidate import catalogue_entries

    claimed = {e.claimed_leading for e in catalogue_entries(d)}
    missing = {m for m in gall if m not in claimed}
    check("every G monomial is a claimed catalogue lead", set(), missing)

    return CensusReport(d, checks)
