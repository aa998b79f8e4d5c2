"""Indicators of the simple objects of a group pair category.

For a finite group G with subgroup H, the simple objects of the associated
module category are indexed by pairs (double coset HgH, irreducible character
chi of the stabilizer S(g) = H intersect gHg^-1).  The degree-m indicator of
such a pair is

    nu_m(g, chi) = 1/|S(g)| * sum over x in H with (g x)^m in H
                   of conj(chi)((g x)^m),

which is always a rational integer.  For m = 2 several shortcut routes exist
once the representative is adjusted so that its square lies in H; they are all
implemented here and cross-checked in the test suite:

  * nu2_stab       sums chi((g x)^2) over the stabilizer only,
  * nu2_squares    counts square roots in the index-2 overgroup S(g) + gS(g),
  * nu2_induced    uses the character induced to that overgroup,
  * nu2_extension  uses an extension of chi to that overgroup,
  * nu_twisted     the twisted indicator sum chi(x * u x u^-1) over S.

category_scan walks every double coset, picks per coset the cheapest valid
route (vanishing test, then the stabilizer sum, with the defining sum kept as
a fallback for m != 2) and reports one row per simple object.
"""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .chartab import (
    Character,
    ClassData,
    character_table,
    conjugacy_classes,
    induce,
    inner_product,
    nu_classical,
)
from .config import DEFAULT_SEED
from .cosets import double_cosets, stabilizer
from .cyclo import ZERO, Cyclotomic
from .perm import PermGroup, Permutation, _conj, _identity, _inv, _mul, conjugate


def _raw_pow(x: tuple[int, ...], m: int) -> tuple[int, ...]:
    acc = _identity(len(x))
    b = x
    e = m
    while e:
        if e & 1:
            acc = _mul(acc, b)
        b = _mul(b, b)
        e >>= 1
    return acc


def _as_int(value: Cyclotomic, what: str) -> int:
    out = value.as_rational_integer()
    if out is None:
        raise ArithmeticError(f"{what} is not a rational integer: {value}")
    return out


def _pair_counts(counts, values) -> Cyclotomic:
    total = ZERO
    for c, v in zip(counts, values):
        if c:
            total = total + v.scaled(c)
    return total


def _coset_power_counts(g: Permutation, sub: PermGroup, cd: ClassData,
                        m: int) -> list[int]:
    """Class census in S(g) of the values (g x)^m that land in H, x over H."""
    members = sub.element_set()
    g_raw = g._img
    counts = [0] * len(cd)
    for x in sub.element_tuples():
        y = _raw_pow(_mul(g_raw, x), m)
        if y in members:
            counts[cd._index[y]] += 1
    return counts


def _square_counts(g: Permutation, cd: ClassData) -> list[int]:
    """Class census of (g x)^2 for x over the stabilizer S behind cd."""
    g_raw = g._img
    counts = [0] * len(cd)
    for x in cd.group.element_tuples():
        y = _mul(_mul(g_raw, x), _mul(g_raw, x))
        counts[cd._index[y]] += 1
    return counts


def nu_m(g: Permutation, chi: Character, sub: PermGroup, m: int = 2) -> int:
    """Degree-m indicator of the simple (HgH, chi) by the defining sum.

    chi must be a character of the stabilizer S(g) (any group object carrying
    the same elements works).  The sum runs over all of H.
    """
    cd = chi.classes
    counts = _coset_power_counts(g, sub, cd, m)
    total = _pair_counts(counts, [v.conj() for v in chi.values])
    return _as_int(total.scaled(Fraction(1, cd.group.order())),
                   f"nu_{m} of {g.to_text()}")


def vanishing_witness(g: Permutation, sub: PermGroup, m: int) -> bool:
    """Whether some element of gH has its m-th power back in H.

    When no such witness exists every degree-m indicator on the double coset
    of g vanishes, and the expensive sums can be skipped.
    """
    members = sub.element_set()
    g_raw = g._img
    return any(_raw_pow(_mul(g_raw, x), m) in members
               for x in sub.element_tuples())


def two_power_rep(g: Permutation, sub: PermGroup) -> Permutation | None:
    """A representative of gH whose order is a power of two and whose square
    lies in H, or None when the coset has no element squaring into H.

    Starting from any g' in gH with g'^2 in H, the odd-power g'^(2l+1) stays
    in the coset (its excess factor (g'^2)^l lies in H) and has 2-power order.
    """
    members = sub.element_set()
    g_raw = g._img
    for x in sub.element_tuples():
        c = _mul(g_raw, x)
        if _mul(c, c) in members:
            p = Permutation._from_raw(c)
            odd = p.order
            while odd % 2 == 0:
                odd //= 2
            return p ** odd
    return None


def nu2_stab(g: Permutation, chi: Character, sub: PermGroup) -> int:
    """Degree-2 indicator via the stabilizer-only sum chi((g x)^2) over S(g).

    Requires g outside H with g^2 in H; then (g x)^2 lies in S(g) for every
    x in S(g) and the H-sum collapses to this one, without conjugating chi.
    """
    members = sub.element_set()
    if g._img in members:
        raise ValueError("representative lies in the subgroup")
    if _mul(g._img, g._img) not in members:
        raise ValueError("square of the representative must lie in the subgroup")
    cd = chi.classes
    counts = _square_counts(g, cd)
    total = _pair_counts(counts, chi.values)
    return _as_int(total.scaled(Fraction(1, cd.group.order())),
                   f"nu_2 of {g.to_text()}")


@dataclass(frozen=True)
class IndexTwoOvergroup:
    """The group S + gS generated over a stabilizer by its coset element."""

    group: PermGroup
    sub: PermGroup
    g: Permutation


def index_two_overgroup(g: Permutation, stab: PermGroup) -> IndexTwoOvergroup:
    """Build S + gS; g must square into S and normalize it."""
    members = stab.element_set()
    if _mul(g._img, g._img) not in members:
        raise ValueError("g^2 must lie in the stabilizer")
    for s in stab.generators:
        if _conj(g._img, s._img) not in members:
            raise ValueError("g must normalize the stabilizer")
    if g._img in members:
        raise ValueError("g already lies in the stabilizer")
    tuples = list(stab.element_tuples())
    tuples += [_mul(g._img, x) for x in tuples]
    big = PermGroup._from_element_tuples(stab.degree, tuples)
    if big.order() != 2 * stab.order():
        raise ValueError("S + gS failed to close up at index two")
    return IndexTwoOvergroup(group=big, sub=stab, g=g)


def nu2_squares(g: Permutation, chi: Character, sub: PermGroup) -> int:
    """Degree-2 indicator as a square census over S + gS.

    Every element of the overgroup squares into S, so chi applies; the
    classical indicator of chi over S itself is then subtracted off.
    """
    cd = chi.classes
    hat = index_two_overgroup(g, cd.group)
    total = ZERO
    for x in hat.group.element_tuples():
        total = total + chi.values[cd._index[_mul(x, x)]]
    total = total.scaled(Fraction(1, cd.group.order()))
    return _as_int(total - nu_classical(chi), f"nu_2 of {g.to_text()}")


def nu2_induced(g: Permutation, chi: Character, sub: PermGroup) -> int:
    """Degree-2 indicator via induction of chi to S + gS."""
    hat = index_two_overgroup(g, chi.classes.group)
    lifted = induce(chi, hat.group)
    total = nu_classical(lifted) - nu_classical(chi)
    return _as_int(total, f"nu_2 of {g.to_text()}")


def nu2_extension(g: Permutation, chi: Character, sub: PermGroup) -> int:
    """Degree-2 indicator via a constituent of the induced character.

    Any irreducible of S + gS restricting onto chi works; the count doubles
    when chi is fixed by conjugation with g.
    """
    cd = chi.classes
    hat = index_two_overgroup(g, cd.group)
    table = character_table(hat.group)
    lifted = None
    for cand in table.characters:
        mult = inner_product(cand.restrict(cd.group), chi)
        if mult.as_rational_integer():
            lifted = cand
            break
    if lifted is None:
        raise ArithmeticError("no irreducible constituent found over chi")
    fixed = chi.conjugated_by(g) == chi
    factor = 2 if fixed else 1
    total = nu_classical(lifted).scaled(factor) - nu_classical(chi)
    return _as_int(total, f"nu_2 of {g.to_text()}")


def nu_twisted(chi: Character, u: Permutation) -> int:
    """Indicator of chi twisted by conjugation with u.

    u must normalize the group of chi with u^2 acting trivially on it; the sum
    averages chi(x * u x u^-1).  With u centralizing the group this is the
    classical degree-2 indicator.
    """
    cd = chi.classes
    members = cd.group.element_set()
    u_raw = u._img
    uu = _mul(u_raw, u_raw)
    for s in cd.group.generators:
        if _conj(u_raw, s._img) not in members:
            raise ValueError("u must normalize the group of chi")
        if _conj(uu, s._img) != s._img:
            raise ValueError("u^2 must centralize the group of chi")
    counts = [0] * len(cd)
    for x in cd.group.element_tuples():
        counts[cd._index[_mul(x, _conj(u_raw, x))]] += 1
    total = _pair_counts(counts, chi.values)
    return _as_int(total.scaled(Fraction(1, cd.group.order())),
                   f"twisted indicator by {u.to_text()}")


@dataclass(frozen=True)
class InvarianceCheck:
    """Outcome of comparing indicators at g against u.g.u^-1 (and u*g)."""

    same_stabilizer: bool
    conjugate_equal: bool
    product_equal: bool | None
    values: tuple[int, ...]


def invariance_check(u: Permutation, g: Permutation, sub: PermGroup,
                     m: int = 2) -> InvarianceCheck:
    """Verify that conjugating the representative by a centralizing u changes
    nothing, and likewise replacing g by u*g when u commutes with g and
    u^m = e.  u must centralize the subgroup."""
    for s in sub.generators:
        if _conj(u._img, s._img) != s._img:
            raise ValueError("u must centralize the subgroup")
    moved = conjugate(u, g)
    s_g = stabilizer(g, sub).group
    s_moved = stabilizer(moved, sub).group
    same = s_g.element_set() == s_moved.element_set()
    table = character_table(s_g)
    base = tuple(nu_m(g, chi, sub, m) for chi in table.characters)
    at_moved = tuple(nu_m(moved, chi, sub, m) for chi in table.characters)
    product: bool | None = None
    if (u * g == g * u) and (u ** m).is_identity():
        shifted = u * g
        s_shifted = stabilizer(shifted, sub).group
        same = same and s_g.element_set() == s_shifted.element_set()
        at_shifted = tuple(nu_m(shifted, chi, sub, m)
                           for chi in table.characters)
        product = at_shifted == base
    return InvarianceCheck(same_stabilizer=same,
                           conjugate_equal=at_moved == base,
                           product_equal=product,
                           values=base)


@dataclass(frozen=True)
class ReductionCheck:
    """Outcome of reducing indicators at t*f in H to indicators at f in H'."""

    same_stabilizer: bool
    indicators_equal: bool
    values: tuple[int, ...]
    reduced_sub_order: int


def reduction_check(t: Permutation, f: Permutation, sub: PermGroup,
                    over: PermGroup) -> ReductionCheck:
    """Compare the degree-2 data of t*f over H with that of f over
    H' = Stab_H(tH), under the hypotheses that make them agree.

    Required: t an involution whose conjugate of H meets over only inside H,
    H' centralizing t, f in over with f^2 in H and f*t = t*f.
    """
    members = sub.element_set()
    if not (t * t).is_identity():
        raise ValueError("t must be an involution")
    if not sub.is_subgroup_of(over):
        raise ValueError("sub must sit inside over")
    for x in sub.element_tuples():
        y = _conj(t._img, x)
        if y not in members and over.member(Permutation._from_raw(y)):
            raise ValueError("conjugation by t pushes part of H into over - H")
    reduced = stabilizer(t, sub).group
    for s in reduced.generators:
        if _conj(t._img, s._img) != s._img:
            raise ValueError("the stabilizer of tH must centralize t")
    if not over.member(f):
        raise ValueError("f must lie in over")
    if (f * f)._img not in members:
        raise ValueError("f^2 must lie in the subgroup")
    if f * t != t * f:
        raise ValueError("f must commute with t")
    s_big = stabilizer(t * f, sub).group
    s_small = stabilizer(f, reduced).group
    same = s_big.element_set() == s_small.element_set()
    table = character_table(s_big)
    big_vals = tuple(nu_m(t * f, chi, sub, 2) for chi in table.characters)
    small_vals = tuple(nu_m(f, chi, reduced, 2) for chi in table.characters)
    return ReductionCheck(same_stabilizer=same,
                          indicators_equal=big_vals == small_vals,
                          values=big_vals,
                          reduced_sub_order=reduced.order())


@dataclass(frozen=True)
class IndicatorEntry:
    """One simple object: coset representative, |S(g)|, chi(e), indicator."""

    rep: Permutation
    stab_order: int
    chi_degree: int
    nu: int


@dataclass(frozen=True)
class IndicatorReport:
    group_label: str
    sub_label: str
    m: int
    entries: tuple[IndicatorEntry, ...]

    @property
    def summary(self) -> dict[int, int]:
        return dict(sorted(Counter(e.nu for e in self.entries).items()))

    def values(self) -> tuple[int, ...]:
        return tuple(e.nu for e in self.entries)

    def to_json(self) -> str:
        payload = {
            "category": {"G_spec": self.group_label, "H_spec": self.sub_label},
            "m": self.m,
            "entries": [{"rep": e.rep.to_text(), "stab_order": e.stab_order,
                         "chi_degree": e.chi_degree, "nu": e.nu}
                        for e in self.entries],
            "summary": {str(k): v for k, v in self.summary.items()},
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["rep", "stab_order", "chi_degree", "nu"])
        for e in self.entries:
            writer.writerow([e.rep.to_text(), e.stab_order, e.chi_degree, e.nu])
        return out.getvalue()


def _gens_label(group: PermGroup) -> str:
    gens = ";".join(g.to_text() for g in group.generators) or "()"
    return f"gens:{gens}@{group.degree}"


def category_scan(group: PermGroup, sub: PermGroup, m: int = 2,
                  group_label: str | None = None,
                  sub_label: str | None = None,
                  seed: int | None = None) -> IndicatorReport:
    """Indicators of every simple object of the pair category of (G, H).

    One stabilizer and one character table are computed per double coset; the
    left cosets inside share them by conjugation.  Per coset the vanishing
    test runs first, then for m = 2 the stabilizer-only sum at an adjusted
    representative, with the defining H-sum covering every other case.  The
    seed feeds the table computation only; results do not depend on it.
    """
    if not sub.is_subgroup_of(group):
        raise ValueError("not a subgroup")
    if seed is None:
        seed = DEFAULT_SEED
    decomposition = double_cosets(group, sub)
    members = sub.element_set()
    entries: list[IndicatorEntry] = []
    for dc in decomposition.cosets:
        g = dc.rep
        stab = stabilizer(g, sub).group
        table = character_table(stab, seed)
        if m == 2:
            w = two_power_rep(g, sub)
            if w is None:
                nus = [0] * len(table.characters)
            elif w._img in members:
                nus = [_as_int(nu_classical(chi), "classical nu_2")
                       for chi in table.characters]
            else:
                cd = conjugacy_classes(stab)
                counts = _square_counts(w, cd)
                unit = Fraction(1, stab.order())
                nus = [_as_int(_pair_counts(counts, chi.values).scaled(unit),
                               f"nu_2 at {w.to_text()}")
                       for chi in table.characters]
            for value in nus:
                if value not in (-1, 0, 1):
                    raise ArithmeticError(
                        f"degree-2 indicator out of range: {value}")
        else:
            if not vanishing_witness(g, sub, m):
                nus = [0] * len(table.characters)
            else:
                cd = conjugacy_classes(stab)
                counts = _coset_power_counts(g, sub, cd, m)
                unit = Fraction(1, stab.order())
                nus = [_as_int(
                    _pair_counts(counts, [v.conj() for v in chi.values])
                    .scaled(unit), f"nu_{m} at {g.to_text()}")
                    for chi in table.characters]
        for chi, value in zip(table.characters, nus):
            entries.append(IndicatorEntry(rep=g, stab_order=stab.order(),
                                          chi_degree=chi.degree, nu=value))
    return IndicatorReport(
        group_label=group_label or _gens_label(group),
        sub_label=sub_label or _gens_label(sub),
        m=m,
        entries=tuple(entries))
