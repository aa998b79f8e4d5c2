"""Cosets and double cosets of a subgroup, with exact canonical representatives.

Left cosets y*H are identified by the lexicographically least image tuple they
contain.  Double cosets H\\G/H are the orbits of H acting on those canonical
representatives by left multiplication; the stored representative is the least
one in the orbit.  For a symmetric subgroup on an initial segment of letters,
a rewriting by transpositions brings any coset representative to a form where
no cycle holds two moved letters of the subgroup, which decides whether the
double coset supports any nonzero degree-2 indicator.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import config
from .perm import BoundExceeded, Permutation, PermGroup, _conj, _inv, _mul, sym, sym_embed


def _check_inclusion(group: PermGroup, sub: PermGroup) -> None:
    if sub.degree != group.degree:
        raise ValueError("subgroup degree differs from group degree")
    if not sub.is_subgroup_of(group):
        raise ValueError("not a subgroup")


def left_coset_reps(group: PermGroup, sub: PermGroup,
                    limit: int | None = None) -> list[Permutation]:
    """Canonical representatives of the left cosets of sub, sorted."""
    _check_inclusion(group, sub)
    limit = config.INDEX_BOUND if limit is None else limit
    index = group.order() // sub.order()
    if index > limit:
        raise BoundExceeded("index bound", limit, index)
    gen_raws = [g._img for g in group.generators]
    start = sub.coset_min(Permutation.identity(group.degree)._img)
    seen = {start}
    queue = [start]
    head = 0
    while head < len(queue):
        c = queue[head]
        head += 1
        for s in gen_raws:
            nxt = sub.coset_min(_mul(s, c))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    assert len(queue) == index
    return [Permutation._from_raw(t) for t in sorted(queue)]


def right_transversal(group: PermGroup, sub: PermGroup,
                      limit: int | None = None) -> list[Permutation]:
    """Representatives t with group partitioned into the right cosets sub*t."""
    return [p.inverse() for p in left_coset_reps(group, sub, limit)]


@dataclass(frozen=True)
class DoubleCoset:
    """One double coset sub*rep*sub with its size data.

    left_indices point into the sorted left-coset representative list (and so
    also into the right transversal, which is its elementwise inverse).
    """

    rep: Permutation
    n_left: int
    size: int
    left_indices: tuple[int, ...]


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    group: PermGroup
    sub: PermGroup
    left_reps: tuple[Permutation, ...]
    cosets: tuple[DoubleCoset, ...]

    def __len__(self) -> int:
        return len(self.cosets)

    def __iter__(self):
        return iter(self.cosets)


def double_cosets(group: PermGroup, sub: PermGroup,
                  limit: int | None = None) -> DoubleCosetDecomposition:
    """Double cosets of sub in group, sorted by canonical representative."""
    reps = left_coset_reps(group, sub, limit)
    pos = {p._img: i for i, p in enumerate(reps)}
    sub_gens = [g._img for g in sub.generators]
    h_order = sub.order()
    visited: set[tuple[int, ...]] = set()
    out = []
    for start_p in reps:
        start = start_p._img
        if start in visited:
            continue
        orbit = [start]
        visited.add(start)
        head = 0
        while head < len(orbit):
            c = orbit[head]
            head += 1
            for s in sub_gens:
                nxt = sub.coset_min(_mul(s, c))
                if nxt not in visited:
                    visited.add(nxt)
                    orbit.append(nxt)
        out.append(DoubleCoset(rep=start_p, n_left=len(orbit),
                               size=len(orbit) * h_order,
                               left_indices=tuple(sorted(pos[c] for c in orbit))))
    assert sum(dc.size for dc in out) == group.order()
    return DoubleCosetDecomposition(group=group, sub=sub,
                                    left_reps=tuple(reps), cosets=tuple(out))


@dataclass(frozen=True)
class Stabilizer:
    """S(g): the elements of the ambient subgroup fixing the coset g*ambient."""

    g: Permutation
    group: PermGroup
    ambient: PermGroup


def stabilizer(g: Permutation, sub: PermGroup) -> Stabilizer:
    """The subgroup of elements x of sub with g^-1 x g again in sub."""
    if g.degree != sub.degree:
        raise ValueError("degree mismatch")
    members = sub.element_set()
    gi = _inv(g._img)
    kept = [x for x in sub.element_tuples() if _conj(gi, x) in members]
    return Stabilizer(g=g, group=PermGroup._from_element_tuples(sub.degree, kept),
                      ambient=sub)


# -- rewriting for a symmetric subgroup on the letters 1..l -----------------


def normal_form_with_multiplier(sigma: Permutation, l: int) -> tuple[Permutation, Permutation]:
    """Rewrite sigma by right factors from Sym{1..l} until no cycle holds two
    letters from 1..l; returns (form, h) with form == sigma * h.

    Each step multiplies by the transposition of the two least cohabiting
    letters, which splits their cycle; the number of cohabiting pairs drops,
    so the loop ends.
    """
    if not 1 <= l <= sigma.degree:
        raise ValueError("l out of range")
    g = sigma
    h = Permutation.identity(sigma.degree)
    while True:
        pair = None
        for cyc in g.cycles():
            small = sorted(p for p in cyc if p <= l)
            if len(small) >= 2:
                pair = (small[0], small[1])
                break
        if pair is None:
            return g, h
        t = Permutation.from_cycles([pair], sigma.degree)
        g = g * t
        h = h * t


def sym_normal_form(sigma: Permutation, l: int) -> Permutation:
    return normal_form_with_multiplier(sigma, l)[0]


def is_null_coset(sigma: Permutation, l: int) -> bool:
    """Whether the double coset of sigma under Sym{1..l} is a null coset.

    A double coset is null when its normal form is not an involution; on such
    cosets every degree-2 indicator vanishes.
    """
    form = normal_form_with_multiplier(sigma, l)[0]
    return not (form * form).is_identity()


def sym_census(l: int, n: int) -> tuple[int, int]:
    """(double coset count, null coset count) for Sym{1..l} inside Sym{1..n}."""
    dcs = double_cosets(sym(n), sym_embed(l, n))
    null = sum(1 for dc in dcs if is_null_coset(dc.rep, l))
    return len(dcs), null


def canonical_normal_form(sigma: Permutation, l: int) -> Permutation:
    """Normal form with the letters 1..l renamed by first appearance.

    Cycles of the normal form are rotated to start at their least letter
    above l and sorted by that letter; the small letters are then renamed
    1, 2, ... in reading order, unused ones filling the remaining slots in
    increasing order.  The renaming acts by conjugation, so the result stays
    inside the double coset of sigma.
    """
    form = normal_form_with_multiplier(sigma, l)[0]
    rotated = []
    for cyc in form.cycles():
        anchor = min(p for p in cyc if p > l)
        i = cyc.index(anchor)
        rotated.append(cyc[i:] + cyc[:i])
    rotated.sort(key=lambda c: c[0])
    rename: dict[int, int] = {}
    for cyc in rotated:
        for p in cyc:
            if p <= l and p not in rename:
                rename[p] = len(rename) + 1
    for p in range(1, l + 1):
        if p not in rename:
            rename[p] = len(rename) + 1
    images = [rename.get(p, p) for p in range(1, sigma.degree + 1)]
    h = Permutation(images)
    return h * form * h.inverse()


def normal_form_census(l: int, n: int) -> tuple[int, int]:
    """Census of Sym{1..l} double cosets in Sym{1..n} by distinct canonical
    normal forms over the whole group; an independent route to sym_census."""
    group = sym(n)
    forms: set[tuple[int, ...]] = set()
    for raw in group.element_tuples():
        forms.add(canonical_normal_form(Permutation._from_raw(raw), l)._img)
    null = sum(1 for f in forms
               if not (Permutation._from_raw(f) ** 2).is_identity())
    return len(forms), null
