"""Permutation arithmetic and group membership tests."""
from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fscat.perm import (
    BoundExceeded,
    PermGroup,
    Permutation,
    alt,
    alt_embed,
    compose,
    conjugate,
    cyclic,
    element_order,
    embedded,
    sym,
    sym_embed,
    sym_prime,
    tilde_sym,
    trivial,
)

P = Permutation.from_text


def test_compose_applies_right_factor_first():
    a = P("(1,2)", 3)
    b = P("(2,3)", 3)
    assert a * b == P("(1,2,3)")
    assert b * a == P("(1,3,2)")


def test_identity_and_inverse():
    p = P("(1,4,2,5)", 6)
    assert (p * p.inverse()).is_identity()
    assert p.inverse() * p == Permutation.identity(6)
    assert (p ** 4).is_identity()
    assert p ** -1 == p.inverse()


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        P("(1,2)", 3) * P("(1,2)", 4)
    with pytest.raises(ValueError):
        conjugate(P("(1,2)", 3), P("(1,2)", 4))


def test_images_are_one_based():
    p = P("(1,2,3)", 4)
    assert p.images == (2, 3, 1, 4)
    assert p.apply(3) == 1
    assert Permutation(p.images) == p


def test_cycle_text_round_trip():
    for text in ["(1,2)(3,4)", "(1,2,7,8)(3,11,9,5)(4,12,10,6)", "()"]:
        p = P(text)
        assert P(p.to_text(), p.degree) == p
    q = P("(1,2) deg=6")
    assert q.degree == 6
    assert q.to_text(with_degree=True) == "(1,2) deg=6"


def test_parse_errors():
    with pytest.raises(ValueError):
        P("(1,2)(2,3)")  # repeated point
    with pytest.raises(ValueError):
        P("(1 2)")
    with pytest.raises(ValueError):
        P("(1,5)", 3)
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])


def test_sign_and_order():
    assert P("(1,2)", 5).sign == -1
    assert P("(1,2,3)", 5).sign == 1
    assert P("(1,2)(3,4,5)").sign == -1
    assert element_order(P("(1,2)(3,4,5)")) == 6
    assert element_order(Permutation.identity(4)) == 1


def test_conjugate_example():
    g = P("(1,2)", 3)
    x = P("(1,3)", 3)
    assert conjugate(g, x) == P("(2,3)")


def test_twelve_cycle_conjugation_anchor():
    # g has order 4, g^2 equals the sixth power of the 12-cycle, and the
    # conjugate of t by g^-1 is a specific 12-cycle.
    t = Permutation.from_cycles([range(1, 13)], 12)
    g = P("(1,2,7,8)(3,11,9,5)(4,12,10,6)")
    assert g.degree == 12 and g.order == 4
    assert g * g == P("(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)")
    assert g * g == t ** 6
    assert conjugate(g.inverse(), t) == P("(1,5,6,9,10,2,7,11,12,3,4,8)")


def test_min_moved():
    assert P("(3,5)", 6).min_moved() == 3
    assert Permutation.identity(3).min_moved() is None


# ---------------------------------------------------------------------------
# groups

def test_family_orders():
    assert sym(1).order() == 1
    assert sym(5).order() == 120
    assert alt(5).order() == 60
    assert cyclic(12).order() == 12
    assert sym_embed(3, 6).order() == 6
    assert alt_embed(4, 7).order() == 12
    assert sym_prime(2, 6).order() == 24
    for n in range(4, 10):
        assert tilde_sym(n).order() == math.factorial(n - 2)


def test_big_group_order_without_enumeration():
    assert sym(12).order() == math.factorial(12)
    assert alt(9).order() == math.factorial(9) // 2


def test_membership():
    s5, a5 = sym(5), alt(5)
    assert P("(1,2)", 5) in s5
    assert P("(1,2)", 5) not in a5
    assert P("(1,2,3)", 5) in a5
    assert P("(1,2)", 4) not in s5  # degree mismatch
    t = Permutation.from_cycles([range(1, 13)], 12)
    assert t in cyclic(12)
    assert conjugate(P("(1,2,7,8)(3,11,9,5)(4,12,10,6)").inverse(), t) not in cyclic(12)


def test_tilde_sym_shape():
    h = tilde_sym(7)
    assert h.order() == 120
    assert h.is_subgroup_of(alt(7))
    assert P("(1,2)(3,4)", 7) in h
    assert P("(3,4)", 7) not in h
    assert P("(1,2)", 7) not in h
    # odd permutations of {3..n} enter only together with the front swap
    assert P("(1,2)(4,5,6,7)", 7) in h
    assert P("(4,5,6,7)", 7) not in h


def test_tilde_sym_at_larger_degree():
    h = tilde_sym(10, degree=12)
    assert h.degree == 12
    assert h.order() == math.factorial(8)
    assert h.is_subgroup_of(embedded(sym(10), 12))
    assert h.is_subgroup_of(alt(12))


def test_elements_enumeration():
    g = sym(4)
    elems = g.elements()
    assert len(elems) == 24 == g.order()
    assert len(set(elems)) == 24
    assert all(e in g for e in elems)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded) as exc:
        sym(12).elements(limit=10**6)
    assert "enumeration bound" in str(exc.value)
    assert "1000000" in str(exc.value)


def test_group_from_element_tuples():
    elems = alt(4).element_tuples()
    rebuilt = PermGroup._from_element_tuples(4, elems)
    assert rebuilt.order() == 12
    assert sorted(rebuilt.element_tuples()) == sorted(elems)
    with pytest.raises(ValueError):
        PermGroup._from_element_tuples(3, [(1, 0, 2)])  # not closed


def test_subgroup_checks():
    assert alt(6).is_subgroup_of(sym(6))
    assert not sym(6).is_subgroup_of(alt(6))
    assert sym_prime(2, 6).is_subgroup_of(sym(6))
    assert trivial(5).is_subgroup_of(alt(5))


def test_coset_min_matches_brute_force():
    h = sym_embed(3, 5)
    hset = h.element_tuples()
    for y in [P("(1,4)", 5), P("(2,5,3)", 5), P("(1,5)(2,4)", 5)]:
        raw = y._img
        expect = min((tuple(raw[i] for i in t) for t in hset))
        assert h.coset_min(raw) == expect


def test_embedded_padding():
    g = embedded(sym(3), 6)
    assert g.degree == 6
    assert g.order() == 6
    assert P("(1,2)", 6) in g
    assert P("(5,6)", 6) not in g


# ---------------------------------------------------------------------------
# properties

@st.composite
def perms(draw, max_degree=8, degree=None):
    n = degree if degree is not None else draw(st.integers(2, max_degree))
    return Permutation._from_raw(tuple(draw(st.permutations(range(n)))))


@given(perms(degree=6), perms(degree=6))
def test_sign_is_multiplicative(a, b):
    assert (a * b).sign == a.sign * b.sign


@given(perms(degree=6), perms(degree=6), perms(degree=6))
def test_conjugation_distributes_over_composition(g, x, y):
    assert conjugate(g, x * y) == conjugate(g, x) * conjugate(g, y)


@given(perms(max_degree=7))
def test_order_annihilates(p):
    assert (p ** p.order).is_identity()
    assert p.order == element_order(p)


@given(st.lists(perms(degree=6), min_size=0, max_size=2))
@settings(deadline=None, max_examples=40)
def test_generated_group_closure(gens):
    g = PermGroup(6, gens)
    elems = g.elements()
    assert len(elems) == g.order()
    assert all(e in g for e in elems)
    assert all(a * b in g for a in elems[:6] for b in elems[:6])


@given(perms(degree=5), perms(degree=5))
def test_coset_min_is_coset_invariant(y, h):
    grp = alt(5)
    if h not in grp:
        h = Permutation.identity(5)
    assert grp.coset_min(y._img) == grp.coset_min((y * h)._img)
