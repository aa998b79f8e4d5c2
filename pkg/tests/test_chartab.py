"""Character tables against hardcoded known tables and classical identities."""
from __future__ import annotations

from fractions import Fraction

import pytest

from fscat.chartab import (
    Character,
    character_table,
    conjugacy_classes,
    induce,
    inner_product,
    is_ambivalent,
    nu_classical,
)
from fscat.cyclo import Cyclotomic
from fscat.perm import Permutation, PermGroup, alt, cyclic, sym

q = Cyclotomic.from_rational
z = Cyclotomic.zeta


def _labels(table):
    """(class size, element order) labels in table column order."""
    cd = table.classes
    return [(cd.sizes[j], cd.rep_order(j)) for j in range(len(cd))]


def _rows_by_label(table):
    labels = _labels(table)
    assert len(set(labels)) == len(labels), "labels must identify classes"
    return {tuple(sorted(zip(labels, chi.values))): chi for chi in table.characters}


def _expected_row(spec: dict) -> tuple:
    return tuple(sorted((lab, v) for lab, v in spec.items()))


def test_s3_table_matches_known_values():
    tab = character_table(sym(3))
    rows = _rows_by_label(tab)
    e, three, two = (1, 1), (2, 3), (3, 2)
    expected = [
        {e: q(1), three: q(1), two: q(1)},
        {e: q(1), three: q(1), two: q(-1)},
        {e: q(2), three: q(-1), two: q(0)},
    ]
    assert set(rows) == {_expected_row(s) for s in expected}


def test_s4_table_matches_known_values():
    tab = character_table(sym(4))
    rows = _rows_by_label(tab)
    e, dbl, swap, four, three = (1, 1), (3, 2), (6, 2), (6, 4), (8, 3)
    expected = [
        {e: q(1), dbl: q(1), swap: q(1), four: q(1), three: q(1)},
        {e: q(1), dbl: q(1), swap: q(-1), four: q(-1), three: q(1)},
        {e: q(2), dbl: q(2), swap: q(0), four: q(0), three: q(-1)},
        {e: q(3), dbl: q(-1), swap: q(1), four: q(-1), three: q(0)},
        {e: q(3), dbl: q(-1), swap: q(-1), four: q(1), three: q(0)},
    ]
    assert set(rows) == {_expected_row(s) for s in expected}
    assert [chi.degree for chi in tab.characters] == [1, 1, 2, 3, 3]


def test_a4_table_shape():
    tab = character_table(alt(4))
    degrees = [chi.degree for chi in tab.characters]
    assert degrees == [1, 1, 1, 3]
    linear = [chi for chi in tab.characters if chi.degree == 1]
    triv = [chi for chi in linear if all(v == 1 for v in chi.values)]
    assert len(triv) == 1
    omega_rows = [chi for chi in linear if chi not in triv]
    assert omega_rows[0].conj() == omega_rows[1]
    flat = [v for chi in omega_rows for v in chi.values]
    assert z(3) in flat and z(3, 2) in flat
    cube = character_table(alt(4)).characters[3]
    assert cube.values[0] == 3 and sum(1 for v in cube.values if v == 0) == 2


def test_cyclic_tables_are_root_of_unity_rows():
    for n in (2, 3, 4, 6, 12):
        grp = cyclic(n)
        tab = character_table(grp)
        cd = tab.classes
        gen = grp.generators[0]
        # column t corresponds to some power of the generator
        exps = []
        for rep in cd.reps:
            t = next(i for i in range(n) if gen ** i == rep)
            exps.append(t)
        expected = {tuple(z(n, k * t) for t in exps) for k in range(n)}
        assert {chi.values for chi in tab.characters} == expected


def test_klein_four_group():
    grp = PermGroup(4, [Permutation.from_text("(1,2)(3,4)"),
                       Permutation.from_text("(1,3)(2,4)")])
    tab = character_table(grp)
    assert [chi.degree for chi in tab.characters] == [1, 1, 1, 1]
    for chi in tab.characters:
        assert all(v == 1 or v == -1 for v in chi.values)
        assert nu_classical(chi) == 1


def test_quaternion_regular_representation_has_negative_indicator():
    a = Permutation.from_text("(1,3,2,4)(5,7,6,8)")
    b = Permutation.from_text("(1,5,2,6)(3,8,4,7)")
    q8 = PermGroup(8, [a, b])
    assert q8.order() == 8
    tab = character_table(q8)
    indicators = sorted(str(nu_classical(chi)) for chi in tab.characters)
    assert indicators == ["-1", "1", "1", "1", "1"]
    two_dim = [chi for chi in tab.characters if chi.degree == 2]
    assert len(two_dim) == 1 and nu_classical(two_dim[0]) == -1


def test_symmetric_group_characters_are_rational():
    tab = character_table(sym(5))
    for chi in tab.characters:
        assert all(v.is_rational() for v in chi.values)
        assert chi.conj() == chi
        assert nu_classical(chi) == 1


def test_second_orthogonality_columns():
    tab = character_table(sym(5))
    cd = tab.classes
    n = cd.group.order()
    for j in range(len(cd)):
        s = sum(chi.values[j] * chi.values[j].conj() for chi in tab.characters)
        assert s == Fraction(n, cd.sizes[j])


def test_ambivalence():
    expect = {1: True, 2: True, 3: False, 4: False, 5: True, 6: True,
              7: False, 8: False}
    for n, want in expect.items():
        assert is_ambivalent(alt(n)) == want, n
    for n in range(1, 7):
        assert is_ambivalent(sym(n))
    assert not is_ambivalent(cyclic(5))


def test_frobenius_reciprocity_at_index_two():
    for small, big in [(alt(3), sym(3)), (alt(4), sym(4))]:
        small_tab = character_table(small)
        big_tab = character_table(big)
        for chi in small_tab.characters:
            ind = induce(chi, big)
            for psi in big_tab.characters:
                left = inner_product(ind, psi)
                right = inner_product(chi, psi.restrict(small))
                assert left == right


def test_induction_from_a3_gives_two_dimensional_character():
    a3 = alt(3)
    s3 = sym(3)
    omega_chi = next(chi for chi in character_table(a3).characters
                     if not all(v.is_rational() for v in chi.values))
    ind = induce(omega_chi, s3)
    std = next(chi for chi in character_table(s3).characters if chi.degree == 2)
    assert ind == std


def test_induce_rejects_larger_index():
    chi = character_table(alt(3)).characters[0]
    with pytest.raises(ValueError):
        induce(chi, sym(4))


def test_conjugated_by_permutes_omega_characters():
    tab = character_table(alt(4))
    omega_rows = [chi for chi in tab.characters
                  if chi.degree == 1 and not all(v.is_rational() for v in chi.values)]
    u = Permutation.from_text("(1,2)", degree=4)
    assert omega_rows[0].conjugated_by(u) == omega_rows[1]
    triv = tab.characters[0]
    assert triv.conjugated_by(u) == triv


def test_conjugated_by_requires_normalizing_element():
    from fscat.perm import sym_embed
    grp = sym_embed(3, 5)
    chi = character_table(grp).characters[0]
    with pytest.raises(ValueError):
        chi.conjugated_by(Permutation.from_text("(3,4)", degree=5))


def test_restriction_of_standard_character():
    s4 = sym(4)
    a4 = alt(4)
    std = next(chi for chi in character_table(s4).characters if chi.degree == 3)
    res = std.restrict(a4)
    assert inner_product(res, res) == 1
    assert res in character_table(a4).characters


def test_indicator_of_cyclic_characters_detects_order():
    n = 6
    tab = character_table(cyclic(n))
    gen = tab.classes.group.generators[0]
    for chi in tab.characters:
        k = next(t for t in range(n) if chi.value(gen) == z(n, t))
        for m in range(1, 2 * n + 1):
            want = 1 if (k * m) % n == 0 else 0
            assert nu_classical(chi, m) == want


def test_power_and_inverse_class_maps():
    cd = conjugacy_classes(sym(4))
    four = next(j for j in range(len(cd)) if cd.rep_order(j) == 4)
    dbl = next(j for j in range(len(cd))
               if cd.rep_order(j) == 2 and cd.sizes[j] == 3)
    assert cd.power_class(four, 2) == dbl
    assert all(cd.inverse_class(j) == j for j in range(len(cd)))


def test_table_is_seed_independent():
    # fresh group objects so the per-group cache cannot short-circuit
    ref = character_table(sym(4), seed=1)
    other = character_table(sym(4), seed=99)
    assert [chi.values for chi in ref.characters] == \
        [chi.values for chi in other.characters]


def test_dump_format():
    text = character_table(alt(4)).dump()
    assert "group of order 12 with 4 classes" in text
    assert "chi0:" in text and "E(3)" in text
