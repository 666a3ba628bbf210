"""Quandle construction, validation, and the coset construction."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quandlekit import (
    AffineSpec,
    AxiomViolation,
    CayleyQuandle,
    NotAUnit,
    NotAutomorphism,
    NotCentralized,
    Permutation,
    affine_quandle,
    close_group,
    coset_quandle,
    dihedral_quandle,
    is_connected,
    is_fixed_point_free,
    is_latin,
    left_division,
    quandles_isomorphic,
    right_translation,
    trivial_quandle,
    units,
    validate_quandle,
)


def test_singleton_table_is_valid():
    q = validate_quandle([[0]])
    assert q.order == 1
    assert q.op(0, 0) == 0


def test_trivial_quandle_rows_constant():
    q = trivial_quandle(4)
    for x in range(4):
        for y in range(4):
            assert q.op(x, y) == x
    assert not is_latin(q)
    assert not is_connected(q)


def test_idempotence_violation_reports_witness():
    table = [[1, 0], [1, 0]]
    with pytest.raises(AxiomViolation) as exc:
        validate_quandle(table)
    assert exc.value.axiom == 1
    assert exc.value.witness == (0,)
    assert "idempotence" in str(exc.value)


def test_column_bijectivity_violation():
    # column 0 maps both 1 and 2 to the same element
    table = [[0, 0, 0], [1, 1, 1], [1, 2, 2]]
    with pytest.raises(AxiomViolation) as exc:
        validate_quandle(table)
    assert exc.value.axiom == 2
    assert exc.value.witness == (0,)


def test_self_distributivity_violation():
    # idempotent with bijective columns, but the column transpositions
    # (1 2) and (0 2) do not satisfy the conjugation identity
    table = [
        [0, 2, 0],
        [2, 1, 1],
        [1, 0, 2],
    ]
    with pytest.raises(AxiomViolation) as exc:
        validate_quandle(table)
    assert exc.value.axiom == 3
    assert exc.value.witness == (0, 1, 0)


def test_bad_shape_and_range_rejected():
    with pytest.raises(ValueError):
        validate_quandle([])
    with pytest.raises(ValueError):
        validate_quandle([[0, 1], [1]])
    with pytest.raises(ValueError):
        validate_quandle([[0, 2], [1, 1]])


def test_affine_quandle_matches_formula():
    q = affine_quandle(AffineSpec(13, 8))
    for x in range(13):
        for y in range(13):
            assert q.op(x, y) == (8 * x + (1 - 8) * y) % 13


def test_affine_spec_normalizes_multiplier():
    assert AffineSpec(5, 7).multiplier == 2
    assert AffineSpec(5, -1).multiplier == 4


def test_affine_nonunit_multiplier_rejected():
    with pytest.raises(NotAUnit):
        AffineSpec(6, 2)


def test_dihedral_is_affine_with_multiplier_minus_one():
    q = dihedral_quandle(5)
    r = affine_quandle(AffineSpec(5, 4))
    assert q.table == r.table


def test_affine_spec_multiplier_order():
    assert AffineSpec(13, 8).order_of_multiplier == 4
    assert AffineSpec(13, 9).order_of_multiplier == 3
    assert AffineSpec(21, 11).order_of_multiplier == 6


def test_affine_spec_connected_admissible():
    assert AffineSpec(13, 8).is_connected_admissible
    assert AffineSpec(21, 11).is_connected_admissible
    # 1 - 4 = -3 shares a factor with 9
    assert not AffineSpec(9, 4).is_connected_admissible
    assert not AffineSpec(7, 1).is_connected_admissible


def test_connected_iff_gcd_condition():
    for m in range(2, 22):
        for t in units(m):
            spec = AffineSpec(m, t)
            q = affine_quandle(spec)
            assert is_connected(q) == spec.is_connected_admissible, (m, t)


def test_right_translation_example():
    q = affine_quandle(AffineSpec(5, 2))
    r0 = right_translation(q, 0)
    assert r0.cycles() == ((1, 2, 4, 3),)


def test_right_translation_is_column():
    q = affine_quandle(AffineSpec(13, 8))
    for y in range(13):
        perm = right_translation(q, y)
        for x in range(13):
            assert perm(x) == q.op(x, y)


def test_left_division_round_trip():
    q = affine_quandle(AffineSpec(13, 9))
    for x in range(13):
        for y in range(13):
            assert left_division(q, q.op(x, y), y) == x
            assert q.op(left_division(q, x, y), y) == x


def test_latin_examples():
    assert is_latin(affine_quandle(AffineSpec(13, 8)))
    assert is_latin(affine_quandle(AffineSpec(5, 4)))
    assert not is_latin(trivial_quandle(3))


def test_fixed_point_free_matches_latin_for_affine():
    latin = affine_quandle(AffineSpec(13, 8))
    assert is_fixed_point_free(right_translation(latin, 0))
    loose = trivial_quandle(3)
    assert not is_fixed_point_free(right_translation(loose, 0))


def test_fixed_point_free_base_point():
    pinned = Permutation.from_cycles(4, [(1, 2, 3)])
    assert is_fixed_point_free(pinned, base_point=0)
    assert not is_fixed_point_free(pinned, base_point=1)


def test_coset_quandle_squaring_on_z5():
    # Z_5 with the doubling automorphism and trivial subgroup reproduces
    # the affine quandle with multiplier 2
    group = close_group([Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])])
    auto = {g: g * g for g in group.elements}
    q = coset_quandle(group, [], auto)
    assert q.order == 5
    assert is_connected(q)
    assert quandles_isomorphic(q, affine_quandle(AffineSpec(5, 2))) is not None


def test_coset_quandle_whole_group_is_singleton():
    gens = [Permutation.from_cycles(3, [(0, 1, 2)])]
    group = close_group(gens)
    auto = {g: g for g in group.elements}
    q = coset_quandle(group, gens, auto)
    assert q.order == 1


def test_coset_quandle_inversion_gives_dihedral():
    group = close_group([Permutation.from_cycles(3, [(0, 1, 2)])])
    auto = {g: g.inverse() for g in group.elements}
    q = coset_quandle(group, [], auto)
    assert q.order == 3
    assert quandles_isomorphic(q, dihedral_quandle(3)) is not None


def test_coset_quandle_rejects_non_homomorphism():
    a = Permutation.from_cycles(4, [(0, 1, 2, 3)])
    group = close_group([a])
    bad = {g: g for g in group.elements}
    b = a * a
    bad[a], bad[b] = bad[b], bad[a]
    with pytest.raises(NotAutomorphism):
        coset_quandle(group, [], bad)


def test_coset_quandle_rejects_partial_map():
    a = Permutation.from_cycles(3, [(0, 1, 2)])
    group = close_group([a])
    partial = {a: a}
    with pytest.raises(NotAutomorphism):
        coset_quandle(group, [], partial)


def test_coset_quandle_rejects_uncentralized_subgroup():
    # conjugation by a transposition moves the 3-cycles of S_3
    a = Permutation.from_cycles(3, [(0, 1, 2)])
    b = Permutation.from_cycles(3, [(0, 1)])
    group = close_group([a, b])
    auto = {g: b * g * b for g in group.elements}
    with pytest.raises(NotCentralized):
        coset_quandle(group, [a], auto)


def test_table_is_stored_as_tuples():
    q = CayleyQuandle([[0, 0], [1, 1]])
    assert isinstance(q.table, tuple)
    assert isinstance(q.table[0], tuple)
    assert q.table == affine_quandle(AffineSpec(2, 1)).table


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=2, max_value=30).flatmap(
        lambda m: st.sampled_from(sorted(units(m))).map(lambda t: (m, t))
    )
)
def test_affine_tables_always_validate(spec_pair):
    m, t = spec_pair
    q = affine_quandle(AffineSpec(m, t))
    validate_quandle(q.table)
    for x in range(m):
        assert q.op(x, x) == x


def test_order12_fixture_is_valid_quandle(order12):
    validate_quandle(order12.table)
    assert order12.order == 12
    assert is_connected(order12)
    assert not is_latin(order12)
