"""Character theory of the inner groups of prime affine quandles."""

from fractions import Fraction

import numpy as np
import pytest

from quandlekit import (
    AffineSpec,
    BadParameters,
    ClassFunction,
    GroupMismatch,
    NotTransitive,
    Permutation,
    PermutationGroup,
    affine_quandle,
    burnside_rank,
    class_label,
    close_group,
    conjugacy_classes,
    conjugate_orbit,
    decompose_prime_affine,
    inertia_group_size,
    induced_matrices,
    inner_group,
    inner_product,
    irreducible_class_functions,
    metacyclic_irreducibles,
    multiplicative_order,
    permutation_character,
    presentation,
    trivial_character,
    units,
)
from conftest import connected_affine_specs

PRIMES_TO_23 = [3, 5, 7, 11, 13, 17, 19, 23]


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _unit_of_order(p, n):
    for u in range(2, p):
        if multiplicative_order(u, p) == n:
            return u
    raise AssertionError(f"no unit of order {n} mod {p}")


def test_class_function_requires_one_value_per_class():
    g = inner_group(affine_quandle(AffineSpec(5, 2)))
    classes = conjugacy_classes(g)
    with pytest.raises(ValueError):
        ClassFunction(classes=classes, values=(1, 2), exact=True)


def test_permutation_character_pattern():
    spec = AffineSpec(13, 8)
    group = inner_group(affine_quandle(spec))
    classes = conjugacy_classes(group)
    pres = presentation(spec)
    chi = permutation_character(group, classes)
    assert chi.exact
    for rep, value in zip(classes.representatives, chi.values):
        label = class_label(pres, rep)
        if label == ("identity",):
            assert value == 13
        elif label[0] == "layer":
            assert value == 1
        else:
            assert value == 0


def test_trivial_appears_once_in_transitive_character():
    group = inner_group(affine_quandle(AffineSpec(13, 8)))
    classes = conjugacy_classes(group)
    chi = permutation_character(group, classes)
    triv = trivial_character(classes)
    assert inner_product(chi, triv) == Fraction(1)


def test_inner_product_exact_path():
    group = inner_group(affine_quandle(AffineSpec(13, 8)))
    chi = permutation_character(group)
    norm = inner_product(chi, chi)
    assert isinstance(norm, Fraction)
    assert norm == Fraction(4)


def test_inner_product_rejects_mismatched_groups():
    a = permutation_character(inner_group(affine_quandle(AffineSpec(5, 2))))
    b = permutation_character(inner_group(affine_quandle(AffineSpec(7, 3))))
    with pytest.raises(GroupMismatch):
        inner_product(a, b)


def test_burnside_rank_examples():
    assert burnside_rank(inner_group(affine_quandle(AffineSpec(13, 8)))) == 4
    assert burnside_rank(inner_group(affine_quandle(AffineSpec(13, 9)))) == 5
    s3 = close_group(
        [Permutation.from_cycles(3, [(0, 1, 2)]), Permutation.from_cycles(3, [(0, 1)])]
    )
    assert burnside_rank(s3) == 2


def test_burnside_rank_non_transitive_diagnostic():
    frozen = PermutationGroup.from_elements([Permutation.identity(2)])
    assert burnside_rank(frozen) == 4
    with pytest.raises(NotTransitive):
        burnside_rank(frozen, strict=True)


def test_conjugate_orbit_examples():
    assert conjugate_orbit(13, 5, 1) == frozenset({1, 5, 8, 12})
    assert conjugate_orbit(13, 8, 1) == frozenset({1, 5, 8, 12})
    assert conjugate_orbit(13, 5, 2) == frozenset({2, 3, 10, 11})
    assert conjugate_orbit(7, 2, 3) == frozenset({3, 6, 5})


def test_inertia_group_size():
    assert inertia_group_size(5, 4, 2, 0) == 20
    assert inertia_group_size(5, 4, 2, 3) == 5
    assert inertia_group_size(13, 4, 5, 1) == 13


def test_family_structure_13():
    fam = metacyclic_irreducibles(13, 4, 5)
    assert fam.induced_indices == (1, 2, 4)
    assert fam.irreducible_labels() == (
        "triv", "lin:1", "lin:2", "lin:3", "ind:1", "ind:2", "ind:4",
    )
    degrees = [fam.degree(irr) for irr in fam.irreducible_labels()]
    assert sum(d * d for d in degrees) == 52
    assert len(fam.labels()) == 7
    assert sum(fam.class_size(lab) for lab in fam.labels()) == 52


def test_family_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        metacyclic_irreducibles(12, 2, 5)
    with pytest.raises(BadParameters):
        metacyclic_irreducibles(13, 4, 3)  # 3 has order 3 mod 13
    with pytest.raises(BadParameters):
        induced_matrices(13, 4, 5, 0)


def _orthogonality_defect(fam):
    order = fam.prime * fam.automorphism_order
    labels = fam.labels()
    worst = 0.0
    irrs = fam.irreducible_labels()
    for a in irrs:
        for b in irrs:
            total = sum(
                fam.class_size(lab) * fam.value(a, lab) * fam.value(b, lab).conjugate()
                for lab in labels
            )
            expected = order if a == b else 0.0
            worst = max(worst, abs(total - expected))
    return worst


def test_orthogonality_all_small_primes():
    for p in PRIMES_TO_23:
        for n in _divisors(p - 1):
            if n == 1:
                continue
            fam = metacyclic_irreducibles(p, n, _unit_of_order(p, n))
            assert _orthogonality_defect(fam) < 1e-8, (p, n)


def test_orthogonality_spot_check_47():
    fam = metacyclic_irreducibles(47, 23, _unit_of_order(47, 23))
    assert _orthogonality_defect(fam) < 1e-7


def test_induced_matrices_satisfy_presentation():
    p, n, u, k = 13, 4, 5, 1
    diag, shift = induced_matrices(p, n, u, k)
    t = pow(u, -1, p)
    left = shift @ diag @ np.linalg.inv(shift)
    right = np.linalg.matrix_power(diag, t)
    assert np.allclose(left, right, atol=1e-10)
    assert np.allclose(np.linalg.matrix_power(shift, n), np.eye(n), atol=1e-10)
    assert np.allclose(np.linalg.matrix_power(diag, p), np.eye(n), atol=1e-10)


def test_induced_traces_match_character_values():
    p, n, u = 13, 4, 5
    fam = metacyclic_irreducibles(p, n, u)
    for k in fam.induced_indices:
        diag, shift = induced_matrices(p, n, u, k)
        for j in range(1, p):
            tr = np.trace(np.linalg.matrix_power(diag, j))
            assert abs(tr - fam.value(f"ind:{k}", ("shift", j))) < 1e-10
        for i in range(1, n):
            tr = np.trace(np.linalg.matrix_power(shift, i))
            assert abs(tr - fam.value(f"ind:{k}", ("layer", i))) < 1e-10


def test_class_label_examples():
    spec = AffineSpec(13, 8)
    pres = presentation(spec)
    assert class_label(pres, Permutation.identity(13)) == ("identity",)
    assert class_label(pres, pres.translation) == ("shift", 1)
    assert class_label(pres, pres.scaling) == ("layer", 1)
    assert class_label(pres, pres.translation ** 2) == ("shift", 2)
    assert class_label(pres, pres.translation ** 5) == ("shift", 1)


def test_class_label_is_constant_on_classes():
    spec = AffineSpec(13, 9)
    pres = presentation(spec)
    group = inner_group(affine_quandle(spec))
    classes = conjugacy_classes(group)
    for cls in classes.classes:
        labels = {class_label(pres, g) for g in cls}
        assert len(labels) == 1, labels


def test_irreducible_class_functions_twist_guard():
    spec = AffineSpec(13, 8)
    pres = presentation(spec)
    classes = conjugacy_classes(inner_group(affine_quandle(spec)))
    wrong = metacyclic_irreducibles(13, 4, 8)  # twist must be 8^-1 = 5
    with pytest.raises(GroupMismatch):
        irreducible_class_functions(wrong, pres, classes)


def test_decompose_13_8():
    result = decompose_prime_affine(AffineSpec(13, 8))
    assert result.nonzero() == {"triv": 1, "ind:1": 1, "ind:2": 1, "ind:4": 1}
    assert result.rank == 4
    assert result.is_multiplicity_free


def test_decompose_5_2():
    result = decompose_prime_affine(AffineSpec(5, 2))
    assert result.nonzero() == {"triv": 1, "ind:1": 1}
    assert result.rank == 2


def test_decompose_5_4():
    result = decompose_prime_affine(AffineSpec(5, 4))
    assert result.nonzero() == {"triv": 1, "ind:1": 1, "ind:2": 1}
    assert result.rank == 3


def test_decompose_rejects_bad_specs():
    with pytest.raises(BadParameters):
        decompose_prime_affine(AffineSpec(21, 11))
    with pytest.raises(BadParameters):
        decompose_prime_affine(AffineSpec(7, 1))


def test_decomposition_matches_burnside_rank():
    for spec in connected_affine_specs(23, prime_only=True):
        result = decompose_prime_affine(spec)
        assert result.is_multiplicity_free
        group = inner_group(affine_quandle(spec))
        assert result.rank == burnside_rank(group), spec
        n = spec.order_of_multiplier
        assert result.rank == 1 + (spec.modulus - 1) // n


def test_linear_characters_absent_except_trivial():
    for spec in [AffineSpec(13, 8), AffineSpec(11, 4)]:
        result = decompose_prime_affine(spec)
        for irr, mult in result.multiplicities.items():
            if irr.startswith("lin:"):
                assert mult == 0, (spec, irr)
