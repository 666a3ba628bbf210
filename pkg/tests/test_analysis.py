"""The analysis pipeline, isomorphism search, and affine recognition."""

import json

from quandlekit import (
    AffineSpec,
    affine_quandle,
    analyze,
    dihedral_quandle,
    quandles_isomorphic,
    recognize_affine,
    trivial_quandle,
)


def _relabel(q, sigma):
    """Transport the table along a permutation of labels."""
    n = q.order
    inverse = [0] * n
    for x, y in enumerate(sigma):
        inverse[y] = x
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            table[sigma[x]][sigma[y]] = sigma[q.op(x, y)]
    from quandlekit import validate_quandle

    return validate_quandle(table)


def test_isomorphism_finds_identity():
    q = affine_quandle(AffineSpec(13, 8))
    sigma = quandles_isomorphic(q, q)
    assert sigma is not None


def test_isomorphism_transport_round_trip():
    q = affine_quandle(AffineSpec(7, 3))
    relabeled = _relabel(q, (3, 5, 0, 6, 1, 4, 2))
    sigma = quandles_isomorphic(q, relabeled)
    assert sigma is not None
    for x in range(7):
        for y in range(7):
            assert sigma[q.op(x, y)] == relabeled.op(sigma[x], sigma[y])


def test_multiplier_is_an_isomorphism_invariant():
    # even the inverse multiplier gives a non-isomorphic quandle
    a = affine_quandle(AffineSpec(5, 2))
    b = affine_quandle(AffineSpec(5, 3))
    c = affine_quandle(AffineSpec(5, 4))
    assert quandles_isomorphic(a, b) is None
    assert quandles_isomorphic(a, c) is None
    assert quandles_isomorphic(a, _relabel(a, (4, 2, 0, 1, 3))) is not None


def test_non_isomorphic_same_order():
    assert quandles_isomorphic(trivial_quandle(3), dihedral_quandle(3)) is None


def test_order_mismatch():
    assert quandles_isomorphic(trivial_quandle(2), trivial_quandle(3)) is None


def test_recognize_affine_examples():
    assert recognize_affine(dihedral_quandle(3)) == AffineSpec(3, 2)
    assert recognize_affine(trivial_quandle(4)) == AffineSpec(4, 1)
    q = _relabel(affine_quandle(AffineSpec(7, 5)), (6, 0, 2, 5, 1, 3, 4))
    assert recognize_affine(q) == AffineSpec(7, 5)


def test_recognize_affine_respects_cap(order12):
    assert recognize_affine(order12) is None
    q = affine_quandle(AffineSpec(17, 2))
    assert recognize_affine(q) is None  # above the default cap
    assert recognize_affine(q, cap=17) == AffineSpec(17, 2)


def test_analyze_prime_affine_report():
    spec = AffineSpec(13, 8)
    report = analyze(affine_quandle(spec), spec=spec, source="affine(13,8)")
    assert report.order == 13
    assert report.connected and report.latin
    assert report.inner_order == 52
    assert report.stabilizer_order == 4
    assert report.rank == 4
    assert report.translation_cycle_type == (1, 4, 4, 4)
    assert report.translation_cycles_uniform
    assert report.tensor_class_count == 4
    assert report.tau_class_count == 4
    assert report.multiplicity_free is True
    assert report.commutation_witness is None
    assert report.gelfand_pair is True
    assert report.affine_status == "given"
    assert report.affine_modulus == 13
    assert report.decomposition == {"ind:1": 1, "ind:2": 1, "ind:4": 1, "triv": 1}


def test_analyze_recognizes_small_affine():
    report = analyze(dihedral_quandle(3))
    assert report.affine_status == "match"
    assert report.affine_modulus == 3
    assert report.affine_multiplier == 2
    assert report.decomposition == {"ind:1": 1, "triv": 1}


def test_analyze_order12(order12):
    report = analyze(order12, source="bundled")
    assert report.order == 12
    assert report.connected
    assert not report.latin
    assert report.inner_order == 24
    assert report.stabilizer_order == 2
    assert report.rank == 7
    assert report.tensor_class_count == 7
    assert report.tau_class_count == 6
    # every translation is a product of five 2-cycles with two fixed points
    assert report.translation_cycle_type == (1, 1, 2, 2, 2, 2, 2)
    assert report.translation_cycles_uniform
    assert report.multiplicity_free is False
    assert report.commutation_witness is not None
    assert report.gelfand_pair is False
    assert report.affine_status == "match" or report.affine_status == "none"
    assert report.affine_status == "none"
    assert report.decomposition is None


def test_analyze_disconnected_skips_module_questions():
    report = analyze(trivial_quandle(3))
    assert report.connected is False
    assert report.multiplicity_free is None
    assert report.gelfand_pair is None
    assert report.inner_order == 1
    assert report.rank == 9
    assert report.affine_status == "match"
    assert report.affine_multiplier == 1
    assert report.decomposition is None


def test_analyze_composite_affine():
    spec = AffineSpec(21, 11)
    report = analyze(affine_quandle(spec), spec=spec)
    assert report.inner_order == 126
    assert report.translation_cycle_type == (1, 2, 3, 3, 6, 6)
    assert not report.translation_cycles_uniform
    assert report.multiplicity_free is True
    assert report.gelfand_pair is True
    assert report.decomposition is None  # composite modulus


def test_analyze_above_cap_reports_not_checked():
    q = affine_quandle(AffineSpec(17, 2))
    report = analyze(q)
    assert report.affine_status == "not-checked"
    assert report.affine_modulus is None


def test_report_dict_is_json_stable():
    spec = AffineSpec(13, 9)
    report = analyze(affine_quandle(spec), spec=spec)
    first = json.dumps(report.to_dict(), sort_keys=True)
    report_again = analyze(affine_quandle(spec), spec=spec)
    second = json.dumps(report_again.to_dict(), sort_keys=True)
    assert first == second
    payload = json.loads(first)
    assert payload["schema"] == 1
    assert payload["tensor_representatives"] == [[0, 0], [0, 1], [0, 2], [0, 4], [0, 7]]


def test_include_flags():
    spec = AffineSpec(13, 8)
    report = analyze(
        affine_quandle(spec), spec=spec, include_gelfand=False,
        include_decomposition=False,
    )
    assert report.gelfand_pair is None
    assert report.decomposition is None
    assert report.multiplicity_free is True
