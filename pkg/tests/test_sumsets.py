"""Point-set construction, XOR representation counts, and s-sum-set verdicts."""

from __future__ import annotations

import pytest

from tracecodes.analysis import closed_form_distribution, generator_columns
from tracecodes.codes import TooLargeError, enumerate_defining_set, generator_matrix
from tracecodes.field import GF2m
from tracecodes.sumsets import (
    OmegaSet,
    build_omega,
    check_sum_set,
    representation_counts,
    representation_counts_by_convolution,
    representation_counts_naive,
    symmetric_three_weight,
    walsh_hadamard,
    xor_convolve,
)


def hand_set(dim: int, vectors, include_zero: bool = False) -> OmegaSet:
    return OmegaSet(
        ambient_dim=dim,
        vectors=frozenset(vectors),
        include_zero=include_zero,
        family=0,
        m=0,
        variant="external",
    )


def test_omega_set_validation():
    with pytest.raises(ValueError):
        hand_set(0, ())
    with pytest.raises(TooLargeError):
        hand_set(21, ())
    with pytest.raises(ValueError):
        hand_set(2, (0,))  # zero belongs in the flag, not the vector set
    with pytest.raises(ValueError):
        hand_set(2, (4,))
    omega = hand_set(2, (1, 2), include_zero=False)
    assert omega.size == 2
    assert omega.with_zero(True).size == 3
    assert omega.with_zero(False) is omega


def test_hand_case_all_nonzero_vectors_of_dim2():
    omega = hand_set(2, (1, 2, 3))
    counts = representation_counts(omega, 3)
    assert counts == [6, 7, 7, 7]
    report = check_sum_set(omega, 3)
    assert report.is_sum_set
    assert report.sigma_members == 7
    assert report.sigma_outside == 7  # empty outside class inherits
    assert report.count_at_zero == 6
    assert report.witness is None


def test_counts_s1_is_indicator():
    omega = hand_set(3, (1, 4, 6), include_zero=True)
    counts = representation_counts(omega, 1)
    assert counts == [1, 1, 0, 0, 1, 0, 1, 0]


def test_counts_total_is_size_power_s():
    omega = hand_set(3, (1, 2, 4, 7))
    for s in (1, 2, 3, 4, 5):
        assert sum(representation_counts(omega, s)) == omega.size**s


def test_counts_reject_bad_s():
    omega = hand_set(2, (1,))
    with pytest.raises(ValueError):
        representation_counts(omega, 0)
    with pytest.raises(ValueError):
        representation_counts_naive(omega, 0)
    with pytest.raises(ValueError):
        representation_counts_by_convolution(omega, 0)


def test_walsh_hadamard_requires_power_of_two():
    with pytest.raises(ValueError):
        walsh_hadamard([1, 2, 3])
    with pytest.raises(ValueError):
        walsh_hadamard([])


def test_walsh_hadamard_self_inverse():
    values = [3, -1, 4, 1, -5, 9, 2, 6]
    twice = walsh_hadamard(walsh_hadamard(values))
    assert twice == [v * 8 for v in values]


def test_transform_counts_match_naive_oracle():
    cases = [
        hand_set(3, (1, 2, 4, 7)),
        hand_set(3, (3, 5), include_zero=True),
        hand_set(4, (1, 2, 3, 8, 12)),
    ]
    ctx = GF2m(2)
    cases.append(build_omega(ctx, 1, "code-column"))
    cases.append(build_omega(ctx, 1, "paper-column"))
    for omega in cases:
        for s in (1, 2, 3, 5):
            assert representation_counts(omega, s) == representation_counts_naive(omega, s)


def test_transform_counts_match_convolution_oracle():
    for variant in ("code-column", "paper-column"):
        omega = build_omega(GF2m(3), 1, variant)
        for s in (3, 5):
            fast = representation_counts(omega, s)
            assert fast == representation_counts_by_convolution(omega, s)


def test_xor_convolve_composes():
    omega = build_omega(GF2m(2), 1, "code-column")
    c2 = representation_counts(omega, 2)
    c3 = representation_counts(omega, 3)
    assert xor_convolve(c2, c3) == representation_counts(omega, 5)
    with pytest.raises(ValueError):
        xor_convolve([1, 2], [1, 2, 3, 4])


def test_build_omega_family1_m2_sizes():
    ctx = GF2m(2)
    code_set = build_omega(ctx, 1, "code-column")
    assert code_set.ambient_dim == 4
    assert len(code_set.vectors) == 8
    assert not code_set.include_zero
    paper_set = build_omega(ctx, 1, "paper-column")
    assert paper_set.ambient_dim == 4
    assert len(paper_set.vectors) == 5
    assert paper_set.include_zero
    assert paper_set.size == 6


def test_build_omega_code_columns_match_generator():
    for family, m in ((1, 2), (1, 3), (2, 3)):
        ctx = GF2m(m)
        omega = build_omega(ctx, family, "code-column")
        code = generator_matrix(ctx, enumerate_defining_set(ctx, family))
        assert omega.vectors == frozenset(generator_columns(code))
        assert not omega.include_zero
        assert len(omega.vectors) == code.n


def test_build_omega_family2_m3_dims():
    ctx = GF2m(3)
    assert build_omega(ctx, 2, "code-column").ambient_dim == 6
    assert build_omega(ctx, 2, "paper-column").ambient_dim == 9


def test_build_omega_rejections():
    ctx = GF2m(3)
    with pytest.raises(ValueError):
        build_omega(ctx, 3, "code-column")
    with pytest.raises(ValueError):
        build_omega(GF2m(4), 2, "code-column")
    with pytest.raises(ValueError):
        build_omega(ctx, 1, "columns")


def test_check_sum_set_rejects_even_or_unit_s():
    omega = hand_set(2, (1, 2, 3))
    for s in (1, 2, 4):
        with pytest.raises(ValueError):
            check_sum_set(omega, s)


SUM_SET_EXPECTED = {
    (1, 2, 3): (40, 24, 24),
    (1, 2, 5): (2176, 1920, 1920),
    (1, 3, 3): (544, 480, 480),
    (1, 3, 5): (526336, 522240, 522240),
    (2, 3, 3): (256, 192, 192),
    (2, 3, 5): (126976, 122880, 122880),
}


def test_code_column_sets_without_zero_are_sum_sets():
    for (family, m, s), (sig_in, sig_out, at_zero) in SUM_SET_EXPECTED.items():
        omega = build_omega(GF2m(m), family, "code-column").with_zero(False)
        report = check_sum_set(omega, s)
        assert report.is_sum_set, (family, m, s)
        assert (report.sigma_members, report.sigma_outside) == (sig_in, sig_out)
        assert report.count_at_zero == at_zero


def test_code_column_sets_with_zero_are_not_sum_sets():
    for family, m in ((1, 2), (1, 3), (2, 3)):
        omega = build_omega(GF2m(m), family, "code-column").with_zero(True)
        report = check_sum_set(omega, 3)
        assert not report.is_sum_set
        assert report.witness is not None
        a, b = report.witness
        counts = representation_counts(omega, 3)
        assert counts[a] != counts[b]


def test_paper_column_sets_are_not_sum_sets():
    for family, m in ((1, 2), (1, 3), (2, 3)):
        for include_zero in (False, True):
            omega = build_omega(GF2m(m), family, "paper-column").with_zero(include_zero)
            for s in (3, 5):
                assert not check_sum_set(omega, s).is_sum_set


def test_full_nonzero_space_is_trivially_a_sum_set():
    omega = hand_set(3, range(1, 8))
    report = check_sum_set(omega, 3)
    assert report.is_sum_set
    assert report.sigma_members == report.sigma_outside


def test_sum_set_report_json_shape():
    omega = build_omega(GF2m(2), 1, "code-column")
    payload = check_sum_set(omega, 3).to_json_dict()
    assert set(payload) == {
        "family",
        "m",
        "s",
        "variant",
        "include_zero",
        "is_sum_set",
        "sigma0",
        "sigma1",
        "count_at_zero",
    }
    assert payload["sigma0"] == 40
    assert payload["sigma1"] == 24


def test_symmetric_three_weight():
    assert symmetric_three_weight(closed_form_distribution(1, 3), n=32)
    assert symmetric_three_weight(closed_form_distribution(2, 3), n=24)
    assert not symmetric_three_weight(closed_form_distribution(3, 3), n=20)
    for m in range(2, 7):
        h = 1 << (m - 1)
        assert symmetric_three_weight(closed_form_distribution(1, m), n=2 * h * h)
    for m in (3, 5):
        h = 1 << (m - 1)
        assert symmetric_three_weight(closed_form_distribution(2, m), n=2 * h * h - 2 * h)
    # two nonzero weights never qualify
    assert not symmetric_three_weight({0: 1, 2: 3, 4: 4}, n=4)
