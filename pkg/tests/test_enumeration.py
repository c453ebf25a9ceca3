import math

import numpy as np
import pytest

import oracles
from zsets import DomainError, PcSet, build_table, canonical_form, census, enum_classes, first_tuple_of_multiplicity, multiply
from zsets.enumeration import candidate_masks, class_count_bruteforce, class_masks, content_matrix, patterson_matrix
from zsets.formats import REFERENCE_FIRST_TRIPLE, REFERENCE_OCTUPLE


def spectrum_and_lists(c):
    return c.spectrum, [[x.members for x in t.classes] for t in c.tuples]


@pytest.mark.parametrize("n, k, expected", [(8, 4, 8), (12, 6, 50), (12, 0, 1), (12, 12, 1), (1, 1, 1)])
def test_enum_classes_counts(n, k, expected):
    assert len(enum_classes(n, k)) == expected


def test_enum_classes_match_oracle():
    for n in range(1, 15):
        for k in range(n + 1):
            got = [c.members for c in enum_classes(n, k)]
            assert sorted(got) == oracles.classes(n, k), (n, k)
            assert all(canonical_form(c) == c for c in enum_classes(n, k))


def test_class_count_bruteforce_agrees():
    for n, k in [(16, 5), (17, 6), (18, 4)]:
        assert len(enum_classes(n, k)) == class_count_bruteforce(n, k)


def test_enum_classes_sorted_by_canonical_mask():
    masks = [c.mask for c in enum_classes(12, 5)]
    revs = [int(f"{m:012b}"[::-1], 2) for m in masks]
    assert revs == sorted(revs, reverse=True)


def test_enum_range_errors():
    for n, k in [(0, 0), (33, 4), (8, 9), (8, -1)]:
        with pytest.raises(DomainError):
            enum_classes(n, k)


def test_candidate_masks_contain_zero():
    m = candidate_masks(10, 4)
    assert m.size == math.comb(9, 3)
    assert np.all(m & 1)


def test_content_and_patterson_keys_agree_rowwise():
    masks = class_masks(14, 6)
    ic = content_matrix(masks, 14)
    pt = patterson_matrix(masks, 14)
    for row_ic, row_pt, m in zip(ic[:200], pt[:200], masks[:200]):
        a = PcSet(14, int(m))
        assert tuple(row_pt) == oracles.ivec(a.members, 14)
        assert tuple(row_ic) == oracles.icontent(a.members, 14)


def test_census_examples():
    c = census(16, 6)
    assert c.vectors_with_tuples == 31 and c.spectrum == {2: 28, 3: 3}
    assert c.has_large_tuples
    c = census(17, 5)
    assert c.vectors_with_tuples == 0 and c.spectrum == {}


@pytest.mark.slow
def test_census_n18_quadruples():
    c = census(18, 9)
    assert c.vectors_with_tuples == 572
    assert c.spectrum[4] == 54


def test_census_matches_oracle():
    for n, k in [(10, 5), (12, 6), (13, 5), (14, 6)]:
        got = [[x.members for x in t.classes] for t in census(n, k).tuples]
        assert sorted(got) == oracles.tuples(n, k)


def test_small_cardinalities_have_no_tuples():
    for n in range(1, 33):
        for k in range(min(n, 3) + 1):
            assert census(n, k).vectors_with_tuples == 0


def test_content_and_patterson_censuses_agree():
    for n in range(4, 21):
        for k in range(4, n // 2 + 1):
            assert spectrum_and_lists(census(n, k)) == spectrum_and_lists(census(n, k, method="patterson"))
    with pytest.raises(DomainError):
        census(8, 4, method="fourier")


def test_complement_symmetry():
    for n in range(4, 21):
        for k in range(n // 2 + 1):
            a, b = census(n, k), census(n, n - k)
            assert a.vectors_with_tuples == b.vectors_with_tuples and a.spectrum == b.spectrum, (n, k)


def test_multiplication_closure():
    for n, k in [(12, 5), (12, 6), (15, 6), (16, 6)]:
        tuples = census(n, k).tuples
        lookup = {c: i for i, t in enumerate(tuples) for c in t.classes}
        for t in tuples:
            for m in range(1, n):
                if math.gcd(m, n) != 1:
                    continue
                images = {lookup[canonical_form(multiply(c, m))] for c in t.classes}
                assert len(images) == 1


def test_first_tuple_examples():
    t = first_tuple_of_multiplicity(16, 6, 3)
    assert [c.members for c in t.classes] == sorted(canonical_form(PcSet.of(s, 16)).members for s in REFERENCE_FIRST_TRIPLE)
    assert first_tuple_of_multiplicity(12, 6, 3) is None
    with pytest.raises(DomainError):
        first_tuple_of_multiplicity(12, 6, 2)


@pytest.mark.slow
def test_first_octuple():
    t = first_tuple_of_multiplicity(24, 9, 8)
    expected = {canonical_form(PcSet.of(s, 24)) for s in REFERENCE_OCTUPLE}
    assert set(t.classes) == expected


def test_worker_count_does_not_change_output():
    base = census(16, 7, workers=1)
    for w in (2, 3):
        assert census(16, 7, workers=w) == base


def test_build_table_layout():
    t = build_table([8, 9, 12], [4, 5, 6], half=True)
    assert t.value(8, 4) == 1 and t.value(8, 5) is None
    assert t.value(12, 6) == 15
    assert t.to_csv() == "k\\N,8,9,12\n4,1,0,1\n5,--,--,3\n6,--,--,15\n"
    full = build_table([8], [4, 5, 9])
    assert full.value(8, 5) == 0 and full.value(8, 9) is None
