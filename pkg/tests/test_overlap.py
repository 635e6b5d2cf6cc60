from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from consecpat.overlap import (ImpossibleEventPair, classify, double_occurrence_words,
                               enumerate_overlap_sets, forced_suffix, joint_count, joint_rows,
                               overlap_profile, overlap_set_rows, verify_monotone_lemma)
from consecpat.perm import Pattern, all_patterns, complement, is_monotone, occurrences, reverse

P = lambda *e: Pattern(e)  # noqa: E731


def literal_double_words(sigma, k):
    """Scan every word of S_{2m-k} for occurrences at 0 and m-k."""
    m = sigma.m
    out = []
    for tau in permutations(range(1, 2 * m - k + 1)):
        occ = occurrences(tau, sigma)
        if 0 in occ and m - k in occ:
            out.append(tau)
    return out


@pytest.mark.parametrize("sigma, overlaps", [
    (P(1, 2, 3), {1, 2}),
    (P(1, 3, 2), {1}),
    (P(1, 3, 2, 4), {1, 2}),
    (P(2, 1, 3), {1}),
])
def test_profile_examples(sigma, overlaps):
    assert set(overlap_profile(sigma).overlaps) == overlaps


def test_profile_rejects_short():
    with pytest.raises(ValueError):
        overlap_profile(P(1))


def test_nonmonotone_overlap_family():
    # (1, t+1, 2, t+2, ..., t, 2t) overlaps at m-2 without being monotone
    for t in range(2, 6):
        sigma = Pattern(tuple(v for i in range(1, t + 1) for v in (i, t + i)))
        prof = overlap_profile(sigma)
        assert prof.max_overlap == 2 * t - 2
        assert not is_monotone(sigma)


def test_classify_examples():
    c = classify(P(1, 3, 2))
    assert (c.max_overlap, c.is_non_overlapping, c.is_monotone) == (1, True, False)
    c = classify(P(1, 2, 3, 4))
    assert (c.max_overlap, c.is_monotone) == (3, True)
    assert classify(P(2, 1, 3)).max_overlap == 1


@pytest.mark.parametrize("m", range(2, 8))
def test_classify_monotone_consistent(m):
    for sigma in all_patterns(m):
        prof = overlap_profile(sigma)
        assert 1 in prof.overlaps
        assert classify(sigma).is_monotone == is_monotone(sigma)
        assert prof.in_M(prof.max_overlap) and not prof.in_M(prof.max_overlap - 1)


@given(st.integers(2, 9).flatmap(lambda m: st.permutations(range(1, m + 1))))
def test_profile_invariant_under_reverse_complement(entries):
    sigma = Pattern(tuple(entries))
    assert overlap_profile(reverse(complement(sigma))) == overlap_profile(sigma)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_monotone_lemma(m):
    res = verify_monotone_lemma(m)
    assert len(res.patterns_with_overlap_at_m_minus_1) == 2
    assert res.holds


def test_monotone_lemma_range():
    with pytest.raises(ValueError):
        verify_monotone_lemma(2)
    with pytest.raises(ValueError):
        verify_monotone_lemma(9)


def test_forced_suffix_examples():
    assert forced_suffix(P(1, 2, 3), 2) == {3: 3, 2: 2}
    assert forced_suffix(P(1, 3, 2, 4), 2) == {4: 5, 3: 2}
    w = (1, 4, 2, 5, 3, 6)
    assert w in double_occurrence_words(P(1, 3, 2, 4), 2)
    with pytest.raises(ImpossibleEventPair, match="impossible event pair"):
        forced_suffix(P(1, 3, 2), 2)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_forced_suffix_matches_all_words(m):
    for sigma in all_patterns(m):
        for k in overlap_profile(sigma).overlaps:
            forced = forced_suffix(sigma, k)
            words = literal_double_words(sigma, k)
            assert words
            for tau in words:
                assert all(tau[pos - 1] == v for pos, v in forced.items())


def test_joint_count_examples():
    jc = joint_count(P(1, 2, 3), 2)
    assert (jc.count, jc.bound, jc.length) == (1, 2, 4)
    assert joint_count(P(1, 3, 2), 2).count == 0
    jc = joint_count(P(1, 3, 2), 1)
    assert (jc.count, jc.bound) == (3, 6)
    assert jc.probability == 3 / 120


@pytest.mark.parametrize("m", [2, 3, 4])
def test_joint_count_against_literal_scan(m):
    for sigma in all_patterns(m):
        for k in range(1, m):
            words = literal_double_words(sigma, k)
            assert sorted(double_occurrence_words(sigma, k)) == words
            assert joint_count(sigma, k).count == len(words)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_joint_count_paths_agree_and_bounded(m):
    pool = list(all_patterns(m))
    if m == 6:
        pool = pool[::11] + [Pattern((1, 2, 3, 4, 5, 6)), Pattern((1, 4, 2, 5, 3, 6))]
    for sigma in pool:
        prof = overlap_profile(sigma)
        for k in range(1, m):
            a = joint_count(sigma, k, method="enumerate")
            b = joint_count(sigma, k, method="constructive")
            assert a.count == b.count
            assert 0 <= a.count <= comb(2 * (m - k), m - k) == a.bound
            if k not in prof.overlaps:
                assert a.count == 0


def test_joint_count_large_uses_constructive():
    sigma = Pattern(tuple(range(1, 9)))
    jc = joint_count(sigma, 1)
    assert jc.method == "constructive"
    assert jc.count == 1
    with pytest.raises(ValueError):
        joint_count(sigma, 0)
    with pytest.raises(ValueError):
        joint_count(sigma, 8)


def test_enumerate_overlap_sets_examples():
    s4 = enumerate_overlap_sets(4)
    assert s4.n_sizes[2] == 12
    s3 = enumerate_overlap_sets(3)
    assert s3.n_sizes[2] == 2
    assert s3.m_sizes[1] == 4


@pytest.mark.parametrize("m", range(2, 9))
def test_overlap_set_invariants(m):
    s = enumerate_overlap_sets(m)
    assert sum(s.max_overlap_sizes.values()) == factorial(m)
    assert s.m_sizes[m - 1] == factorial(m)
    assert all(s.m_sizes[k] <= s.m_sizes[k + 1] for k in range(1, m - 1))
    for k in range(1, m):
        if 2 * k <= m:
            assert s.n_sizes[k] * factorial(k) == factorial(m)
    assert s.n_sizes[m - 1] == 2


def test_enumerate_overlap_sets_limit():
    with pytest.raises(ValueError):
        enumerate_overlap_sets(9)


def test_report_rows():
    rows = joint_rows(P(1, 3, 2))
    assert rows[0] == {"m": 3, "k": 1, "count": 3, "bound": 6, "fraction": 3 / 120}
    rows = overlap_set_rows(4)
    assert [r["count"] for r in rows] == [24, 12, 2]
    assert set(rows[0]) == {"m", "k", "count", "bound", "fraction"}
