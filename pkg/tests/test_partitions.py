"""Partition counting and enumeration against a brute-force oracle."""

import pytest

from treecensus import DegreePartition, count_partitions, enumerate_partitions


def brute_partitions(m, k, cap=None):
    """All non-increasing k-tuples of positive integers summing to m.

    Direct recursive enumeration, independent of the library's recurrence
    and generator.
    """
    cap = m if cap is None else cap
    if k == 0:
        return [()] if m == 0 else []
    out = []
    for first in range(min(cap, m), 0, -1):
        for rest in brute_partitions(m - first, k - 1, first):
            out.append((first,) + rest)
    return out


def test_count_smallest_case():
    # The one partition of 3 into two parts is 2+1.
    assert count_partitions(3, 2) == 1


def test_count_all_ones_is_forced():
    for m in range(1, 13):
        assert count_partitions(m, m) == 1


@pytest.mark.parametrize("m,k,expected", [(5, 3, 2), (9, 5, 5), (4, 2, 2)])
def test_count_frozen_derived_values(m, k, expected):
    assert len(brute_partitions(m, k)) == expected
    assert count_partitions(m, k) == expected


def test_count_matches_brute_force():
    for m in range(1, 16):
        for k in range(1, m + 2):
            assert count_partitions(m, k) == len(brute_partitions(m, k))


def test_count_boundaries():
    for m in range(1, 41):
        assert count_partitions(m, 1) == 1
        assert count_partitions(m, m + 1) == 0
        assert count_partitions(m, m + 7) == 0


def test_count_recurrence():
    from treecensus.partitions import _count

    for m in range(2, 41):
        for k in range(2, m + 1):
            assert count_partitions(m, k) == (
                count_partitions(m - 1, k - 1) + _count(m - k, k)
            )


def test_enumeration_order_examples():
    assert [p.parts for p in enumerate_partitions(3, 2)] == [(2, 1)]
    assert [p.parts for p in enumerate_partitions(4, 4)] == [(1, 1, 1, 1)]
    assert [p.parts for p in enumerate_partitions(4, 2)] == [(3, 1), (2, 2)]


def test_enumeration_is_decreasing_lex_and_complete():
    for m in range(1, 13):
        for k in range(1, m + 1):
            got = [p.parts for p in enumerate_partitions(m, k)]
            assert got == sorted(brute_partitions(m, k), reverse=True)
            assert len(got) == count_partitions(m, k)


def test_enumeration_empty_when_k_exceeds_m():
    assert list(enumerate_partitions(3, 5)) == []


def test_emitted_partitions_satisfy_invariants():
    for m in range(1, 26):
        for k in range(1, m + 1):
            for p in enumerate_partitions(m, k):
                assert p.length == k
                assert p.total == m
                assert all(x >= 1 for x in p.parts)
                assert all(p.parts[i] >= p.parts[i + 1]
                           for i in range(k - 1))


@pytest.mark.parametrize("m,k", [(0, 1), (1, 0), (-2, 3), (3, -1)])
def test_nonpositive_inputs_rejected(m, k):
    with pytest.raises(ValueError):
        count_partitions(m, k)
    with pytest.raises(ValueError):
        enumerate_partitions(m, k)


def test_degree_partition_validation():
    with pytest.raises(ValueError):
        DegreePartition((1, 2))
    with pytest.raises(ValueError):
        DegreePartition((2, 0))
    with pytest.raises(ValueError):
        DegreePartition(())
    p = DegreePartition((3, 1, 1))
    assert p.length == 3
    assert p.total == 5
    assert str(p) == "3+1+1"
    assert list(p) == [3, 1, 1]
    assert p[0] == 3
