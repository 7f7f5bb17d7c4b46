from collections import Counter

import pytest
from hypothesis import given, strategies as st

from vertexlab.partitions import (
    EMPTY, Partition, corners, count_plane_partitions_bruteforce, enumerate_3d, minimal_3d,
    parse_partition, partitions_of, partitions_upto,
)
from strategies import partitions

P = Partition.of
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
PLANE_PARTITION_COUNTS = [1, 1, 3, 6, 13, 24, 48, 86]


def volume_counts(legs, max_volume):
    c = Counter(p.renorm_volume() for p in enumerate_3d(*legs, max_volume))
    lo = minimal_3d(*legs).renorm_volume()
    return [c[v] for v in range(lo, max_volume + 1)]


def series_mul(a, b, n):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def hook_series(lam, n):
    out = [1] + [0] * (n - 1)
    for _, arm, leg in lam.arm_legs():
        h = arm + leg + 1
        geo = [1 if k % h == 0 else 0 for k in range(n)]
        out = series_mul(out, geo, n)
    return out


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(10)] == PARTITION_COUNTS
    assert len(partitions_upto(4)) == sum(PARTITION_COUNTS[:5])


def test_rejects_non_partitions():
    with pytest.raises(ValueError):
        P(1, 2)
    with pytest.raises(ValueError):
        P(2, 0)


def test_parse_and_str_round_trip():
    for lam in partitions_upto(5):
        assert parse_partition(str(lam)) == lam


@given(partitions(8))
def test_conjugate_is_involution(lam):
    assert lam.conj.conj == lam
    assert lam.conj.size == lam.size


@given(partitions(8))
def test_arm_leg_sums(lam):
    # sum of arms = n(lam^t), sum of legs = n(lam)
    n = sum(i * p for i, p in enumerate(lam.parts))
    nt = sum(i * p for i, p in enumerate(lam.conj.parts))
    arms = sum(a for _, a, _ in lam.arm_legs())
    legs = sum(l for _, _, l in lam.arm_legs())
    assert (arms, legs) == (nt, n)
    assert lam.norm2 == lam.size + 2 * nt


@given(partitions(7))
def test_addable_adds_one_box(lam):
    for mu in lam.addable():
        assert mu.size == lam.size + 1
        assert mu.contains_partition(lam)


def test_corners():
    c = corners(P(3, 1))
    assert len(c.inner) == len(c.outer) + 1


def test_plane_partitions_by_enumeration_and_bruteforce():
    assert [count_plane_partitions_bruteforce(n) for n in range(8)] == PLANE_PARTITION_COUNTS
    assert volume_counts((EMPTY, EMPTY, EMPTY), 7) == PLANE_PARTITION_COUNTS


@pytest.mark.parametrize("lam", [P(1), P(2), P(1, 1), P(2, 1), P(3)])
def test_one_leg_counts_are_hook_products(lam):
    n = 6
    assert volume_counts((lam, EMPTY, EMPTY), n - 1) == series_mul(PLANE_PARTITION_COUNTS, hook_series(lam, n), n)


@pytest.mark.parametrize("legs", [(P(1), P(1), EMPTY), (P(2), P(1), P(1)), (P(1, 1), P(2), EMPTY)])
def test_cyclic_symmetry_of_counts(legs):
    a, b, c = legs
    base = volume_counts(legs, 3)
    assert volume_counts((b, c, a), 3) == base
    assert volume_counts((c, a, b), 3) == base
    # reflection swapping two axes transposes every leg
    assert volume_counts((b.conj, a.conj, c.conj), 3) == base


def test_enumerated_partitions_have_requested_legs():
    legs = (P(1), P(1), P(1))
    for pi in enumerate_3d(*legs, 2):
        assert pi.asymptotics() == legs
