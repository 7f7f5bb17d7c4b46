import random

import pytest

from vertexlab.checks import (
    chamber_partner, count_bounded_length, count_distinct_parts, leg_triples, random_slope,
    schur_identity_sides, vertex_case, verify_edge_tables, verify_partition_counts,
    verify_rigidity, verify_schur_identities, verify_vertex, _signs,
)
from vertexlab.partitions import EMPTY, Partition, Partition3D, partitions_of
from vertexlab.vertex import VERTEX_TABLE, ZERO_MINUS_TWO, EdgeTables, vertex_character_finite
from vertexlab.parallel import parallel_map


def test_random_slopes_are_generic_and_balanced():
    rng = random.Random(1)
    for _ in range(50):
        s = random_slope(rng)
        assert sum(s.r) == 0 and all(s.r)


def test_chamber_partner_preserves_signs():
    rng = random.Random(3)
    v = vertex_character_finite(Partition3D.finite({(0, 0, 0), (1, 0, 0)}))
    for _ in range(10):
        s = random_slope(rng)
        try:
            target = _signs(v, s)
        except Exception:
            continue
        p = chamber_partner(v, s, rng)
        assert p != s
        assert _signs(v, p) == target


def test_rigidity_small():
    assert verify_rigidity(max_size=2, slopes=4, seed=5).passed


def test_edge_tables_small():
    assert verify_edge_tables(max_size=3).passed


def test_edge_tables_detect_corruption():
    bad = EdgeTables(corrupt={(ZERO_MINUS_TWO, s) for s in EdgeTables.regimes(ZERO_MINUS_TWO)})
    assert not verify_edge_tables(max_size=2, tables=bad).passed


def test_leg_triples_count():
    assert len(list(leg_triples(1))) == 8
    assert len(list(leg_triples(2))) == 64


def test_vertex_case_returns_none_on_success():
    legs = (Partition.of(1), EMPTY, Partition.of(1))
    assert vertex_case(legs, tuple(VERTEX_TABLE), 2) is None


def test_vertex_small_and_parallel_agree():
    serial = verify_vertex(max_leg=1, order=2, jobs=1)
    parallel = verify_vertex(max_leg=1, order=2, jobs=2)
    assert serial.passed and parallel.passed
    assert serial.details == parallel.details


def test_parallel_map_preserves_order():
    assert parallel_map(abs, [-3, 2, -1], jobs=2) == [3, 2, 1]
    assert parallel_map(abs, [], jobs=2) == []


@pytest.mark.parametrize("transposed", [False, True])
def test_schur_identity_sides_agree(transposed):
    left, right = schur_identity_sides(Partition.of(1), Partition.of(1), 2, 2, 2, transposed)
    assert left == right


def test_schur_identities_small():
    assert verify_schur_identities(1, 2, 2).passed


@pytest.mark.parametrize("size", range(8))
def test_partition_count_helpers(size):
    parts = partitions_of(size)
    for length in range(6):
        assert count_bounded_length(length, size) == sum(1 for p in parts if len(p) <= length)
        assert count_distinct_parts(length, size) == sum(
            1 for p in parts if len(p) == length and len(set(p.parts)) == length)


def test_partition_counts_report():
    assert verify_partition_counts(4).passed
