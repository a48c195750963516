"""Testing the brute-force oracle on small, hand-checked cases."""

import numpy as np
import pytest

from zorder.ring_order.src import oracle
from zorder.ring_order.src.errors import CapExceededError, NotGeneralizedProjectionError
from zorder.ring_order.src.poset import element_sets, leq, make_context


def test_relation_is_read_only_and_cached():
    ctx = make_context(12)
    r = oracle.relation(ctx)
    assert r is oracle.relation(make_context(12))
    assert r[4, 7] and not r[4, 6]
    with pytest.raises(ValueError):
        r[0, 0] = False


def test_brute_join_examples():
    z9, z12 = make_context(9), make_context(12)
    assert oracle.brute_join(z9, 3, 6) is None
    assert oracle.brute_join(z12, 4, 6) == 7
    for a in range(12):
        assert oracle.brute_join(z12, a, 1) == 1


def test_brute_meet_examples():
    z9, z12 = make_context(9), make_context(12)
    assert oracle.brute_meet(z9, 4, 7) is None
    assert oracle.brute_meet(z12, 7, 9) == 6
    for a in range(12):
        assert oracle.brute_meet(z12, a, 0) == 0


def test_brute_is_regular_examples():
    """8 = 8^2 * 2 in Z_12; 4b = 2 and 0 = 3 (mod 9) have no solution."""
    z9, z12 = make_context(9), make_context(12)
    assert oracle.brute_is_regular(z12, 8)
    assert not oracle.brute_is_regular(z12, 2)
    assert not oracle.brute_is_regular(z9, 3)
    assert oracle.brute_is_regular(z9, 0)
    assert oracle.brute_is_regular(make_context(1), 0)


def test_tables_match_pairwise_search():
    """The vectorized tables equal the per-pair searches and are symmetric."""
    for n in (1, 2, 8, 9, 12, 16, 18, 30):
        ctx = make_context(n)
        joins, meets = oracle.brute_join_table(ctx), oracle.brute_meet_table(ctx)
        assert np.array_equal(joins, joins.T)
        assert np.array_equal(meets, meets.T)
        for a in range(n):
            for b in range(n):
                j, m = oracle.brute_join(ctx, a, b), oracle.brute_meet(ctx, a, b)
                assert joins[a, b] == (oracle.ABSENT if j is None else j)
                assert meets[a, b] == (oracle.ABSENT if m is None else m)


def test_join_is_least_upper_bound():
    """Every join found is an upper bound below all other upper bounds."""
    ctx = make_context(36)
    joins = oracle.brute_join_table(ctx)
    for a in range(36):
        for b in range(36):
            if (c := joins[a, b]) != oracle.ABSENT:
                uppers = [u for u in range(36) if leq(ctx, a, u) and leq(ctx, b, u)]
                assert c in uppers
                assert all(leq(ctx, c, u) for u in uppers)


def test_brute_is_lattice():
    result = oracle.brute_is_lattice(make_context(9))
    assert not result.is_lattice
    assert result.witness == (3, 6)
    assert oracle.brute_is_lattice(make_context(12)).is_lattice
    assert oracle.brute_is_lattice(make_context(2)).is_lattice
    assert oracle.brute_is_lattice(make_context(1)).is_lattice


def test_brute_is_lattice_cap():
    with pytest.raises(CapExceededError):
        oracle.brute_is_lattice(make_context(30), cap=29)


def test_brute_extreme():
    z9, z12 = make_context(9), make_context(12)
    assert oracle.brute_extreme(z9, oracle.BoundSet(frozenset({0, 3, 6})), oracle.Extreme.LARGEST) is None
    assert oracle.brute_extreme(z12, oracle.BoundSet(frozenset({1, 7})), oracle.Extreme.SMALLEST) == 7
    for direction in oracle.Extreme:
        assert oracle.brute_extreme(z12, oracle.BoundSet(frozenset({5})), direction) == 5
    with pytest.raises(ValueError):
        oracle.brute_extreme(z12, oracle.BoundSet(frozenset()), oracle.Extreme.LARGEST)


def test_brute_covering_projections():
    z12 = make_context(12)
    assert oracle.brute_covering_projections(z12, 8) == (0, 4)
    assert oracle.brute_covering_projections(z12, 5) == (9, 1)
    assert oracle.brute_covering_projections(z12, 1) == (1, 1)
    with pytest.raises(NotGeneralizedProjectionError):
        oracle.brute_covering_projections(z12, 6)


def test_projections_and_gp_are_lattices():
    """P(Z_n) and GP(Z_n) with the induced order are lattices, n <= 100."""
    for n in range(1, 101):
        ctx = make_context(n)
        sets = element_sets(ctx)
        assert oracle.brute_subposet_is_lattice(ctx, oracle.BoundSet(frozenset(sets.p)))
        assert oracle.brute_subposet_is_lattice(ctx, oracle.BoundSet(frozenset(sets.gp)))


def test_upper_covers_z9():
    z9 = make_context(9)
    assert oracle.brute_upper_covers(z9, 3) == {4, 7}
    assert oracle.brute_lower_covers(z9, 7) == {3, 6}
    assert oracle.brute_upper_covers(z9, 1) == set()
