import itertools
import math

import numpy as np
import pytest

from e8lines.lattice import enumerate_roots
from e8lines.perm import (
    FULL,
    PROJECTIVE,
    PermAction,
    PermError,
    build_action,
    compose,
    inverse,
    is_identity,
    orbit_of_subset,
    orbit_partition,
    orbit_size,
    schreier_sims,
)

ORDERS = {3: 12, 4: 120, 5: 1920, 6: 51840, 7: 2903040, 8: 696729600}


def test_compose_applies_right_first():
    a = np.array([1, 2, 0])
    b = np.array([0, 2, 1])
    assert list(compose(a, b)) == [a[b[i]] for i in range(3)]
    assert is_identity(compose(a, inverse(a)))


@pytest.mark.parametrize("n", range(3, 9))
def test_group_orders(n):
    action = build_action(enumerate_roots(n))
    assert action.ground_size == len(enumerate_roots(n))
    assert len(action.generators) == n
    for g in action.generators:
        assert sorted(g) == list(range(action.ground_size))
        assert is_identity(compose(g, g))
    bsgs = schreier_sims(action)
    assert bsgs.order == ORDERS[n] == math.prod(bsgs.orbit_sizes)
    for g in action.generators:
        assert bsgs.contains(g)
    for g in bsgs.strong_generators:
        assert bsgs.contains(g)


def test_projective_order(projective_action):
    assert projective_action.ground_size == 120
    assert len(projective_action.generators) == 8
    assert schreier_sims(projective_action).order == 348364800 == ORDERS[8] // 2


def test_projective_needs_e8():
    with pytest.raises(PermError):
        build_action(enumerate_roots(6), PROJECTIVE)
    with pytest.raises(PermError):
        build_action(enumerate_roots(6), "other")


def test_non_member_rejected():
    bsgs = schreier_sims(build_action(enumerate_roots(3)))
    # a transposition of two roots is not a lattice isometry
    g = np.arange(8)
    g[[0, 1]] = [1, 0]
    assert not bsgs.contains(g)


def test_base_is_first_moved_point():
    bsgs = schreier_sims(build_action(enumerate_roots(4)))
    gens = build_action(enumerate_roots(4)).generators
    first = min(int(np.nonzero(g != np.arange(len(g)))[0][0]) for g in gens)
    assert bsgs.base[0] == first


def test_random_elements_are_members():
    bsgs = schreier_sims(build_action(enumerate_roots(5)))
    rng = np.random.default_rng(1)
    for _ in range(20):
        assert bsgs.contains(bsgs.random_element(rng))


def test_orbit_of_subset(projective_action, full_action, e8_roots):
    assert orbit_size(projective_action, [0]) == 120
    assert orbit_size(projective_action, []) == 1
    # two roots with product -1 give disjoint lines
    r = e8_roots.all_roots
    pair = next(
        (i, j)
        for i, j in itertools.combinations(range(240), 2)
        if sum(a * b * s for a, b, s in zip(r[i], r[j], (1,) + (-1,) * 8)) == -1
    )
    assert orbit_size(full_action, pair) == 6720
    with pytest.raises(PermError):
        orbit_of_subset(full_action, [0, 0])
    with pytest.raises(PermError):
        orbit_of_subset(full_action, [240])


def _brute_orbits(action, k):
    n = action.ground_size
    seen, sizes = set(), []
    for s in itertools.combinations(range(n), k):
        if s not in seen:
            orb = orbit_of_subset(action, s)
            seen |= orb
            sizes.append(len(orb))
    return sorted(sizes)


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_partition_matches_bfs(n, k):
    action = build_action(enumerate_roots(n))
    table = orbit_partition(action, k)
    assert sorted(table.sizes) == _brute_orbits(action, k)
    assert sum(table.sizes) == math.comb(action.ground_size, k)
    subs = table.subsets()
    for o, rep in enumerate(table.representatives):
        assert tuple(subs[np.nonzero(table.orbit_id == o)[0][0]]) == rep


def test_partition_cap(full_action):
    with pytest.raises(PermError, match="Burnside"):
        orbit_partition(full_action, 4)
    with pytest.raises(PermError):
        orbit_partition(full_action, 3, cap=1000)


def test_partition_sizes_divide_order(projective_action):
    table = orbit_partition(projective_action, 2)
    assert sorted(table.sizes) == [3360, 3780]
    assert all(348364800 % s == 0 for s in table.sizes)


def test_action_generator_validation():
    with pytest.raises(PermError):
        PermAction(3, [[0, 0, 1]])
