from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e8lines import census as C
from e8lines.census import CensusError, CycleTypeCensus, cycle_type, enumerate_cycle_types
from e8lines.lattice import enumerate_roots
from e8lines.perm import PermAction, build_action, compose, schreier_sims


def _words_census(action):
    """Oracle: all elements by closure under generators, cycle types by hand."""
    n = action.ground_size
    start = tuple(range(n))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for s in action.generators:
                h = tuple(int(x) for x in compose(s, np.array(g)))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return Counter(cycle_type(g) for g in seen)


def test_cycle_type():
    assert cycle_type([1, 2, 0, 3]) == ((1, 1), (3, 1))
    assert cycle_type(range(5)) == ((1, 5),)


def test_trivial_group():
    bsgs = schreier_sims(PermAction(5, []))
    cen = enumerate_cycle_types(bsgs)
    assert cen.table == {((1, 5),): 1}


@pytest.mark.parametrize("n", [3, 4])
def test_census_matches_word_oracle(n):
    action = build_action(enumerate_roots(n))
    cen = enumerate_cycle_types(schreier_sims(action))
    assert cen.table == dict(_words_census(action))
    assert sum(cen.table.values()) == cen.group_order
    assert cen.table[((1, action.ground_size),)] == 1


@pytest.mark.parametrize("n", [4, 5])
def test_partition_invariance(n):
    bsgs = schreier_sims(build_action(enumerate_roots(n)))
    one = enumerate_cycle_types(bsgs)
    split = enumerate_cycle_types(bsgs, partitions=7)
    many = enumerate_cycle_types(bsgs, workers=2)
    assert one == split == many


def test_validation_rejects_bad_tables():
    with pytest.raises(CensusError):
        CycleTypeCensus({((1, 3),): 2}, 2, 3)
    with pytest.raises(CensusError):
        CycleTypeCensus({((1, 3),): 1, ((2, 1),): 1}, 2, 3)
    with pytest.raises(CensusError):
        CycleTypeCensus({((1, 3),): 1}, 2, 3)


def test_burnside_fixed_points_transitive():
    bsgs = schreier_sims(build_action(enumerate_roots(5)))
    cen = enumerate_cycle_types(bsgs)
    assert cen.fixed_point_sum() == cen.group_order


def test_cache_round_trip(tmp_path):
    action = build_action(enumerate_roots(5))
    cen = enumerate_cycle_types(schreier_sims(action))
    text = C.dumps(cen, action.tau, action.mode)
    assert text.splitlines()[0] == "census v1 D5 full 40 1920"
    back, tau, mode = C.loads(text)
    assert back == cen and (tau, mode) == ("D5", "full")
    assert C.dumps(back, tau, mode) == text
    path = C.store(tmp_path, action, cen)
    assert path.read_text() == text
    assert C.load_cached(tmp_path, action) == cen
    assert C.load_cached(tmp_path / "none", action) is None


def test_get_census(tmp_path):
    action = build_action(enumerate_roots(4))
    assert C.get_census(action, tmp_path) is None
    cen = C.get_census(action, tmp_path, compute=True)
    assert C.cache_path(tmp_path, action).exists()
    assert C.get_census(action, tmp_path) == cen


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 9), st.integers(1, 9)), min_size=1, max_size=5, unique_by=lambda t: t[0]))
def test_cycle_type_text_round_trip(pairs):
    ctype = tuple(sorted(pairs))
    assert C.parse_cycle_type(C.format_cycle_type(ctype)) == ctype


def test_malformed_cache():
    with pytest.raises(CensusError):
        C.loads("")
    with pytest.raises(CensusError):
        C.loads("census v0 A4 full 20 120\n")
    with pytest.raises(CensusError):
        C.parse_cycle_type("3^1 1^2")


def test_sampling_mode_only_yields_real_types():
    bsgs = schreier_sims(build_action(enumerate_roots(5)))
    exact = enumerate_cycle_types(bsgs)
    sample = C.sample_cycle_types(bsgs, 200, seed=3)
    assert sum(sample.values()) == 200
    assert set(sample) <= set(exact.table)
