import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e8lines.burnside import (
    BurnsideError,
    OrbitCountTable,
    binomial_power,
    fixed_subset_gf,
    orbit_counts,
    poly_mul,
    poly_pow,
    total_orbits_by_cycle_count,
)
from e8lines.census import CycleTypeCensus, enumerate_cycle_types
from e8lines.lattice import enumerate_roots
from e8lines.perm import build_action, orbit_partition, schreier_sims

S3 = CycleTypeCensus({((1, 3),): 1, ((1, 1), (2, 1)): 3, ((3, 1),): 2}, 6, 3)


def test_gf_examples():
    assert fixed_subset_gf(CycleTypeCensus({((1, 3),): 1}, 1, 3)) == [1, 3, 3, 1]
    assert binomial_power(3, 1) == [1, 0, 0, 1]
    assert fixed_subset_gf(S3) == [6, 6, 6, 6]


def test_s3_counts():
    table = orbit_counts(S3)
    assert list(table.counts) == [1, 1, 1, 1]
    assert table.total() == total_orbits_by_cycle_count(S3) == 4


@given(st.integers(1, 12))
def test_trivial_group_gives_binomials(n):
    table = orbit_counts(CycleTypeCensus({((1, n),): 1}, 1, n))
    assert list(table.counts) == [math.comb(n, k) for k in range(n + 1)]
    assert table.is_palindromic()


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.integers(0, 5))
def test_poly_pow_matches_repeated_product(p, e):
    expect = [1]
    for _ in range(e):
        expect = poly_mul(expect, p)
    assert poly_pow(p, e) == expect


def test_divisibility_failure():
    # a table that sums correctly but is not a group census
    bogus = CycleTypeCensus({((1, 4),): 1, ((2, 2),): 1, ((1, 2), (2, 1)): 1, ((4, 1),): 1}, 4, 4)
    with pytest.raises(BurnsideError):
        orbit_counts(bogus)


@pytest.mark.parametrize("n", [4, 5])
def test_oracle_small_groups(n):
    action = build_action(enumerate_roots(n))
    table = orbit_counts(enumerate_cycle_types(schreier_sims(action)))
    for k in (1, 2, 3):
        assert table[k] == len(orbit_partition(action, k))


def test_output_formats():
    table = OrbitCountTable(3, [1, 1, 1, 1])
    assert table.to_csv().splitlines()[0] == "k,N(k)"
    assert '"2": "1"' in table.to_json()
