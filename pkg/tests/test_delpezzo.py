import math

import pytest

from e8lines import golden
from e8lines.delpezzo import (
    InvariantError,
    bertini_degree_map,
    disjoint_tuple_count,
    edge_multiplicity_matrix,
    format_pattern,
    ib_equivalence_check,
    ib_pair_sets,
    lattice_row,
    orbit_size_identity,
    pair_orbit_report,
    projective_pair_report,
    projective_triple_report,
    degree_table,
)
from e8lines.lattice import enumerate_lines
from e8lines.perm import orbit_partition


@pytest.mark.parametrize("row", golden.lattice_rows())
def test_lattice_rows(row):
    n = row[1]
    assert lattice_row(n).as_tuple() == row


@pytest.mark.parametrize("n,count", [(3, 2), (4, 5), (5, 16), (6, 72), (7, 576), (8, 17280)])
def test_disjoint_tuples(n, count):
    assert disjoint_tuple_count(n) == count
    assert orbit_size_identity(n, lattice_row(n).weyl_order)


def test_degree_table():
    rows = degree_table()
    assert [(d, format_pattern(p), c) for d, p, c in rows] == [tuple(r) for r in golden.load()["degrees"]]
    assert sum(c for _, _, c in rows) == 240
    assert bertini_degree_map() == {d: {6 - d} for d in range(7)}


def test_degree_table_rejects_foreign_lines():
    with pytest.raises(InvariantError):
        degree_table(enumerate_lines(8)[:1] + enumerate_lines(7)[:1])


def test_bertini_equivalences():
    assert ib_equivalence_check()
    sets = ib_pair_sets()
    lines = enumerate_lines(8)
    from e8lines.lattice import inner_product

    non = next(
        frozenset((i, j))
        for i in range(240)
        for j in range(i + 1, 240)
        if inner_product(lines[i].coords, lines[j].coords) == 2
    )
    assert all(non not in s for s in sets)


def test_pair_report(full_action):
    recs = pair_orbit_report(full_action)
    assert {r.invariant: r.size for r in recs} == golden.orbit_sizes("full", 2)
    assert sum(r.size for r in recs) == math.comb(240, 2)


def test_projective_reports(projective_action):
    pairs = projective_pair_report(projective_action)
    assert {r.invariant: r.size for r in pairs} == golden.orbit_sizes("projective", 2)
    triples = projective_triple_report(projective_action)
    assert {r.invariant: r.size for r in triples} == golden.orbit_sizes("projective", 3)
    assert sum(r.size for r in triples) == math.comb(120, 3)
    # the lone all-double-edge orbit has positive sign
    assert {r.size for r in triples if r.invariant[:3] == (1, 1, 1)} == {1120, 30240}


def test_edge_matrix_shape():
    m = edge_multiplicity_matrix((0, 1))
    assert len(m) == 4 and all(len(r) == 4 for r in m)
    assert m[0][1] == m[2][3] == 3
    assert all(m[i][j] == m[j][i] for i in range(4) for j in range(4))


def test_reports_require_matching_action(projective_action, full_action):
    with pytest.raises(InvariantError):
        pair_orbit_report(projective_action, orbit_partition(projective_action, 2))
    with pytest.raises(InvariantError):
        projective_pair_report(full_action, orbit_partition(full_action, 2))
