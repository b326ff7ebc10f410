"""Line combinatorics of del Pezzo surfaces: the tables of lattice data,
line classes by plane-curve degree, orbit invariants of pairs and triples
of lines, Bertini pairs and disjoint n-tuples."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .lattice import (
    LineClass,
    bertini,
    automorphism_count,
    dynkin_diagram,
    enumerate_lines,
    enumerate_roots,
    inner_product,
    line_of_root,
    root_of_line,
    PicLattice,
)
from .perm import FULL, PROJECTIVE, OrbitTable, PermAction, orbit_partition, schreier_sims


class InvariantError(RuntimeError):
    pass


# ------------------------------------------------------------ lattice data --


@dataclass(frozen=True)
class LatticeRow:
    d: int
    n: int
    tau: str
    weyl_order: int
    aut_order: int
    lines: int
    disjoint_tuples: int

    def as_tuple(self):
        return (self.d, self.n, self.tau, self.weyl_order, self.aut_order,
                self.lines, self.disjoint_tuples)


def lattice_row(n: int) -> LatticeRow:
    from .perm import build_action

    roots = enumerate_roots(n)
    graph = dynkin_diagram(roots.simple_roots)
    bsgs = schreier_sims(build_action(roots))
    return LatticeRow(
        d=9 - n,
        n=n,
        tau=roots.type_label,
        weyl_order=bsgs.order,
        aut_order=automorphism_count(graph),
        lines=len(enumerate_lines(n)),
        disjoint_tuples=disjoint_tuple_count(n),
    )


def disjoint_tuple_count(n: int) -> int:
    """Number of unordered n-sets of pairwise disjoint lines (n-cliques of
    the orthogonality graph)."""
    lines = enumerate_lines(n)
    m = len(lines)
    nbr = [0] * m
    for i, j in itertools.combinations(range(m), 2):
        if inner_product(lines[i].coords, lines[j].coords) == 0:
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i

    def extend(candidates: int, depth: int) -> int:
        if depth == n:
            return 1
        total = 0
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            # only larger-index neighbours, so each clique is found once
            total += extend(candidates & nbr[v], depth + 1)
        return total

    return extend((1 << m) - 1, 0)


# ------------------------------------------------------- degree patterns --

DEGREE_PATTERNS = {
    0: ((-1, 1), (0, 7)),
    1: ((0, 6), (1, 2)),
    2: ((0, 3), (1, 5)),
    3: ((0, 1), (1, 6), (2, 1)),
    4: ((1, 5), (2, 3)),
    5: ((1, 2), (2, 6)),
    6: ((2, 7), (3, 1)),
}


def multiplicity_pattern(line: LineClass) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(Counter(line.multiplicities).items()))


def degree_table(lines=None) -> list[tuple[int, tuple, int]]:
    """Rows (h-degree, multiplicity pattern, count) for the 240 lines."""
    lines = enumerate_lines(8) if lines is None else lines
    rows: Counter = Counter()
    for line in lines:
        pattern = multiplicity_pattern(line)
        if DEGREE_PATTERNS.get(line.degree) != pattern:
            raise InvariantError(f"line {line} matches no degree/multiplicity row")
        rows[line.degree, pattern] += 1
    return [(d, p, rows[d, p]) for d, p in sorted(rows)]


def format_pattern(pattern) -> str:
    return " ".join(f"({v})^{c}" if v < 0 else f"{v}^{c}" for v, c in pattern)


def bertini_degree_map(lines=None) -> dict[int, set[int]]:
    lines = enumerate_lines(8) if lines is None else lines
    out: dict[int, set[int]] = {}
    for line in lines:
        out.setdefault(line.degree, set()).add(bertini(line).degree)
    return out


# --------------------------------------------------------- Bertini pairs --


def ib_pair_sets(lines=None) -> list[set[frozenset[int]]]:
    """The pairs selected by each of the four equivalent descriptions of a
    Bertini pair, as index sets into ``lines``."""
    lines = list(enumerate_lines(8) if lines is None else lines)
    alpha = PicLattice(8).alpha
    index = {l: i for i, l in enumerate(lines)}
    by_map, by_product, by_sum, by_roots = set(), set(), set(), set()
    two_alpha = tuple(2 * a for a in alpha)
    for i, j in itertools.combinations(range(len(lines)), 2):
        a, b = lines[i], lines[j]
        pair = frozenset((i, j))
        if index[bertini(a)] == j:
            by_map.add(pair)
        if inner_product(a.coords, b.coords) == 3:
            by_product.add(pair)
        if tuple(x + y for x, y in zip(a.coords, b.coords)) == two_alpha:
            by_sum.add(pair)
        if all(x + y == 0 for x, y in zip(root_of_line(a), root_of_line(b))):
            by_roots.add(pair)
    return [by_map, by_product, by_sum, by_roots]


def ib_equivalence_check(lines=None) -> bool:
    sets = ib_pair_sets(lines)
    return all(s == sets[0] for s in sets) and len(sets[0]) == 120


# -------------------------------------------------------- orbit reports --


@dataclass(frozen=True)
class OrbitRecord:
    invariant: tuple
    size: int
    representative: tuple[int, ...]
    multiplicities: tuple[tuple[int, ...], ...] = ()

    def as_dict(self):
        d = {
            "invariant": list(self.invariant),
            "size": self.size,
            "representative": list(self.representative),
        }
        if self.multiplicities:
            d["edge_multiplicities"] = [list(r) for r in self.multiplicities]
        return d


def root_gram(roots) -> np.ndarray:
    v = np.array(roots, dtype=np.int64)
    sign = np.ones(v.shape[1], dtype=np.int64)
    sign[1:] = -1
    return (v * sign) @ v.T


def _labelled_records(table: OrbitTable, invariants: np.ndarray, label, extra=None):
    """Check one invariant value per orbit, distinct across orbits."""
    records = []
    seen = {}
    for o, (size, rep) in enumerate(zip(table.sizes, table.representatives)):
        values = np.unique(invariants[table.orbit_id == o], axis=0)
        if len(values) != 1:
            raise InvariantError(f"invariant not constant on orbit {o}")
        inv = label(values[0])
        if inv in seen:
            raise InvariantError(f"orbits {seen[inv]} and {o} share invariant {inv}")
        seen[inv] = o
        records.append(
            OrbitRecord(inv, size, rep, extra(rep) if extra else ())
        )
    return sorted(records, key=lambda r: r.invariant)


def _full_action_gram(action: PermAction) -> np.ndarray:
    if action.mode != FULL or action.ground_size != 240:
        raise InvariantError("expected the 240-point action")
    return root_gram(enumerate_roots(8).all_roots)


def pair_orbit_report(action: PermAction, table: OrbitTable | None = None) -> list[OrbitRecord]:
    """Pairs of lines: orbits labelled by m = <l1, l2> = 1 + <r1, r2>."""
    gram = _full_action_gram(action)
    table = orbit_partition(action, 2) if table is None else table
    subs = table.subsets()
    m = 1 + gram[subs[:, 0], subs[:, 1]]
    return _labelled_records(table, m[:, None], lambda v: (int(v[0]),))


def triple_orbit_report(action: PermAction, table: OrbitTable | None = None) -> list[OrbitRecord]:
    """Triples of lines: orbits labelled by the sorted pairwise intersections."""
    gram = _full_action_gram(action)
    table = orbit_partition(action, 3) if table is None else table
    subs = table.subsets()
    t = np.sort(
        1 + np.stack(
            [gram[subs[:, 0], subs[:, 1]], gram[subs[:, 1], subs[:, 2]], gram[subs[:, 0], subs[:, 2]]],
            axis=1,
        ),
        axis=1,
    )
    return _labelled_records(table, t, lambda v: tuple(int(x) for x in v))


def _pair_representatives() -> list[tuple[int, ...]]:
    """Root of each +-pair; lexicographically smaller, so index order 0..119."""
    roots = enumerate_roots(8)
    reps = sorted({min(i, roots.negation_index(i)) for i in range(len(roots))})
    return [roots.all_roots[i] for i in reps]


def edge_multiplicity_matrix(pair_points) -> tuple[tuple[int, ...], ...]:
    """Intersection numbers among the 2k lines over k Bertini pairs, ordered
    as (l_1, i_B(l_1), l_2, i_B(l_2), ...), with l_j = r_j + alpha."""
    reps = _pair_representatives()
    lines = []
    for p in pair_points:
        r = reps[p]
        lines.append(line_of_root(r))
        lines.append(line_of_root(tuple(-x for x in r)))
    return tuple(
        tuple(0 if i == j else inner_product(a.coords, b.coords) for j, b in enumerate(lines))
        for i, a in enumerate(lines)
    )


def _projective_gram(action: PermAction) -> np.ndarray:
    if action.mode != PROJECTIVE or action.ground_size != 120:
        raise InvariantError("expected the 120-point projective action")
    return root_gram(_pair_representatives())


def projective_pair_report(action: PermAction, table: OrbitTable | None = None) -> list[OrbitRecord]:
    """Pairs of Bertini pairs: orbits labelled by |<r, s>|."""
    gram = _projective_gram(action)
    table = orbit_partition(action, 2) if table is None else table
    subs = table.subsets()
    c = np.abs(gram[subs[:, 0], subs[:, 1]])
    return _labelled_records(table, c[:, None], lambda v: (int(v[0]),), edge_multiplicity_matrix)


def projective_triple_report(action: PermAction, table: OrbitTable | None = None) -> list[OrbitRecord]:
    """Triples of Bertini pairs: orbits labelled by the sorted multiset of
    |<r_i, r_j>| together with the sign of <r1,r2><r2,r3><r1,r3>."""
    gram = _projective_gram(action)
    table = orbit_partition(action, 3) if table is None else table
    subs = table.subsets()
    prods = np.stack(
        [gram[subs[:, 0], subs[:, 1]], gram[subs[:, 1], subs[:, 2]], gram[subs[:, 0], subs[:, 2]]],
        axis=1,
    )
    c = np.sort(np.abs(prods), axis=1)[:, ::-1]
    sign = np.sign(np.prod(prods, axis=1))
    inv = np.concatenate([c, sign[:, None]], axis=1)
    return _labelled_records(
        table, inv, lambda v: tuple(int(x) for x in v), edge_multiplicity_matrix
    )


def orbit_size_identity(n: int, weyl_order: int) -> bool:
    return disjoint_tuple_count(n) * math.factorial(n) == weyl_order
