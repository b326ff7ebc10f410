"""Picard lattices of del Pezzo surfaces, their roots and their lines.

Vectors live in Z^{1,n} with basis (h, e_1, ..., e_n) and diagonal Gram
form (+1, -1, ..., -1).  A line class d*h - sum mu_i e_i is stored by its
basis coordinates (d, -mu_1, ..., -mu_n).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import networkx as nx

Vector = tuple[int, ...]

MIN_RANK = 3
MAX_RANK = 8


class LatticeError(ValueError):
    pass


def _check_rank(n: int) -> None:
    if not MIN_RANK <= n <= MAX_RANK:
        raise LatticeError(f"rank n={n} outside {MIN_RANK}..{MAX_RANK}")


@dataclass(frozen=True)
class PicLattice:
    """The lattice Z^{1,n} together with its anticanonical vector."""

    n: int

    def __post_init__(self):
        _check_rank(self.n)

    @property
    def dim(self) -> int:
        return self.n + 1

    @property
    def degree(self) -> int:
        return 9 - self.n

    @property
    def alpha(self) -> Vector:
        return (3,) + (-1,) * self.n

    @property
    def h(self) -> Vector:
        return (1,) + (0,) * self.n

    def e(self, i: int) -> Vector:
        """Exceptional class e_i, 1-based."""
        if not 1 <= i <= self.n:
            raise LatticeError(f"no exceptional class e_{i} in rank {self.n}")
        v = [0] * self.dim
        v[i] = 1
        return tuple(v)

    def vector(self, coords: Iterable[int]) -> Vector:
        v = tuple(int(c) for c in coords)
        if len(v) != self.dim:
            raise LatticeError(f"expected {self.dim} coordinates, got {len(v)}")
        return v

    def simple_roots(self) -> list[Vector]:
        """h - e1 - e2 - e3 followed by e_i - e_{i+1}."""
        first = [0] * self.dim
        first[0] = 1
        first[1] = first[2] = first[3] = -1
        roots = [tuple(first)]
        for i in range(1, self.n):
            v = [0] * self.dim
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        return roots


def inner_product(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise LatticeError(f"rank mismatch: {len(u)} vs {len(v)}")
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def add(u: Sequence[int], v: Sequence[int], scale: int = 1) -> Vector:
    """u + scale * v."""
    if len(u) != len(v):
        raise LatticeError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(a + scale * b for a, b in zip(u, v))


def neg(v: Sequence[int]) -> Vector:
    return tuple(-a for a in v)


def reflect(r: Sequence[int], x: Sequence[int]) -> Vector:
    """Reflection x -> x + <r, x> r in a (-2)-vector r."""
    if inner_product(r, r) != -2:
        raise LatticeError(f"{tuple(r)} is not a (-2)-vector")
    return add(x, r, inner_product(r, x))


def _vectors_with(n: int, norm: int, alpha_product: int, h_bound: int) -> list[Vector]:
    """All v with <v,v> = norm and <v,alpha> = alpha_product, |v_0| <= h_bound.

    Fixing v_0 = a, the tail t satisfies sum t_i^2 = a^2 - norm and
    sum t_i = alpha_product - 3a, so each |t_i| <= sqrt(a^2 - norm).
    """
    found = []
    for a in range(-h_bound, h_bound + 1):
        sq = a * a - norm
        if sq < 0:
            continue
        target = alpha_product - 3 * a
        bound = int(sq ** 0.5)
        found.extend((a,) + t for t in _tails(n, sq, target, bound))
    return sorted(found)


def _tails(length: int, sq: int, total: int, bound: int):
    # depth-first over coordinates with the remaining squared-length budget
    if length == 0:
        if sq == 0 and total == 0:
            yield ()
        return
    for c in range(-bound, bound + 1):
        rest = sq - c * c
        if rest < 0:
            continue
        # Cauchy-Schwarz prune: |remaining sum| <= sqrt((length-1) * rest)
        remaining = total - c
        if remaining * remaining > (length - 1) * rest:
            continue
        for t in _tails(length - 1, rest, remaining, bound):
            yield (c,) + t


@dataclass(frozen=True)
class RootSystemData:
    lattice: PicLattice
    simple_roots: tuple[Vector, ...]
    all_roots: tuple[Vector, ...]
    index: dict = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.lattice.n

    def __len__(self):
        return len(self.all_roots)

    def negation_index(self, i: int) -> int:
        return self.index[neg(self.all_roots[i])]

    @cached_property
    def type_label(self) -> str:
        return dynkin_type(dynkin_diagram(self.simple_roots))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.all_roots])


@lru_cache(maxsize=None)
def enumerate_roots(n: int) -> RootSystemData:
    lat = PicLattice(n)
    # every root is a difference of a line (h-degree 0..6) and alpha
    roots = tuple(_vectors_with(n, -2, 0, 3))
    return RootSystemData(
        lattice=lat,
        simple_roots=tuple(lat.simple_roots()),
        all_roots=roots,
        index={r: i for i, r in enumerate(roots)},
    )


@dataclass(frozen=True, order=True)
class LineClass:
    coords: Vector

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def degree(self) -> int:
        """h-degree <h, lambda>."""
        return self.coords[0]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """mu_i = <e_i, lambda>; -1 marks the exceptional class e_i itself."""
        return tuple(-c for c in self.coords[1:])

    @property
    def is_exceptional(self) -> bool:
        return self.degree == 0

    @classmethod
    def from_multiplicities(cls, d: int, mu: Sequence[int]) -> "LineClass":
        return cls((d,) + tuple(-m for m in mu))

    def __str__(self):
        return f"[{self.degree}; {', '.join(map(str, self.multiplicities))}]"


@lru_cache(maxsize=None)
def enumerate_lines(n: int) -> tuple[LineClass, ...]:
    _check_rank(n)
    return tuple(LineClass(v) for v in _vectors_with(n, -1, 1, 6))


def lines_to_json(lines: Iterable[LineClass]) -> str:
    return json.dumps([list(l.coords) for l in lines])


def _require_e8(v: Sequence[int]) -> None:
    if len(v) != 9:
        raise LatticeError("only defined for n = 8")


def root_of_line(line: LineClass) -> Vector:
    _require_e8(line.coords)
    return add(line.coords, PicLattice(8).alpha, -1)


def line_of_root(r: Sequence[int]) -> LineClass:
    _require_e8(r)
    if inner_product(r, r) != -2:
        raise LatticeError(f"{tuple(r)} is not a root")
    return LineClass(add(r, PicLattice(8).alpha))


def bertini(line: LineClass) -> LineClass:
    """Bertini involution lambda -> 2 alpha - lambda."""
    _require_e8(line.coords)
    alpha = PicLattice(8).alpha
    return LineClass(tuple(2 * a - c for a, c in zip(alpha, line.coords)))


def dynkin_diagram(simple_roots: Sequence[Sequence[int]]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(len(simple_roots)))
    for i, j in itertools.combinations(range(len(simple_roots)), 2):
        p = inner_product(simple_roots[i], simple_roots[j])
        if p == 1:
            g.add_edge(i, j)
        elif p != 0:
            raise LatticeError(f"simple roots {i},{j} have product {p}")
    return g


def automorphism_count(graph: nx.Graph) -> int:
    matcher = nx.algorithms.isomorphism.GraphMatcher(graph, graph)
    return sum(1 for _ in matcher.isomorphisms_iter())


def _reference_diagram(label: str) -> nx.Graph:
    g = nx.Graph()
    parts = label.split("+")
    offset = 0
    for part in parts:
        kind, rank = part[0], int(part[1:])
        g.add_nodes_from(range(offset, offset + rank))
        if kind == "A":
            g.add_edges_from((offset + i, offset + i + 1) for i in range(rank - 1))
        elif kind == "D":
            g.add_edges_from((offset + i, offset + i + 1) for i in range(rank - 2))
            g.add_edge(offset + rank - 3, offset + rank - 1)
        elif kind == "E":
            # chain 0..rank-2 with a branch node attached at position 2
            g.add_edges_from((offset + i, offset + i + 1) for i in range(rank - 2))
            g.add_edge(offset + 2, offset + rank - 1)
        offset += rank
    return g


REFERENCE_TYPES = ("A1+A2", "A4", "D5", "E6", "E7", "E8")


def dynkin_type(graph: nx.Graph) -> str:
    """Identify a diagram among the del Pezzo root types."""
    for label in REFERENCE_TYPES:
        if nx.is_isomorphic(graph, _reference_diagram(label)):
            return label
    raise LatticeError("diagram is not one of the del Pezzo root types")


def reflection_closure(simple_roots: Sequence[Vector]) -> set[Vector]:
    """Orbit of the simple roots under the group generated by their reflections."""
    seen = set(simple_roots)
    frontier = list(simple_roots)
    while frontier:
        nxt = []
        for x in frontier:
            for r in simple_roots:
                y = reflect(r, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
