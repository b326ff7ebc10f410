"""Orbit counts on k-subsets for every k at once, from a cycle-type census.

A permutation g fixes a subset iff the subset is a union of cycles of g, so
sum_g prod_{cycles c of g} (1 + x^{|c|}) counts fixed k-subsets in degree k.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .census import CycleTypeCensus

Poly = list[int]


class BurnsideError(ArithmeticError):
    pass


def poly_trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow(p: Poly, e: int) -> Poly:
    result: Poly = [1]
    while e:
        if e & 1:
            result = poly_mul(result, p)
        e >>= 1
        if e:
            p = poly_mul(p, p)
    return result


def binomial_power(length: int, mult: int) -> Poly:
    """(1 + x^length)^mult."""
    base = [1] + [0] * (length - 1) + [1]
    return poly_pow(base, mult)


def fixed_subset_gf(census: CycleTypeCensus) -> Poly:
    total: Poly = []
    for ctype, count in sorted(census.table.items()):
        term: Poly = [count]
        for length, mult in ctype:
            term = poly_mul(term, binomial_power(length, mult))
        total = poly_add(total, term)
    return total


@dataclass(frozen=True)
class OrbitCountTable:
    n_points: int
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def total(self) -> int:
        return sum(self.counts)

    def is_palindromic(self) -> bool:
        return self.counts == self.counts[::-1]

    def rows(self, ks=None):
        ks = range(self.n_points + 1) if ks is None else ks
        return [(k, self.counts[k]) for k in ks]

    def to_csv(self, ks=None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "N(k)"])
        w.writerows(self.rows(ks))
        return buf.getvalue()

    def to_json(self, ks=None) -> str:
        return json.dumps(
            {"n_points": self.n_points, "N": {str(k): str(v) for k, v in self.rows(ks)}},
            indent=2,
        )


def orbit_counts(census: CycleTypeCensus) -> OrbitCountTable:
    gf = fixed_subset_gf(census)
    gf += [0] * (census.ground_size + 1 - len(gf))
    counts = []
    for k, c in enumerate(gf):
        q, r = divmod(c, census.group_order)
        if r:
            raise BurnsideError(
                f"coefficient of x^{k} is not divisible by |G|; census is corrupt"
            )
        counts.append(q)
    return OrbitCountTable(census.ground_size, tuple(counts))


def total_orbits_by_cycle_count(census: CycleTypeCensus) -> int:
    """(1/|G|) sum_g 2^{c(g)}, the number of orbits on all subsets."""
    s = sum(count * 2 ** sum(m for _, m in ctype) for ctype, count in census.table.items())
    q, r = divmod(s, census.group_order)
    if r:
        raise BurnsideError("2^c(g) sum not divisible by |G|")
    return q
