"""Bivariate polynomials over F_p, stored sparsely as {(i, j): c} for the
monomial c * x^i * y^j."""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from .field import UPoly, trim


class PlanePoly:
    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[tuple[int, int], int] | None = None):
        self.p = p
        self.terms = {}
        for (i, j), c in (terms or {}).items():
            c %= p
            if c:
                self.terms[int(i), int(j)] = c

    @classmethod
    def from_dense(cls, p: int, monomials: Iterable[tuple[int, int]], coeffs: Iterable[int]):
        return cls(p, dict(zip(monomials, coeffs)))

    @classmethod
    def x(cls, p: int) -> "PlanePoly":
        return cls(p, {(1, 0): 1})

    @classmethod
    def y(cls, p: int) -> "PlanePoly":
        return cls(p, {(0, 1): 1})

    @classmethod
    def const(cls, p: int, c: int) -> "PlanePoly":
        return cls(p, {(0, 0): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, PlanePoly) and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __repr__(self):
        return f"PlanePoly({self.p}, {self.to_sparse()!r})"

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def __add__(self, other: "PlanePoly") -> "PlanePoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PlanePoly(self.p, out)

    def __neg__(self):
        return PlanePoly(self.p, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "PlanePoly") -> "PlanePoly":
        return self + (-other)

    def __mul__(self, other) -> "PlanePoly":
        if isinstance(other, int):
            return PlanePoly(self.p, {k: c * other for k, c in self.terms.items()})
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return PlanePoly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PlanePoly":
        result = PlanePoly.const(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x: int, y: int) -> int:
        return sum(c * pow(x, i, self.p) * pow(y, j, self.p) for (i, j), c in self.terms.items()) % self.p

    def translate(self, q: tuple[int, int]) -> "PlanePoly":
        """f(x + q_x, y + q_y), i.e. moves q to the origin."""
        a, b = q
        out: dict = {}
        for (i, j), c in self.terms.items():
            for s in range(i + 1):
                ci = c * comb(i, s) * pow(a, i - s, self.p)
                for t in range(j + 1):
                    k = (s, t)
                    out[k] = out.get(k, 0) + ci * comb(j, t) * pow(b, j - t, self.p)
        return PlanePoly(self.p, out)

    def homogeneous_part(self, m: int) -> "PlanePoly":
        return PlanePoly(self.p, {k: c for k, c in self.terms.items() if sum(k) == m})

    def order_at_origin(self) -> int:
        return min((i + j for i, j in self.terms), default=-1)

    def normalized(self) -> "PlanePoly":
        """Scale so the first nonzero coefficient in graded-lex order is 1."""
        if not self.terms:
            return self
        first = min(self.terms, key=lambda k: (i_plus_j(k), -k[0]))
        inv = pow(self.terms[first], self.p - 2, self.p)
        return self * inv

    def derivative(self, var: int) -> "PlanePoly":
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[var]
            if e:
                k = (i - 1, j) if var == 0 else (i, j - 1)
                out[k] = c * e
        return PlanePoly(self.p, out)

    def as_poly_in_y(self) -> list[UPoly]:
        """Coefficients in F_p[x] of y^0, y^1, ..."""
        dy = max((j for _, j in self.terms), default=-1)
        out: list[UPoly] = [[] for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            row = out[j]
            row.extend([0] * (i + 1 - len(row)))
            row[i] = c
        return [trim(r) for r in out]

    def restrict_y0(self) -> UPoly:
        """f(x, 0) as a univariate polynomial."""
        out = [0] * (max((i for i, j in self.terms if j == 0), default=-1) + 1)
        for (i, j), c in self.terms.items():
            if j == 0:
                out[i] = c
        return trim(out)

    def projective_transform(self, matrix, d: int | None = None) -> "PlanePoly":
        """Pull back under (x:y:1) -> M (x:y:1): homogenize at degree d,
        substitute each coordinate by its row of M, dehomogenize."""
        d = self.degree if d is None else d
        p = self.p
        rows = [PlanePoly(p, {(1, 0): r[0], (0, 1): r[1], (0, 0): r[2]}) for r in matrix]
        out = PlanePoly(p)
        powers = [[r ** e for e in range(d + 1)] for r in rows]
        for (i, j), c in self.terms.items():
            out = out + powers[0][i] * powers[1][j] * powers[2][d - i - j] * c
        return out

    def to_sparse(self) -> str:
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            parts.append(f"{self.terms[i, j]} x^{i} y^{j}")
        return " + ".join(parts) if parts else "0"


def i_plus_j(k):
    return k[0] + k[1]


def monomials(d: int) -> list[tuple[int, int]]:
    """Monomials of total degree <= d in graded order, x-heavy first."""
    return [(i, t - i) for t in range(d + 1) for i in range(t, -1, -1)]


def binary_form(poly: PlanePoly, m: int) -> UPoly:
    """Homogeneous degree-m part as coefficients of X^i Y^{m-i}, i = 0..m."""
    return [poly.coeff(i, m - i) for i in range(m + 1)]
