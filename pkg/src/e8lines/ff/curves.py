"""Plane curves through 8 points over F_p: general position, interpolation
of line classes, tangent cones, local intersection numbers and the
coefficient criterion for t_m singularities."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Sequence

from ..lattice import LineClass
from .field import (
    PrimeField,
    UPoly,
    deg,
    is_squarefree,
    nullspace,
    rank,
    trim,
    ugcd,
)
from .plane import PlanePoly, binary_form, monomials

Point = tuple[int, int]

REFERENCE_POINTS: tuple[Point, ...] = (
    (0, 0), (1, 0), (0, 1), (1, 1), (2, 15), (15, 4), (11, 15), (12, 16),
)


class GeometryError(ValueError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class CommonComponent(GeometryError):
    pass


@dataclass(frozen=True)
class PointConfig:
    """Points of P^2 over F_p, homogeneous (x, y, z) with z in {0, 1}."""

    field: PrimeField
    points: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        p = self.field.p
        norm = tuple(_normalize_projective(q, p) for q in self.points)
        if len(set(norm)) != len(norm):
            raise GeometryError("points must be pairwise distinct")
        object.__setattr__(self, "points", norm)

    @classmethod
    def affine(cls, points: Sequence[Point], p: int = 19) -> "PointConfig":
        return cls(PrimeField(p), tuple((x, y, 1) for x, y in points))

    @property
    def p(self) -> int:
        return self.field.p

    def affine_points(self) -> list[Point]:
        if any(z == 0 for _, _, z in self.points):
            raise GeometryError("configuration has points at infinity")
        return [(x, y) for x, y, _ in self.points]

    def transformed(self, matrix) -> "PointConfig":
        p = self.p
        out = []
        for q in self.points:
            out.append(tuple(sum(matrix[r][c] * q[c] for c in range(3)) % p for r in range(3)))
        return PointConfig(self.field, tuple(out))


def _normalize_projective(q, p):
    q = tuple(int(c) % p for c in q)
    if len(q) == 2:
        q = q + (1,)
    pivot = next((c for c in reversed(q) if c), None)
    if pivot is None:
        raise GeometryError("(0:0:0) is not a point")
    inv = pow(pivot, p - 2, p)
    return tuple((c * inv) % p for c in q)


@dataclass(frozen=True)
class GeneralPosition:
    collinear_ok: bool
    conic_ok: bool
    cubic_ok: bool

    def __bool__(self):
        return self.collinear_ok and self.conic_ok and self.cubic_ok


def _hom_monomials(d: int) -> list[tuple[int, int, int]]:
    return [(i, j, d - i - j) for i, j in monomials(d) if i + j <= d]


def _hom_eval_row(mons, q, p):
    return [pow(q[0], a, p) * pow(q[1], b, p) * pow(q[2], c, p) % p for a, b, c in mons]


def _hom_partial_row(mons, q, var, p):
    row = []
    for m in mons:
        e = m[var]
        if e == 0:
            row.append(0)
            continue
        mm = list(m)
        mm[var] -= 1
        row.append(e * pow(q[0], mm[0], p) * pow(q[1], mm[1], p) * pow(q[2], mm[2], p) % p)
    return row


def general_position_check(cfg: PointConfig) -> GeneralPosition:
    p = cfg.p
    pts = cfg.points
    collinear_ok = all(
        rank([list(a), list(b), list(c)], p) == 3 for a, b, c in itertools.combinations(pts, 3)
    )
    conics = _hom_monomials(2)
    conic_ok = all(
        rank([_hom_eval_row(conics, q, p) for q in six], p) == 6
        for six in itertools.combinations(pts, 6)
    )
    cubics = _hom_monomials(3)
    cubic_ok = True
    for k, q in enumerate(pts):
        rows = [_hom_eval_row(cubics, r, p) for i, r in enumerate(pts) if i != k]
        rows.append(_hom_eval_row(cubics, q, p))
        rows.extend(_hom_partial_row(cubics, q, v, p) for v in range(3))
        if rank(rows, p) < len(cubics):
            cubic_ok = False
            break
    return GeneralPosition(collinear_ok, conic_ok, cubic_ok)


# ---------------------------------------------------------- line classes --


@dataclass(frozen=True)
class LineCurveClass:
    """[d; mu_1, ..., mu_8]; mu_i = -1 marks the exceptional curve over p_i."""

    d: int
    mu: tuple[int, ...]

    def __post_init__(self):
        if any(m < -1 for m in self.mu):
            raise GeometryError(f"invalid multiplicities {self.mu}")
        positive = sum(m * m for m in self.mu if m >= 0)
        neg = sum(1 for m in self.mu if m < 0)
        # lattice norm and anticanonical degree
        if self.d * self.d - positive - neg != -1 or 3 * self.d - sum(self.mu) != 1:
            raise GeometryError(f"{self} is not a line class")

    @classmethod
    def from_line(cls, line: LineClass) -> "LineCurveClass":
        return cls(line.degree, line.multiplicities)

    @classmethod
    def parse(cls, text: str) -> "LineCurveClass":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")) or ";" not in body:
            raise GeometryError(f"cannot parse class {text!r}")
        d, mus = body[1:-1].split(";")
        return cls(int(d), tuple(int(m) for m in mus.split(",")))

    def to_line(self) -> LineClass:
        return LineClass.from_multiplicities(self.d, self.mu)

    @property
    def exceptional_point(self) -> int | None:
        """Index i with mu_i = -1, if this is the class e_i."""
        return self.mu.index(-1) if -1 in self.mu else None

    def __str__(self):
        return f"[{self.d}; {', '.join(map(str, self.mu))}]"


def intersection_number(a: LineCurveClass, b: LineCurveClass) -> int:
    return a.d * b.d - sum(x * y for x, y in zip(a.mu, b.mu))


def _vanishing_rows(d: int, q: Point, mult: int, p: int) -> list[list[int]]:
    """Conditions that every Taylor coefficient of total order < mult at q vanishes."""
    mons = monomials(d)
    rows = []
    for s in range(mult):
        for a in range(s + 1):
            b = s - a
            row = []
            for i, j in mons:
                if i < a or j < b:
                    row.append(0)
                else:
                    row.append(
                        comb(i, a) * comb(j, b) * pow(q[0], i - a, p) * pow(q[1], j - b, p) % p
                    )
            rows.append(row)
    return rows


def interpolation_system(cls: LineCurveClass, cfg: PointConfig) -> list[list[int]]:
    pts = cfg.affine_points()
    rows = []
    for q, m in zip(pts, cls.mu):
        rows.extend(_vanishing_rows(cls.d, q, m, cfg.p))
    return rows


def interpolate_curve(cls: LineCurveClass, cfg: PointConfig) -> PlanePoly:
    if cls.exceptional_point is not None:
        raise GeometryError(f"{cls} is exceptional and has no plane curve")
    p = cfg.p
    rows = interpolation_system(cls, cfg)
    basis = nullspace(rows, len(monomials(cls.d)), p) if rows else None
    if basis is None:
        raise DegenerateConfiguration("empty interpolation system")
    if len(basis) != 1:
        raise DegenerateConfiguration(
            f"{cls}: solution space has dimension {len(basis)}, expected 1"
        )
    f = PlanePoly.from_dense(p, monomials(cls.d), basis[0]).normalized()
    for q, m in zip(cfg.affine_points(), cls.mu):
        got = f.translate(q).order_at_origin()
        if got != m:
            raise DegenerateConfiguration(f"{cls}: multiplicity {got} at {q}, expected {m}")
    return f


# -------------------------------------------------------- local geometry --


def binary_form_is_squarefree(form: Sequence[int], p: int) -> bool:
    """form[i] is the coefficient of X^i Y^{m-i}; squarefree over the
    algebraic closure means m distinct linear factors."""
    f = trim(list(form))
    if not f:
        return False
    m = len(form) - 1
    # Y^s divides the form iff the coefficients of X^m, ..., X^{m-s+1} vanish
    s = m - deg(f)
    if s > 1:
        return False
    return is_squarefree(f, p) if deg(f) > 0 else True


def binary_forms_coprime(*forms: Sequence[int], p: int) -> bool:
    """No linear factor common to all forms."""
    polys = [trim(list(f)) for f in forms]
    if any(not f for f in polys):
        return False
    y_divides_all = all(len(f) - 1 - deg(trim(list(f))) >= 1 for f in forms)
    if y_divides_all:
        return False
    g = polys[0]
    for f in polys[1:]:
        g = ugcd(g, f, p)
    return deg(g) == 0


@dataclass(frozen=True)
class TangentCone:
    multiplicity: int
    form: tuple[int, ...]
    ordinary: bool


def multiplicity_and_tangent_cone(f: PlanePoly, q: Point) -> TangentCone:
    if not f:
        raise GeometryError("zero polynomial")
    g = f.translate(q)
    m = g.order_at_origin()
    form = tuple(binary_form(g, m))
    return TangentCone(m, form, binary_form_is_squarefree(form, f.p))


def local_intersection_multiplicity(f: PlanePoly, g: PlanePoly, q: Point) -> int:
    """I_q(f, g) by the recursive reduction on restrictions to y = 0."""
    p = f.p
    a, b = f.translate(q), g.translate(q)
    # a finite local number is at most deg f * deg g, while every pass through
    # the y-division step adds at least 1, so exceeding it means I_q is infinite
    bound = max(f.degree, 0) * max(g.degree, 0)
    total = 0
    while True:
        if a(0, 0) or b(0, 0):
            return total
        ra, rb = a.restrict_y0(), b.restrict_y0()
        if not ra and not rb:
            raise CommonComponent("curves share the component y = 0 through q")
        if not ra or not rb:
            if not ra:
                a, b = b, a
                ra, rb = rb, ra
            # now b = y * h
            total += next(i for i, c in enumerate(ra) if c)
            if total > bound:
                raise CommonComponent("curves share a component through q")
            b = PlanePoly(p, {(i, j - 1): c for (i, j), c in b.terms.items()})
            continue
        if deg(ra) > deg(rb):
            a, b = b, a
            ra, rb = rb, ra
        # lower deg b(x, 0) by cancelling its leading term against a
        shift = deg(rb) - deg(ra)
        mono = PlanePoly(p, {(shift, 0): rb[-1]})
        b = b * ra[-1] - a * mono


# ------------------------------------------------------- t_m criterion --


def tm_singularity_check(f: PlanePoly, m: int) -> bool:
    """Whether f has, at the origin, m smooth branches tangent to y = 0 that
    pairwise meet with intersection number 2.

    The frame is normalized: the point is (0, 0) and the tangent line y = 0.
    Coefficients beyond the degree of f count as zero.
    """
    if m < 1:
        raise GeometryError(f"m must be positive, got {m}")
    if any(i + 2 * j < 2 * m for (i, j) in f.terms):
        return False
    # coefficient of z^j is a_{2(m-j), j}
    aux = trim([f.coeff(2 * (m - j), j) for j in range(m + 1)])
    return deg(aux) == m and is_squarefree(aux, f.p)
