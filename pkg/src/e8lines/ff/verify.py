"""Transversality checks for pairs and triples of lines on the blow-up of
P^2 at 8 points over F_p, and the full verification report."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Sequence

from ..lattice import enumerate_lines
from .curves import (
    REFERENCE_POINTS,
    GeometryError,
    LineCurveClass,
    PointConfig,
    binary_form_is_squarefree,
    binary_forms_coprime,
    general_position_check,
    interpolate_curve,
    intersection_number,
    local_intersection_multiplicity,
    multiplicity_and_tangent_cone,
)
from .field import (
    ExtensionField,
    UPoly,
    deg,
    det_upoly,
    ext_poly_gcd,
    irreducible_factor,
    is_squarefree,
    rank,
    root_multiplicity,
    uexact_div,
    ugcd,
    upow,
)
from .plane import PlanePoly

DEFAULT_SEED = 20240601
TRANSFORM_BUDGET = 60
# charts in which a nontrivial repeated or common root must persist
SQUAREFREE_RETRIES = 6

REFERENCE_CLASSES: dict[int, LineCurveClass] = {
    i: LineCurveClass.parse(s)
    for i, s in {
        1: "[0; -1, 0, 0, 0, 0, 0, 0, 0]",
        2: "[3; 2, 1, 1, 1, 1, 1, 1, 0]",
        3: "[6; 3, 2, 2, 2, 2, 2, 2, 2]",
        4: "[1; 1, 1, 0, 0, 0, 0, 0, 0]",
        5: "[2; 1, 0, 1, 1, 1, 1, 0, 0]",
        6: "[3; 2, 0, 1, 1, 1, 1, 1, 1]",
        7: "[2; 1, 1, 1, 1, 1, 0, 0, 0]",
        8: "[6; 2, 3, 2, 2, 2, 2, 2, 2]",
        9: "[6; 2, 2, 3, 2, 2, 2, 2, 2]",
    }.items()
}

# (first, second, expected intersection number)
REFERENCE_PAIRS = ((1, 2, 2), (1, 3, 3))
# (labels, expected sorted intersection triple)
REFERENCE_TRIPLES = (
    ((1, 4, 5), (1, 1, 1)),
    ((1, 4, 6), (1, 1, 2)),
    ((1, 3, 7), (1, 1, 3)),
    ((1, 6, 9), (1, 2, 2)),
    ((1, 6, 8), (2, 2, 2)),
)


class TransformBudgetExhausted(GeometryError):
    pass


def resultant_y(f: PlanePoly, g: PlanePoly) -> UPoly:
    """Res_y(f, g) in F_p[x] via the Sylvester matrix."""
    p = f.p
    a, b = f.as_poly_in_y(), g.as_poly_in_y()
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        return []
    size = m + n
    if size == 0:
        return [1]
    rows = []
    for i in range(n):
        row: list[UPoly] = [[] for _ in range(size)]
        for j, c in enumerate(reversed(a)):
            row[i + j] = list(c)
        rows.append(row)
    for i in range(m):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(b)):
            row[i + j] = list(c)
        rows.append(row)
    return det_upoly(rows, p)


def random_projective_matrix(p: int, rng: random.Random):
    while True:
        m = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        if rank(m, p) == 3:
            return m


def matrix_inverse(m, p):
    from .field import rref

    aug = [list(row) + [int(i == j) for j in range(3)] for i, row in enumerate(m)]
    red, pivots = rref(aug, p)
    if pivots[:3] != [0, 1, 2]:
        raise GeometryError("singular matrix")
    return [row[3:] for row in red]


@dataclass
class _Chart:
    """Curves and base points after a random projective change of coordinates."""

    curves: list[PlanePoly]
    points: list[tuple[int, int] | None]  # None: moved to the line at infinity


def _random_chart(curves, cfg: PointConfig, rng: random.Random) -> _Chart:
    p = cfg.p
    m = random_projective_matrix(p, rng)
    minv = matrix_inverse(m, p)
    moved = cfg.transformed(m).points
    pts = [(x, y) if z == 1 else None for x, y, z in moved]
    # f'(v) = f(M^{-1} v) vanishes at M q exactly when f vanishes at q
    return _Chart([f.projective_transform(minv) for f in curves], pts)


@dataclass
class PairProfile:
    m: int
    off_base_reduced: bool
    base_contacts_ok: bool
    base_contacts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.off_base_reduced and self.base_contacts_ok


@dataclass
class TripleProfile:
    t: tuple[int, int, int]
    common_point_free: bool
    detail: str = ""


class Verifier:
    """Checks on one 8-point configuration, caching interpolated curves."""

    def __init__(self, cfg: PointConfig, seed: int = DEFAULT_SEED):
        self.cfg = cfg
        self.p = cfg.p
        self.rng = random.Random(seed)
        self._curves: dict[LineCurveClass, PlanePoly] = {}

    def curve(self, cls: LineCurveClass) -> PlanePoly:
        if cls not in self._curves:
            self._curves[cls] = interpolate_curve(cls, self.cfg)
        return self._curves[cls]

    # ---------------------------------------------------------- pairs --

    def base_contacts(self, a: LineCurveClass, b: LineCurveClass) -> dict[int, int]:
        """I_{p_i} for every base point through which both curves pass."""
        fa, fb = self.curve(a), self.curve(b)
        pts = self.cfg.affine_points()
        return {
            i: local_intersection_multiplicity(fa, fb, pts[i])
            for i in range(len(pts))
            if a.mu[i] > 0 and b.mu[i] > 0
        }

    def off_base_resultant(
        self, a: LineCurveClass, b: LineCurveClass, contacts: dict[int, int], chart: _Chart,
        ia: int, ib: int,
    ) -> UPoly | None:
        """Res_y of the pair in the chart with the base-point factors divided
        out; None when the chart is unsuitable."""
        p = self.p
        fa, fb = chart.curves[ia], chart.curves[ib]
        if fa.coeff(0, a.d) == 0 or fb.coeff(0, b.d) == 0:
            return None
        # expected order of the resultant at each base x-coordinate
        expected: dict[int, int] = {}
        for i, mult in contacts.items():
            q = chart.points[i]
            if q is None:
                return None
            expected[q[0]] = expected.get(q[0], 0) + mult
        res = resultant_y(fa, fb)
        if deg(res) != a.d * b.d:
            return None
        for x0, mult in expected.items():
            if root_multiplicity(res, x0, p) != mult:
                # an off-base intersection shares this x-coordinate
                return None
            res = uexact_div(res, upow([(-x0) % p, 1], mult, p), p)
        return res

    def pair_profile(self, a: LineCurveClass, b: LineCurveClass) -> PairProfile:
        if a == b:
            raise GeometryError("classes must be distinct")
        m = intersection_number(a, b)
        if a.exceptional_point is not None and b.exceptional_point is not None:
            return PairProfile(m, True, m == 0)
        if b.exceptional_point is not None:
            a, b = b, a
        if a.exceptional_point is not None:
            i = a.exceptional_point
            mu = b.mu[i]
            if mu == 0:
                return PairProfile(m, True, True)
            cone = multiplicity_and_tangent_cone(self.curve(b), self.cfg.affine_points()[i])
            ok = cone.multiplicity == mu and cone.ordinary
            return PairProfile(m, True, ok, {i: cone.multiplicity})

        contacts = self.base_contacts(a, b)
        base_ok = all(contacts[i] == a.mu[i] * b.mu[i] for i in contacts)
        usable = 0
        for _ in range(TRANSFORM_BUDGET):
            chart = _random_chart([self.curve(a), self.curve(b)], self.cfg, self.rng)
            res = self.off_base_resultant(a, b, contacts, chart, 0, 1)
            if res is None:
                continue
            usable += 1
            if deg(res) != m:
                return PairProfile(m, False, base_ok, contacts)
            if deg(res) <= 0 or is_squarefree(res, self.p):
                return PairProfile(m, True, base_ok, contacts)
            # a repeated root may be two points sharing an x-coordinate
            if usable >= SQUAREFREE_RETRIES:
                return PairProfile(m, False, base_ok, contacts)
        raise TransformBudgetExhausted(f"no usable chart for {a}, {b}")

    # -------------------------------------------------------- triples --

    def _base_triple_ok(self, classes: Sequence[LineCurveClass]) -> tuple[bool, str]:
        pts = self.cfg.affine_points()
        for i in range(len(pts)):
            present = [c for c in classes if c.mu[i] != 0]
            if len(present) < 3:
                continue
            exc = [c for c in present if c.exceptional_point == i]
            others = [c for c in present if c.exceptional_point != i]
            forms = [
                multiplicity_and_tangent_cone(self.curve(c), pts[i]).form for c in others
            ]
            if not binary_forms_coprime(*forms, p=self.p):
                kind = "tangent directions" if exc else "tangent lines"
                return False, f"common {kind} at p{i + 1}"
        return True, ""

    def _common_point_off_base(self, classes: Sequence[LineCurveClass]) -> tuple[bool, str]:
        """(free, detail) for common points of three plane curves away from
        the base points."""
        a, b, c = classes
        cab = self.base_contacts(a, b)
        cac = self.base_contacts(a, c)
        curves = [self.curve(x) for x in classes]
        hits = 0
        for _ in range(TRANSFORM_BUDGET):
            chart = _random_chart(curves, self.cfg, self.rng)
            if chart.curves[2].coeff(0, c.d) == 0:
                continue
            rab = self.off_base_resultant(a, b, cab, chart, 0, 1)
            rac = self.off_base_resultant(a, c, cac, chart, 0, 2)
            if rab is None or rac is None:
                continue
            g = ugcd(rab, rac, self.p)
            if deg(g) <= 0:
                return True, ""
            hits += 1
            if hits >= SQUAREFREE_RETRIES:
                if self._confirm_common_root(chart, g):
                    return False, "common point off the base points"
                return True, "resultant gcd persisted but has no common root"
        raise TransformBudgetExhausted("no usable chart for triple")

    def _confirm_common_root(self, chart: _Chart, g: UPoly) -> bool:
        """Search each irreducible factor of g for an x where all three
        curves share a y-root, working in F_p[t]/(factor)."""
        p = self.p
        rest = list(g)
        while deg(rest) > 0:
            phi = irreducible_factor(rest, p, self.rng)
            ext = ExtensionField(p, tuple(phi))
            x0 = ext.reduce([0, 1])
            polys = []
            for f in chart.curves:
                coeffs = [self._eval_in_ext(c, x0, ext) for c in f.as_poly_in_y()]
                polys.append(coeffs)
            h = ext_poly_gcd(polys[0], polys[1], ext)
            h = ext_poly_gcd(h, polys[2], ext)
            if len(h) > 1:
                return True
            while deg(ugcd(rest, phi, p)) > 0 and deg(rest) >= deg(phi):
                rest = uexact_div(rest, phi, p)
        return False

    @staticmethod
    def _eval_in_ext(c: UPoly, x0: UPoly, ext: ExtensionField) -> UPoly:
        acc: UPoly = []
        for coef in reversed(c):
            acc = _add_const(ext.mul(acc, x0), coef, ext.p)
        return acc

    def triple_profile(self, a, b, c) -> TripleProfile:
        classes = (a, b, c)
        if len(set(classes)) != 3:
            raise GeometryError("classes must be distinct")
        t = tuple(sorted((intersection_number(a, b), intersection_number(b, c), intersection_number(a, c))))
        ok, detail = self._base_triple_ok(classes)
        if not ok:
            return TripleProfile(t, False, detail)
        if all(x.exceptional_point is None for x in classes):
            ok, detail = self._common_point_off_base(classes)
        return TripleProfile(t, ok, detail)


def _add_const(f: UPoly, c: int, p: int) -> UPoly:
    out = list(f) or [0]
    out[0] = (out[0] + c) % p
    while out and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------- report --


def verification_report(
    cfg: PointConfig,
    seed: int = DEFAULT_SEED,
    all_classes: bool = False,
    classes: dict[int, LineCurveClass] | None = None,
) -> dict:
    classes = REFERENCE_CLASSES if classes is None else classes
    checks = []

    def record(name, passed, **detail):
        checks.append({"check": name, "pass": bool(passed), **detail})

    gp = general_position_check(cfg)
    record("general position", bool(gp), **asdict(gp))
    report = {"p": cfg.p, "points": [list(q[:2]) for q in cfg.points], "seed": seed}
    if not gp:
        report["checks"] = checks
        report["ok"] = False
        return report

    ver = Verifier(cfg, seed)
    polys = {}
    for label, cls in classes.items():
        if cls.exceptional_point is not None:
            polys[label] = {"class": str(cls), "exceptional": True}
            continue
        try:
            f = ver.curve(cls)
            polys[label] = {"class": str(cls), "equation": f.to_sparse()}
            record(f"interpolate l{label}", True, cls=str(cls))
        except GeometryError as exc:
            record(f"interpolate l{label}", False, cls=str(cls), error=str(exc))

    if classes is REFERENCE_CLASSES:
        for i, j, m in REFERENCE_PAIRS:
            prof = ver.pair_profile(classes[i], classes[j])
            record(
                f"pair l{i},l{j}",
                prof.ok and prof.m == m,
                m=prof.m,
                expected_m=m,
                off_base_reduced=prof.off_base_reduced,
                base_contacts_ok=prof.base_contacts_ok,
            )
        for labels, t in REFERENCE_TRIPLES:
            prof = ver.triple_profile(*(classes[i] for i in labels))
            record(
                "triple " + ",".join(f"l{i}" for i in labels),
                prof.common_point_free and prof.t == t,
                t=list(prof.t),
                expected_t=list(t),
                common_point_free=prof.common_point_free,
            )

    if all_classes:
        failures = []
        count = 0
        for line in enumerate_lines(8):
            cls = LineCurveClass.from_line(line)
            if cls.exceptional_point is not None:
                continue
            count += 1
            try:
                ver.curve(cls)
            except GeometryError as exc:
                failures.append(f"{cls}: {exc}")
        record("interpolate all classes", not failures, interpolated=count, failures=failures)

    report["curves"] = {str(k): v for k, v in polys.items()}
    report["checks"] = checks
    report["ok"] = all(c["pass"] for c in checks)
    return report


def reference_config() -> PointConfig:
    return PointConfig.affine(REFERENCE_POINTS, 19)
