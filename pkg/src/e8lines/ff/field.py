"""Arithmetic over a prime field F_p: univariate polynomials, exact linear
algebra, determinants over F_p[x], and root-finding helpers.

Univariate polynomials are lists of coefficients in [0, p), lowest degree
first, with no trailing zeros (the zero polynomial is []).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

UPoly = list[int]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = 19

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p) or self.p >= 2**31:
            raise ValueError(f"modulus must be an odd prime below 2^31, got {self.p}")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)


def trim(f: UPoly) -> UPoly:
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: UPoly) -> int:
    return len(f) - 1


def uadd(f: UPoly, g: UPoly, p: int) -> UPoly:
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def usub(f: UPoly, g: UPoly, p: int) -> UPoly:
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def uscale(f: UPoly, c: int, p: int) -> UPoly:
    return trim([(a * c) % p for a in f])


def umul(f: UPoly, g: UPoly, p: int) -> UPoly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def udivmod(f: UPoly, g: UPoly, p: int) -> tuple[UPoly, UPoly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    inv_lead = pow(g[-1], p - 2, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(r) >= len(g) and r:
        c = (r[-1] * inv_lead) % p
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % p
        trim(r)
    return trim(q), r


def uexact_div(f: UPoly, g: UPoly, p: int) -> UPoly:
    q, r = udivmod(f, g, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def umonic(f: UPoly, p: int) -> UPoly:
    if not f:
        return []
    return uscale(f, pow(f[-1], p - 2, p), p)


def ugcd(f: UPoly, g: UPoly, p: int) -> UPoly:
    a, b = trim(list(f)), trim(list(g))
    while b:
        a, b = b, udivmod(a, b, p)[1]
    return umonic(a, p)


def uderiv(f: UPoly, p: int) -> UPoly:
    return trim([(i * f[i]) % p for i in range(1, len(f))])


def ueval(f: UPoly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def upow(f: UPoly, e: int, p: int) -> UPoly:
    result: UPoly = [1]
    for _ in range(e):
        result = umul(result, f, p)
    return result


def upow_mod(f: UPoly, e: int, m: UPoly, p: int) -> UPoly:
    result: UPoly = [1]
    base = udivmod(f, m, p)[1]
    while e:
        if e & 1:
            result = udivmod(umul(result, base, p), m, p)[1]
        e >>= 1
        if e:
            base = udivmod(umul(base, base, p), m, p)[1]
    return result


def is_squarefree(f: UPoly, p: int) -> bool:
    """Over a perfect field, f is squarefree iff gcd(f, f') = 1.  A p-th
    power has f' = 0, so the gcd is f itself and the test fails as it should."""
    if not f:
        return False
    return deg(ugcd(f, uderiv(f, p), p)) == 0


def root_multiplicity(f: UPoly, a: int, p: int) -> int:
    """Order of vanishing of f at x = a."""
    if not f:
        raise ValueError("zero polynomial vanishes to infinite order")
    lin = [(-a) % p, 1]
    m = 0
    while True:
        q, r = udivmod(f, lin, p)
        if r:
            return m
        f = q
        m += 1


# ------------------------------------------------------------- matrices --


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p; returns (rows, pivot columns)."""
    m = [[x % p for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list[int]], p: int) -> int:
    return len(rref(rows, p)[1]) if rows else 0


def nullspace(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def det_upoly(matrix: list[list[UPoly]], p: int) -> UPoly:
    """Determinant of a square matrix over F_p[x] by fraction-free Bareiss
    elimination."""
    m = [[list(e) for e in row] for row in matrix]
    n = len(m)
    if n == 0:
        return [1]
    sign = 1
    prev: UPoly = [1]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = usub(umul(m[k][k], m[i][j], p), umul(m[i][k], m[k][j], p), p)
                m[i][j] = uexact_div(num, prev, p)
            m[i][k] = []
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else uscale(d, p - 1, p)


# ------------------------------------------------------ factor finding --


def distinct_degree_parts(f: UPoly, p: int) -> list[tuple[int, UPoly]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    parts = []
    rest = umonic(f, p)
    h: UPoly = [0, 1]
    e = 0
    while deg(rest) >= 2 * (e + 1):
        e += 1
        h = upow_mod(h, p, rest, p)
        g = ugcd(rest, usub(h, [0, 1], p), p)
        if deg(g) > 0:
            parts.append((e, g))
            rest = uexact_div(rest, g, p)
            h = udivmod(h, rest, p)[1]
    if deg(rest) > 0:
        parts.append((deg(rest), rest))
    return parts


def equal_degree_factor(f: UPoly, e: int, p: int, rng: random.Random) -> UPoly:
    """One irreducible factor of degree e of f (Cantor-Zassenhaus, odd p)."""
    f = umonic(f, p)
    while deg(f) > e:
        a = trim([rng.randrange(p) for _ in range(deg(f))])
        if deg(a) < 1:
            continue
        # every proper monic divisor is again a product of degree-e factors
        g = ugcd(f, a, p)
        if 0 < deg(g) < deg(f):
            f = g
            continue
        b = usub(upow_mod(a, (p**e - 1) // 2, f, p), [1], p)
        g = ugcd(f, b, p)
        if 0 < deg(g) < deg(f):
            f = g
    return f


def irreducible_factor(f: UPoly, p: int, rng: random.Random) -> UPoly:
    """Some monic irreducible factor of a nonconstant f."""
    sq = umonic(f, p)
    d = ugcd(sq, uderiv(sq, p), p)
    if deg(d) > 0:
        if not uderiv(sq, p):
            # f(x) = g(x^p); its p-th root shares the roots of f
            return irreducible_factor([sq[i] for i in range(0, len(sq), p)], p, rng)
        return irreducible_factor(d, p, rng) if deg(d) < deg(sq) else sq
    e, part = distinct_degree_parts(sq, p)[0]
    return equal_degree_factor(part, e, p, rng)


@dataclass(frozen=True)
class ExtensionField:
    """F_{p^e} = F_p[t] / (modulus), modulus monic irreducible.

    Elements are UPoly of degree < e.
    """

    p: int
    modulus: tuple[int, ...]

    def reduce(self, a: UPoly) -> UPoly:
        return udivmod(trim(list(a)), list(self.modulus), self.p)[1]

    def mul(self, a: UPoly, b: UPoly) -> UPoly:
        return self.reduce(umul(a, b, self.p))

    def inv(self, a: UPoly) -> UPoly:
        if not a:
            raise ZeroDivisionError("0 has no inverse")
        e = len(self.modulus) - 1
        return upow_mod(a, self.p**e - 2, list(self.modulus), self.p)


def ext_poly_gcd(f: list[UPoly], g: list[UPoly], field: ExtensionField) -> list[UPoly]:
    """gcd in F_{p^e}[y] of polynomials with coefficients in F_{p^e}."""
    p = field.p

    def strip(h):
        h = [field.reduce(c) for c in h]
        while h and not h[-1]:
            h.pop()
        return h

    a, b = strip(f), strip(g)
    while b:
        r = list(a)
        inv_lead = field.inv(b[-1])
        while len(r) >= len(b) and r:
            c = field.mul(r[-1], inv_lead)
            shift = len(r) - len(b)
            for i, bc in enumerate(b):
                r[shift + i] = usub(r[shift + i], field.mul(c, bc), p)
            r = strip(r)
        a, b = b, r
    if a:
        inv_lead = field.inv(a[-1])
        a = [field.mul(c, inv_lead) for c in a]
    return a
