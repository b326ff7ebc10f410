"""Weyl groups as permutation groups on roots, with a base and strong
generating set (BSGS) built by deterministic Schreier-Sims."""

from __future__ import annotations

import hashlib
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .lattice import RootSystemData, reflect

FULL = "full"
PROJECTIVE = "projective"
MODES = (FULL, PROJECTIVE)

DEFAULT_PARTITION_CAP = 50_000_000


class PermError(ValueError):
    pass


def identity(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.int16)


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a o b, i.e. apply b first."""
    return a[b]


def inverse(a: np.ndarray) -> np.ndarray:
    inv = np.empty_like(a)
    inv[a] = np.arange(len(a), dtype=a.dtype)
    return inv


def is_identity(a: np.ndarray) -> bool:
    return bool(np.array_equal(a, np.arange(len(a))))


def _as_perm(images: Sequence[int], n: int) -> np.ndarray:
    p = np.asarray(images, dtype=np.int16)
    if p.shape != (n,) or not np.array_equal(np.sort(p), np.arange(n)):
        raise PermError("not a permutation of the ground set")
    return p


@dataclass
class PermAction:
    """A group given by permutation generators of range(ground_size)."""

    ground_size: int
    generators: list[np.ndarray]
    mode: str = FULL
    tau: str = ""
    # identifies the ordering of the ground set, used for cache keys
    fingerprint: str = ""

    def __post_init__(self):
        self.generators = [_as_perm(g, self.ground_size) for g in self.generators]


def build_action(roots: RootSystemData, mode: str = FULL) -> PermAction:
    """Simple reflections acting on the roots, or on root pairs {r, -r}."""
    if mode not in MODES:
        raise PermError(f"unknown mode {mode!r}")
    if mode == PROJECTIVE and roots.n != 8:
        raise PermError("projective mode is only defined for n = 8")
    index = roots.index
    gens = [
        [index[reflect(r, x)] for x in roots.all_roots] for r in roots.simple_roots
    ]
    digest = hashlib.sha256(roots.to_json().encode()).hexdigest()[:16]
    if mode == FULL:
        return PermAction(len(roots), gens, FULL, roots.type_label, digest)

    # pairs are labelled by their lexicographically smaller root
    reps = sorted({min(i, roots.negation_index(i)) for i in range(len(roots))})
    pair_of = {}
    for p, i in enumerate(reps):
        pair_of[i] = pair_of[roots.negation_index(i)] = p
    pgens = []
    for g in gens:
        images = [pair_of[g[i]] for i in reps]
        # well-defined on pairs: the image of -r is the negative of the image of r
        for i in reps:
            if pair_of[g[roots.negation_index(i)]] != pair_of[g[i]]:
                raise PermError("generator does not respect negation")
        pgens.append(images)
    return PermAction(len(reps), pgens, PROJECTIVE, roots.type_label, digest)


@dataclass
class BSGS:
    ground_size: int
    base: list[int]
    strong_generators: list[np.ndarray]
    # transversals[i] maps an orbit point x of base[i] to u with u(base[i]) = x
    transversals: list[dict[int, np.ndarray]]
    inverse_transversals: list[dict[int, np.ndarray]] = field(repr=False)

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(t) for t in self.transversals]

    def sift(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        """Strip g through levels start.. ; returns the residue and the level
        where stripping stopped (len(base) if it went all the way)."""
        h = g
        for i in range(start, len(self.base)):
            x = int(h[self.base[i]])
            uinv = self.inverse_transversals[i].get(x)
            if uinv is None:
                return h, i
            h = compose(uinv, h)
        return h, len(self.base)

    def contains(self, g: np.ndarray) -> bool:
        h, level = self.sift(np.asarray(g, dtype=np.int16))
        return level == len(self.base) and is_identity(h)

    def transversal_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Stacked coset representatives, per-level offsets and sizes, for
        the enumeration kernels."""
        levels = [t for t in self.transversals if len(t) > 1]
        sizes = np.array([len(t) for t in levels], dtype=np.int64)
        offsets = np.zeros(len(levels), dtype=np.int64)
        if len(levels):
            offsets[1:] = np.cumsum(sizes)[:-1]
        rows = [t[x] for t in levels for x in sorted(t)]
        dtype = np.uint8 if self.ground_size <= 256 else np.int16
        stacked = (
            np.array(rows, dtype=dtype)
            if rows
            else np.zeros((0, self.ground_size), dtype=dtype)
        )
        return stacked, offsets, sizes

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        """Uniform random element (smoke tests only)."""
        g = identity(self.ground_size)
        for t in self.transversals:
            keys = sorted(t)
            g = compose(g, t[keys[rng.integers(len(keys))]])
        return g


def _orbit_transversal(point: int, gens: list[np.ndarray], n: int):
    u = {point: identity(n)}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = int(s[x])
            if y not in u:
                u[y] = compose(s, u[x])
                queue.append(y)
    return u


def schreier_sims(action: PermAction) -> BSGS:
    n = action.ground_size
    gens = [g for g in action.generators if not is_identity(g)]
    base: list[int] = []
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    strong: list[list[np.ndarray]] = [
        [g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))
    ]
    trans = [_orbit_transversal(base[i], strong[i], n) for i in range(len(base))]
    inv = [{x: inverse(u) for x, u in t.items()} for t in trans]
    bsgs = BSGS(n, base, [], trans, inv)

    def refresh(level: int) -> None:
        trans[level] = _orbit_transversal(base[level], strong[level], n)
        inv[level] = {x: inverse(u) for x, u in trans[level].items()}

    i = len(base) - 1
    while i >= 0:
        grew = False
        for p in sorted(trans[i]):
            up = trans[i][p]
            for s in strong[i]:
                sp = int(s[p])
                sg = compose(inv[i][sp], compose(s, up))
                if is_identity(sg):
                    continue
                h, j = bsgs.sift(sg, i + 1)
                if j == len(base) and is_identity(h):
                    continue
                if j == len(base):
                    base.append(_first_moved(h))
                    strong.append([])
                    trans.append({})
                    inv.append({})
                for level in range(i + 1, j + 1):
                    strong[level].append(h)
                    refresh(level)
                i = j
                grew = True
                break
            if grew:
                break
        if not grew:
            i -= 1

    seen = []
    for level in strong:
        for g in level:
            if not any(g is s for s in seen):
                seen.append(g)
    bsgs.strong_generators = seen
    return bsgs


def _first_moved(g: np.ndarray) -> int:
    moved = np.nonzero(g != np.arange(len(g)))[0]
    if not len(moved):
        raise PermError("identity has no moved point")
    return int(moved[0])


def _canonical(subset: Iterable[int], n: int) -> tuple[int, ...]:
    s = tuple(sorted(int(x) for x in subset))
    if len(set(s)) != len(s):
        raise PermError("subset has duplicate elements")
    if s and (s[0] < 0 or s[-1] >= n):
        raise PermError("subset index out of range")
    return s


def orbit_of_subset(action: PermAction, subset: Iterable[int]) -> set[tuple[int, ...]]:
    """All images of a subset, each as a sorted index tuple."""
    start = _canonical(subset, action.ground_size)
    gens = [g.tolist() for g in action.generators]
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for g in gens:
            t = tuple(sorted(g[x] for x in s))
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def orbit_size(action: PermAction, subset: Iterable[int]) -> int:
    return len(orbit_of_subset(action, subset))


@dataclass
class OrbitTable:
    """Partition of all k-subsets into orbits.

    Subsets are indexed by colex rank; orbit_id[rank] names the orbit, and
    orbits are numbered by their smallest rank, which is the representative.
    """

    ground_size: int
    k: int
    sizes: list[int]
    representatives: list[tuple[int, ...]]
    orbit_id: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.sizes)

    def subsets(self) -> np.ndarray:
        """All k-subsets in colex order, shape (C(n,k), k)."""
        return _kernels.colex_subsets(self.ground_size, self.k)


def orbit_partition(
    action: PermAction, k: int, cap: int = DEFAULT_PARTITION_CAP
) -> OrbitTable:
    n = action.ground_size
    if not 0 <= k <= n:
        raise PermError(f"k={k} out of range")
    total = math.comb(n, k)
    if total > cap:
        raise PermError(
            f"C({n},{k}) = {total} subsets exceeds the partition cap {cap}; "
            "use Burnside orbit counting instead"
        )
    gens = np.array(action.generators, dtype=np.int64).reshape(-1, n)
    orbit_id, sizes, reps = _kernels.orbit_partition(gens, n, k, total)
    rep_sets = [
        tuple(int(x) for x in _kernels.colex_unrank(int(r), n, k)) for r in reps
    ]
    return OrbitTable(n, k, [int(s) for s in sizes], rep_sets, orbit_id)
