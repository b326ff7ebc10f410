"""Exact cycle-type census of a permutation group, enumerated element by
element from its transversal chain, plus the on-disk cache format."""

from __future__ import annotations

import os
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _kernels
from .perm import BSGS, PermAction, schreier_sims

CycleType = tuple[tuple[int, int], ...]

CACHE_VERSION = "v1"
CACHE_ENV = "E8LINES_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else Path.home() / ".cache" / "e8lines"


class CensusError(RuntimeError):
    pass


@dataclass
class CycleTypeCensus:
    """Mapping cycle type -> number of group elements of that type.

    A cycle type is a tuple of (length, multiplicity) pairs sorted by length.
    """

    table: dict[CycleType, int]
    group_order: int
    ground_size: int

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        total = sum(self.table.values())
        if total != self.group_order:
            raise CensusError(f"census sums to {total}, group order is {self.group_order}")
        for ctype, count in self.table.items():
            if count <= 0:
                raise CensusError(f"non-positive count for {ctype}")
            if sum(length * mult for length, mult in ctype) != self.ground_size:
                raise CensusError(f"cycle type {ctype} does not cover the ground set")
        ident = ((1, self.ground_size),) if self.ground_size else ()
        if self.table.get(ident) != 1:
            raise CensusError("identity must occur exactly once")

    def fixed_point_sum(self) -> int:
        """sum over g of |Fix(g)|; equals |G| times the number of point orbits."""
        return sum(count * dict(ctype).get(1, 0) for ctype, count in self.table.items())

    def __len__(self):
        return len(self.table)

    def __eq__(self, other):
        return (
            isinstance(other, CycleTypeCensus)
            and self.table == other.table
            and self.group_order == other.group_order
            and self.ground_size == other.ground_size
        )


def cycle_type(perm) -> CycleType:
    perm = list(perm)
    seen = [False] * len(perm)
    lengths: Counter = Counter()
    for x in range(len(perm)):
        if seen[x]:
            continue
        length = 0
        y = x
        while not seen[y]:
            seen[y] = True
            y = perm[y]
            length += 1
        lengths[length] += 1
    return tuple(sorted(lengths.items()))


def _run_chunk(args) -> Counter:
    trans, offsets, sizes, n, lo, hi = args
    weights = _kernels.cycle_hash_weights(n)
    slots = _kernels.TABLE_SLOTS
    while True:
        keys, used, vecs, ndist, counts, ok = _kernels.census_kernel(
            trans, offsets, sizes, n, lo, hi, weights, slots
        )
        if ok:
            break
        slots *= 4
    out: Counter = Counter()
    for slot in np.nonzero(used)[0]:
        row = vecs[slot]
        ctype = tuple((int(length), int(row[length])) for length in np.nonzero(row)[0])
        out[ctype] += int(counts[slot])
    return out


def _chunks(top: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, top))
    edges = np.linspace(0, top, parts + 1).round().astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def enumerate_cycle_types(
    bsgs: BSGS,
    workers: int = 1,
    partitions: int | None = None,
    progress: bool = False,
) -> CycleTypeCensus:
    """Brute-force census of all |G| elements.

    The top transversal level is split into ``partitions`` contiguous ranges
    (default: one per top-level coset representative when reporting progress,
    else one per worker); each range yields a private census and the pieces
    are summed.
    """
    n = bsgs.ground_size
    trans, offsets, sizes = bsgs.transversal_arrays()
    if len(sizes) == 0:
        return CycleTypeCensus({cycle_type(range(n)): 1}, 1, n)

    top = int(sizes[0])
    if partitions is None:
        partitions = top if progress else workers
    jobs = [(trans, offsets, sizes, n, lo, hi) for lo, hi in _chunks(top, partitions)]

    total: Counter = Counter()
    started = time.monotonic()

    def report(done):
        if progress:
            elapsed = time.monotonic() - started
            print(
                f"\rcensus: {done}/{len(jobs)} chunks, {elapsed:.0f}s",
                end="",
                file=sys.stderr,
                flush=True,
            )

    if workers <= 1:
        for i, job in enumerate(jobs):
            total.update(_run_chunk(job))
            report(i + 1)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for i, part in enumerate(pool.map(_run_chunk, jobs)):
                total.update(part)
                report(i + 1)
    if progress:
        print(file=sys.stderr)
    return CycleTypeCensus(dict(total), bsgs.order, n)


def format_cycle_type(ctype: CycleType) -> str:
    return " ".join(f"{length}^{mult}" for length, mult in ctype)


def parse_cycle_type(text: str) -> CycleType:
    pairs = []
    for token in text.split():
        length, mult = token.split("^")
        pairs.append((int(length), int(mult)))
    ctype = tuple(pairs)
    if list(ctype) != sorted(ctype) or len({l for l, _ in ctype}) != len(ctype):
        raise CensusError(f"malformed cycle type {text!r}")
    return ctype


def dumps(census: CycleTypeCensus, tau: str, mode: str) -> str:
    lines = [f"census {CACHE_VERSION} {tau} {mode} {census.ground_size} {census.group_order}"]
    for ctype in sorted(census.table):
        lines.append(f"{format_cycle_type(ctype)} : {census.table[ctype]}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> tuple[CycleTypeCensus, str, str]:
    rows = text.splitlines()
    if not rows:
        raise CensusError("empty census file")
    head = rows[0].split()
    if len(head) != 6 or head[0] != "census" or head[1] != CACHE_VERSION:
        raise CensusError(f"bad census header {rows[0]!r}")
    _, _, tau, mode, ground, order = head
    table = {}
    for row in rows[1:]:
        if not row.strip():
            continue
        ctype_text, _, count = row.rpartition(":")
        ctype = parse_cycle_type(ctype_text)
        if ctype in table:
            raise CensusError(f"duplicate cycle type {ctype_text.strip()!r}")
        table[ctype] = int(count)
    return CycleTypeCensus(table, int(order), int(ground)), tau, mode


def cache_path(cache_dir: Path, action: PermAction) -> Path:
    return Path(cache_dir) / f"census-{action.tau}-{action.mode}-{action.fingerprint}.txt"


def load_cached(cache_dir: Path, action: PermAction) -> CycleTypeCensus | None:
    path = cache_path(cache_dir, action)
    if not path.exists():
        return None
    census, tau, mode = loads(path.read_text(encoding="utf-8"))
    if tau != action.tau or mode != action.mode or census.ground_size != action.ground_size:
        raise CensusError(f"{path} does not match the requested action")
    return census


def store(cache_dir: Path, action: PermAction, census: CycleTypeCensus) -> Path:
    path = cache_path(cache_dir, action)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(dumps(census, action.tau, action.mode), encoding="utf-8")
    tmp.replace(path)
    return path


def get_census(
    action: PermAction,
    cache_dir: Path | None = None,
    compute: bool = False,
    workers: int = 1,
    progress: bool = False,
    bsgs: BSGS | None = None,
) -> CycleTypeCensus | None:
    """Cached census, or a fresh one (stored) when ``compute`` is set.
    Returns None on a cache miss without ``compute``."""
    cache_dir = default_cache_dir() if cache_dir is None else Path(cache_dir)
    census = load_cached(cache_dir, action)
    bsgs = schreier_sims(action) if bsgs is None else bsgs
    if census is not None:
        if census.group_order != bsgs.order:
            raise CensusError("cached census has the wrong group order")
        return census
    if not compute:
        return None
    census = enumerate_cycle_types(bsgs, workers=workers, progress=progress)
    store(cache_dir, action, census)
    return census


def sample_cycle_types(bsgs: BSGS, samples: int, seed: int = 0) -> Counter:
    """Cycle types of uniformly random elements. Smoke tests only; never exact."""
    rng = np.random.default_rng(seed)
    return Counter(cycle_type(bsgs.random_element(rng)) for _ in range(samples))
