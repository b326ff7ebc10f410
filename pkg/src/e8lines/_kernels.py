"""Compiled inner loops: full-group cycle-type enumeration and k-subset
orbit partitioning."""

import numpy as np
from numba import njit

# slots in the per-call cycle-type hash table; W(E8) has 112 conjugacy classes
TABLE_SLOTS = 1 << 12


def cycle_hash_weights(n: int) -> np.ndarray:
    rng = np.random.default_rng(0x5EED)
    return rng.integers(1, 2**63, size=n + 1, dtype=np.uint64)


@njit(cache=True)
def _record(cnt, touched, nt, key, keys, used, vecs, ndist, counts, mult):
    mask = keys.shape[0] - 1
    slot = np.int64(key & np.uint64(mask))
    for _ in range(keys.shape[0]):
        if not used[slot]:
            used[slot] = True
            keys[slot] = key
            ndist[slot] = nt
            for t in range(nt):
                vecs[slot, touched[t]] = cnt[touched[t]]
            counts[slot] += mult
            return True
        if keys[slot] == key and ndist[slot] == nt:
            same = True
            for t in range(nt):
                if vecs[slot, touched[t]] != cnt[touched[t]]:
                    same = False
                    break
            if same:
                counts[slot] += mult
                return True
        slot = (slot + 1) & mask
    return False


@njit(cache=True)
def census_kernel(trans, offsets, sizes, n, top_lo, top_hi, weights, slots):
    """Cycle types of every element u_0 o u_1 o ... o u_{k-1} whose top-level
    representative index lies in [top_lo, top_hi).

    Partial products are kept per level so each tree edge costs one
    composition.  ``trans`` holds the stacked representatives; its dtype
    (uint8 for ground sets up to 256 points) sets the working width.
    """
    k = sizes.shape[0]
    keys = np.zeros(slots, np.uint64)
    used = np.zeros(slots, np.bool_)
    vecs = np.zeros((slots, n + 1), np.int32)
    ndist = np.zeros(slots, np.int32)
    counts = np.zeros(slots, np.int64)
    ok = True
    if k == 0 or top_lo >= top_hi:
        return keys, used, vecs, ndist, counts, ok

    cnt = np.zeros(n + 1, np.int32)
    touched = np.zeros(n + 1, np.int64)
    seen = np.zeros(n, np.bool_)
    g = np.empty(n, trans.dtype)
    # partial[0] is the identity; partial[l + 1] = partial[l] o u_l
    partial = np.empty((k, n), trans.dtype)
    for x in range(n):
        partial[0, x] = x
    idx = np.zeros(k, np.int64)
    idx[0] = top_lo
    for lev in range(k - 1):
        rep = trans[offsets[lev] + idx[lev]]
        for x in range(n):
            partial[lev + 1, x] = partial[lev, rep[x]]

    last = k - 1
    while True:
        lo = top_lo if last == 0 else 0
        hi = top_hi if last == 0 else sizes[last]
        base = partial[last]
        for t in range(lo, hi):
            rep = trans[offsets[last] + t]
            for x in range(n):
                g[x] = base[rep[x]]
                seen[x] = False
            nt = 0
            key = np.uint64(0)
            fixed = 0
            for x in range(n):
                if g[x] == x:
                    fixed += 1
                    continue
                if seen[x]:
                    continue
                length = 0
                y = x
                while not seen[y]:
                    seen[y] = True
                    y = g[y]
                    length += 1
                if cnt[length] == 0:
                    touched[nt] = length
                    nt += 1
                cnt[length] += 1
                key += weights[length]
            if fixed:
                touched[nt] = 1
                nt += 1
                cnt[1] = fixed
                key += weights[1] * np.uint64(fixed)
            if not _record(cnt, touched, nt, key, keys, used, vecs, ndist, counts, 1):
                ok = False
            for t2 in range(nt):
                cnt[touched[t2]] = 0

        # advance the odometer over levels 0..k-2
        lev = last - 1
        while lev >= 0:
            idx[lev] += 1
            limit = top_hi if lev == 0 else sizes[lev]
            if idx[lev] < limit:
                break
            lev -= 1
        if lev < 0:
            break
        for l2 in range(lev, last):
            if l2 > lev:
                idx[l2] = 0
            rep = trans[offsets[l2] + idx[l2]]
            for x in range(n):
                partial[l2 + 1, x] = partial[l2, rep[x]]
    return keys, used, vecs, ndist, counts, ok


@njit(cache=True)
def _binomials(n, k):
    b = np.zeros((n + 1, k + 1), np.int64)
    for i in range(n + 1):
        b[i, 0] = 1
        for j in range(1, min(i, k) + 1):
            b[i, j] = b[i - 1, j - 1] + b[i - 1, j]
    return b


@njit(cache=True)
def _rank(sub, binom):
    r = 0
    for i in range(sub.shape[0]):
        r += binom[sub[i], i + 1]
    return r


@njit(cache=True)
def _unrank(r, n, k, binom, out):
    c = n - 1
    for i in range(k, 0, -1):
        while binom[c, i] > r:
            c -= 1
        out[i - 1] = c
        r -= binom[c, i]
        c -= 1


@njit(cache=True)
def colex_unrank(r, n, k):
    binom = _binomials(n, k)
    out = np.zeros(k, np.int64)
    _unrank(r, n, k, binom, out)
    return out


@njit(cache=True)
def colex_subsets(n, k):
    binom = _binomials(n, k)
    total = binom[n, k]
    out = np.zeros((total, k), np.int64)
    sub = np.zeros(k, np.int64)
    for r in range(total):
        _unrank(r, n, k, binom, sub)
        out[r, :] = sub
    return out


@njit(cache=True)
def orbit_partition(gens, n, k, total):
    """BFS over colex ranks; orbit_id doubles as the visited set."""
    binom = _binomials(n, k)
    orbit_id = np.full(total, -1, np.int32)
    queue = np.empty(total, np.int64)
    sizes = []
    reps = []
    sub = np.zeros(k, np.int64)
    img = np.zeros(k, np.int64)
    norb = 0
    for r0 in range(total):
        if orbit_id[r0] >= 0:
            continue
        orbit_id[r0] = norb
        head = 0
        tail = 1
        queue[0] = r0
        while head < tail:
            r = queue[head]
            head += 1
            _unrank(r, n, k, binom, sub)
            for g in range(gens.shape[0]):
                for i in range(k):
                    v = gens[g, sub[i]]
                    j = i
                    while j > 0 and img[j - 1] > v:
                        img[j] = img[j - 1]
                        j -= 1
                    img[j] = v
                rr = _rank(img, binom)
                if orbit_id[rr] < 0:
                    orbit_id[rr] = norb
                    queue[tail] = rr
                    tail += 1
        sizes.append(tail)
        reps.append(r0)
        norb += 1
    return orbit_id, np.array(sizes, np.int64), np.array(reps, np.int64)
