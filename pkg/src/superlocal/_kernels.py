"""Hot integer kernels with optional numba acceleration.

Three kernels run over bitmask arrays: the isomorphism-class orbit
sweep, the maximum-matching subset DP, and brute-force edge-colouring
feasibility. Each has a jit backend (numba, when importable) and a pure
backend; SUPERLOCAL_NO_JIT=1 forces the pure one. Exact rational code
elsewhere never goes through here.
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_PURE = os.environ.get("SUPERLOCAL_NO_JIT", "") == "1"

try:
    if _FORCE_PURE:
        raise ImportError
    from numba import njit

    HAVE_JIT = True
except ImportError:
    njit = None
    HAVE_JIT = False


def _matching_dp_impl(adj, dp):
    # dp[mask] = maximum matching size inside mask; adj holds bitmasks
    dp[0] = 0
    for mask in range(1, dp.shape[0]):
        v = 0
        while not (mask >> v) & 1:
            v += 1
        rest = mask ^ (1 << v)
        best = dp[rest]
        m = adj[v] & rest
        while m:
            lb = m & (-m)
            u = 0
            while not (lb >> u) & 1:
                u += 1
            cand = dp[rest ^ (1 << u)] + 1
            if cand > best:
                best = cand
            m ^= lb
        dp[mask] = best


def _orbit_reps_impl(perm_maps, e_bits, capacity):
    # sweep masks in increasing order; an unvisited mask is its orbit's
    # minimum, so marking whole orbits yields canonical representatives
    total = 1 << e_bits
    visited = np.zeros(((total + 7) >> 3,), np.uint8)
    reps = np.empty(capacity, np.int64)
    cnt = 0
    nperm = perm_maps.shape[0]
    for mask in range(total):
        if visited[mask >> 3] & (1 << (mask & 7)):
            continue
        if cnt >= capacity:
            return reps[:0]
        reps[cnt] = mask
        cnt += 1
        for p in range(nperm):
            pm = 0
            rem = mask
            while rem:
                lb = rem & (-rem)
                e = 0
                while not (lb >> e) & 1:
                    e += 1
                pm |= 1 << perm_maps[p, e]
                rem ^= lb
            visited[pm >> 3] |= np.uint8(1 << (pm & 7))
    return reps[:cnt]


def _orbit_reps_numpy(perm_maps, e_bits, capacity):
    # fallback with a vectorised orbit marking and a monotone byte
    # pointer: orbits of an unvisited mask lie at or above it, so the
    # pointer never needs to move backwards
    total = 1 << e_bits
    nbytes = (total + 7) >> 3
    visited = np.zeros(nbytes, np.uint8)
    pow2 = np.left_shift(np.int64(1), perm_maps.astype(np.int64))
    reps = []
    pos = 0
    chunk = 1 << 16
    while True:
        found = -1
        while pos < nbytes:
            seg = visited[pos : pos + chunk]
            idx = int(np.argmax(seg != 0xFF))
            if seg[idx] != 0xFF:
                found = pos + idx
                break
            pos += seg.shape[0]
        if found < 0:
            break
        pos = found
        byte = int(visited[pos])
        bit = 0
        while byte >> bit & 1:
            bit += 1
        mask = (pos << 3) | bit
        if mask >= total:
            break
        if len(reps) >= capacity:
            return np.empty(0, np.int64)
        reps.append(mask)
        bits = [e for e in range(e_bits) if mask >> e & 1]
        if bits:
            pm = pow2[:, bits].sum(axis=1)
        else:
            pm = np.zeros(perm_maps.shape[0], np.int64)
        np.bitwise_or.at(
            visited, pm >> 3, np.left_shift(np.uint8(1), (pm & 7).astype(np.uint8))
        )
    return np.array(reps, np.int64)


def _edge_feasible_impl(eu, ev, k, n, cap):
    # backtracking over edges in listing order; an edge may only use a
    # colour at most one above the maximum used so far (symmetry cut)
    m = eu.shape[0]
    if m == 0:
        return 1
    vcol = np.zeros(n, np.int64)
    tried = np.zeros(m, np.int64)
    maxu = np.zeros(m + 1, np.int64)
    pos = 0
    steps = 0
    while True:
        steps += 1
        if steps > cap:
            return -1
        limit = maxu[pos] + 1
        if limit > k:
            limit = k
        c = tried[pos] + 1
        found = 0
        while c <= limit:
            if not (vcol[eu[pos]] >> c) & 1 and not (vcol[ev[pos]] >> c) & 1:
                found = 1
                break
            c += 1
        if found:
            tried[pos] = c
            vcol[eu[pos]] |= 1 << c
            vcol[ev[pos]] |= 1 << c
            if c > maxu[pos]:
                maxu[pos + 1] = c
            else:
                maxu[pos + 1] = maxu[pos]
            pos += 1
            if pos == m:
                return 1
            tried[pos] = 0
        else:
            tried[pos] = 0
            pos -= 1
            if pos < 0:
                return 0
            c = tried[pos]
            vcol[eu[pos]] &= ~(1 << c)
            vcol[ev[pos]] &= ~(1 << c)


MATCHING_BACKENDS = {"pure": _matching_dp_impl}
ORBIT_BACKENDS = {"pure": _orbit_reps_numpy}
EDGE_FEASIBLE_BACKENDS = {"pure": _edge_feasible_impl}

if HAVE_JIT:
    MATCHING_BACKENDS["jit"] = njit(cache=True)(_matching_dp_impl)
    ORBIT_BACKENDS["jit"] = njit(cache=True)(_orbit_reps_impl)
    EDGE_FEASIBLE_BACKENDS["jit"] = njit(cache=True)(_edge_feasible_impl)

ACTIVE = "jit" if HAVE_JIT else "pure"


def matching_dp(adj, dp, backend=None):
    MATCHING_BACKENDS[backend or ACTIVE](adj, dp)
    return dp


def orbit_representatives(perm_maps, e_bits, capacity, backend=None):
    return ORBIT_BACKENDS[backend or ACTIVE](perm_maps, e_bits, capacity)


def edge_colouring_feasible(eu, ev, k, n, cap, backend=None):
    return int(EDGE_FEASIBLE_BACKENDS[backend or ACTIVE](eu, ev, k, n, cap))
