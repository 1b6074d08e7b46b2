"""Exact ground-truth oracles.

Chromatic number by saturation-ordered branch and bound, fractional
chromatic number by a certified exact LP, stability number, the
complement-matching colouring for graphs with stability number at most
two, and the cyclic greedy colouring of linear interval representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import DomainError, InternalBugError, SizeLimitError
from .graphs import complement, realize_linear_interval
from .invariants import _max_clique_size, clique_number
from .simplex import solve_simplex
from .stable_sets import ENUMERATION_VERTEX_LIMIT, maximal_stable_sets

CHROMATIC_VERTEX_LIMIT = 16
MATCHING_VERTEX_LIMIT = 20
LP_SET_LIMIT = 4096


@dataclass(frozen=True)
class VertexColouring:
    colours: tuple  # colour index per vertex, 0-based
    k: int


def verify_vertex_colouring(g, vc):
    """True iff the colouring is proper and uses colours 0..k-1."""
    if len(vc.colours) != g.n:
        return False
    if any(not 0 <= c < vc.k for c in vc.colours):
        return False
    return all(vc.colours[u] != vc.colours[v] for u, v in g.edges)


def _dsatur_greedy(adj, n):
    colours = [-1] * n
    for _ in range(n):
        pick, pick_key, pick_sat = -1, None, 0
        for v in range(n):
            if colours[v] >= 0:
                continue
            sat = 0
            m = adj[v]
            while m:
                b = m & -m
                u = b.bit_length() - 1
                if colours[u] >= 0:
                    sat |= 1 << colours[u]
                m ^= b
            key = (sat.bit_count(), adj[v].bit_count(), -v)
            if pick_key is None or key > pick_key:
                pick, pick_key, pick_sat = v, key, sat
        c = 0
        while pick_sat >> c & 1:
            c += 1
        colours[pick] = c
    return colours


def chromatic_number(g, limit=CHROMATIC_VERTEX_LIMIT):
    """Exact chi with a witness colouring."""
    if g.n > limit:
        raise SizeLimitError(f"chromatic number limited to {limit} vertices, got {g.n}")
    n = g.n
    if n == 0:
        return 0, VertexColouring((), 0)
    adj = [g.adj_mask(v) for v in range(n)]
    lb = clique_number(g)
    greedy = _dsatur_greedy(adj, n)
    best = greedy[:]
    best_k = max(greedy) + 1
    if best_k > lb:
        colours = [-1] * n

        def rec(done, used):
            nonlocal best, best_k
            if used >= best_k:
                return
            if done == n:
                best_k = used
                best = colours[:]
                return
            pick, pick_key, pick_sat = -1, None, 0
            for v in range(n):
                if colours[v] >= 0:
                    continue
                sat = 0
                m = adj[v]
                while m:
                    b = m & -m
                    u = b.bit_length() - 1
                    if colours[u] >= 0:
                        sat |= 1 << colours[u]
                    m ^= b
                key = (sat.bit_count(), adj[v].bit_count(), -v)
                if pick_key is None or key > pick_key:
                    pick, pick_key, pick_sat = v, key, sat
            cap = min(used + 1, best_k - 1)
            for c in range(cap):
                if pick_sat >> c & 1:
                    continue
                colours[pick] = c
                rec(done + 1, max(used, c + 1))
                colours[pick] = -1
                if best_k == lb:
                    return

        rec(0, 0)
    vc = VertexColouring(tuple(best), best_k)
    if not verify_vertex_colouring(g, vc):
        raise InternalBugError("branch and bound produced an improper colouring")
    return best_k, vc


def stability_number(g, limit=ENUMERATION_VERTEX_LIMIT):
    if g.n > limit:
        raise SizeLimitError(f"stability number limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return 0
    full = (1 << g.n) - 1
    comp = [~g.adj_mask(v) & full & ~(1 << v) for v in range(g.n)]
    return _max_clique_size(comp, full)


@dataclass(frozen=True)
class FractionalChromaticSolution:
    value: Fraction
    weights: dict  # frozenset -> positive Fraction, a valid fractional colouring
    dual: tuple  # per-vertex fractional clique certifying optimality


def fractional_chromatic_solution(g, vertex_limit=None, set_limit=LP_SET_LIMIT):
    """Certified optimum of the covering LP over maximal stable sets.

    The packing dual (maximise the sum of per-vertex values subject to
    at most 1 on every stable set) is solved exactly; covering weights
    come from the optimal tableau. Both feasibilities and equality of
    the two objective values are re-checked before returning.
    """
    n = g.n
    if n == 0:
        return FractionalChromaticSolution(Fraction(0), {}, ())
    fam = maximal_stable_sets(g, limit=vertex_limit)
    if len(fam.sets) > set_limit:
        raise SizeLimitError(
            f"LP over {len(fam.sets)} stable sets exceeds the limit {set_limit}"
        )
    rows = [[1 if v in s else 0 for v in range(n)] for s in fam.sets]
    ones_m = [Fraction(1)] * len(rows)
    ones_n = [Fraction(1)] * n
    value, y, w = solve_simplex(rows, ones_m, ones_n)

    # certificate: y is a feasible fractional clique, w a feasible
    # fractional colouring, and the two objectives agree exactly
    if any(yi < 0 for yi in y):
        raise InternalBugError("negative dual vertex weight")
    for s in fam.sets:
        if sum(y[v] for v in s) > 1:
            raise InternalBugError("fractional clique overloads a stable set")
    if any(wi < 0 for wi in w):
        raise InternalBugError("negative stable set weight")
    cover = [Fraction(0)] * n
    for wi, s in zip(w, fam.sets):
        for v in s:
            cover[v] += wi
    if any(cv < 1 for cv in cover):
        raise InternalBugError("stable set weights fail to cover a vertex")
    if sum(y) != value or sum(w) != value:
        raise InternalBugError("primal and dual objective values disagree")
    weights = {s: wi for wi, s in zip(w, fam.sets) if wi > 0}
    return FractionalChromaticSolution(value=value, weights=weights, dual=tuple(y))


def fractional_chromatic_number(g, vertex_limit=None, set_limit=LP_SET_LIMIT):
    return fractional_chromatic_solution(g, vertex_limit, set_limit).value


def chi_via_complement_matching(g, limit=MATCHING_VERTEX_LIMIT):
    """chi = n - nu(complement) for graphs with stability number <= 2.

    Colour classes are the matched complement pairs plus singletons.
    """
    n = g.n
    if n > limit:
        raise SizeLimitError(f"matching oracle limited to {limit} vertices, got {n}")
    if n == 0:
        return 0, VertexColouring((), 0)
    alpha = stability_number(g)
    if alpha >= 3:
        raise DomainError(f"stability number {alpha} exceeds 2")
    cg = complement(g)
    adj = np.array([cg.adj_mask(v) for v in range(n)], np.int64)
    dp = np.zeros(1 << n, np.int32)
    _kernels.matching_dp(adj, dp)
    full = (1 << n) - 1
    nu = int(dp[full])

    colours = [-1] * n
    nxt = 0
    mask = full
    while mask:
        b = mask & -mask
        v = b.bit_length() - 1
        if dp[mask] == dp[mask ^ b]:
            colours[v] = nxt
            nxt += 1
            mask ^= b
            continue
        m = int(adj[v]) & mask
        paired = False
        while m:
            ub = m & -m
            u = ub.bit_length() - 1
            if dp[mask] == dp[mask ^ b ^ ub] + 1:
                colours[v] = colours[u] = nxt
                nxt += 1
                mask ^= b | ub
                paired = True
                break
            m ^= ub
        if not paired:
            raise InternalBugError("matching DP table is inconsistent")
    if nxt != n - nu:
        raise InternalBugError("matching reconstruction lost pairs")
    vc = VertexColouring(tuple(colours), nxt)
    if not verify_vertex_colouring(g, vc):
        raise InternalBugError("complement matching produced an improper colouring")
    return nxt, vc


def colour_linear_interval(rep, offset=0):
    """Left-to-right cyclic colouring with omega colours; proper for every offset."""
    g = realize_linear_interval(rep)
    if g.n == 0:
        raise DomainError("empty representation has nothing to colour")
    omega = clique_number(g)
    if not 0 <= offset < omega:
        raise DomainError(f"offset {offset} outside 0..{omega - 1}")
    colours = tuple((v + offset) % omega for v in range(g.n))
    return VertexColouring(colours, omega)
