"""Superlocal fractional colouring construction.

Iteratively spreads weight uniformly over all maximum stable sets of
the surviving graph: each round uses the largest value that neither
overfills a vertex nor exceeds the remaining budget, then drops the
vertices whose coverage reached 1. With budget at least the superlocal
bound this terminates with every vertex covered exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalBugError
from .graphs import induced_subgraph
from .invariants import gamma_ll_prime
from .stable_sets import maximum_stable_sets


@dataclass(frozen=True)
class FractionalColouring:
    weights: dict  # frozenset(vertices) -> positive Fraction
    total: Fraction


@dataclass(frozen=True)
class IterationRecord:
    vertices: tuple  # surviving vertex ids at the start of the round
    num_max_sets: int
    low: Fraction
    val: Fraction
    total_after: Fraction


@dataclass(frozen=True)
class IterationTrace:
    bound: Fraction
    records: tuple


@dataclass(frozen=True)
class ColouringVerdict:
    valid: bool
    violations: tuple


def superlocal_fractional_colour(g, bound=None):
    """Returns (FractionalColouring, IterationTrace); asserts validity.

    bound defaults to the graph's superlocal value and must not be
    below it; a validity failure is a bug signal, not an input error.
    """
    target = gamma_ll_prime(g)
    bound = target if bound is None else Fraction(bound)
    if bound < target:
        raise DomainError(f"bound {bound} is below the superlocal value {target}")

    weights = {}
    wo = {v: Fraction(0) for v in range(g.n)}
    total = Fraction(0)
    records = []
    alive = tuple(range(g.n))
    while alive and total < bound:
        sub, labels = induced_subgraph(g, alive)
        fam = maximum_stable_sets(sub)
        count = len(fam.sets)
        hits = {v: 0 for v in alive}
        for s in fam.sets:
            for v in s:
                hits[labels[v]] += 1
        low = None
        for v in alive:
            if hits[v]:
                cand = (1 - wo[v]) * count / hits[v]
                if low is None or cand < low:
                    low = cand
        if low is None:
            raise InternalBugError("no vertex lies in any maximum stable set")
        val = min(low, bound - total)
        share = Fraction(val, count)
        for s in fam.sets:
            key = frozenset(labels[v] for v in s)
            weights[key] = weights.get(key, Fraction(0)) + share
        for v in alive:
            wo[v] += Fraction(hits[v], count) * val
            if wo[v] > 1:
                raise InternalBugError(f"vertex {v} overfilled to {wo[v]}")
        total += val
        records.append(
            IterationRecord(
                vertices=alive,
                num_max_sets=count,
                low=low,
                val=val,
                total_after=total,
            )
        )
        alive = tuple(v for v in alive if wo[v] < 1)

    fc = FractionalColouring(weights=weights, total=total)
    verdict = verify_fractional_colouring(g, fc, bound)
    if not verdict.valid:
        raise InternalBugError(
            "construction returned an invalid weighting: "
            + "; ".join(verdict.violations)
        )
    return fc, IterationTrace(bound=bound, records=tuple(records))


def verify_fractional_colouring(g, fc, bound):
    """Exact check: stable keys, positive weights, unit coverage, total within bound."""
    violations = []
    cover = {v: Fraction(0) for v in range(g.n)}
    for key in sorted(fc.weights, key=sorted):
        w = fc.weights[key]
        members = sorted(key)
        if w <= 0:
            violations.append(f"set {members} has nonpositive weight {w}")
        for v in members:
            if not 0 <= v < g.n:
                violations.append(f"set {members} contains unknown vertex {v}")
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if 0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v):
                    violations.append(f"set {members} is not stable: edge ({u},{v})")
        for v in members:
            if v in cover:
                cover[v] += w
    for v in range(g.n):
        if cover[v] != 1:
            violations.append(f"vertex {v} covered {cover[v]}, expected 1")
    total = sum(fc.weights.values(), Fraction(0))
    if total != fc.total:
        violations.append(f"recorded total {fc.total} differs from actual {total}")
    if total > Fraction(bound):
        violations.append(f"total {total} exceeds bound {Fraction(bound)}")
    return ColouringVerdict(valid=not violations, violations=tuple(violations))
