"""Exact rational simplex for small linear programs.

Maximises c.x subject to A.x <= b, x >= 0 with b >= 0, so the slack
basis is feasible and no phase-1 is needed. Bland's rule guarantees
termination without perturbation. Everything is a Fraction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalBugError


def solve_simplex(a, b, c):
    """Returns (value, x, y): optimum, primal solution, dual solution.

    a: m rows of length nv, b: length m (all >= 0), c: length nv.
    y is read off the slack columns of the final objective row, so it is
    a feasible dual whenever the primal is optimal; callers should still
    verify both feasibilities and value equality.
    """
    m = len(a)
    nv = len(c)
    one = Fraction(1)
    rows = []
    for i in range(m):
        if b[i] < 0:
            raise InternalBugError("simplex needs nonnegative right-hand sides")
        row = [Fraction(x) for x in a[i]]
        row.extend(one if j == i else Fraction(0) for j in range(m))
        row.append(Fraction(b[i]))
        rows.append(row)
    obj = [-Fraction(x) for x in c] + [Fraction(0)] * (m + 1)
    basis = [nv + i for i in range(m)]
    width = nv + m

    guard = 0
    max_steps = 1000 * (m + nv + 1)
    while True:
        guard += 1
        if guard > max_steps:
            raise InternalBugError("simplex exceeded its step guard")
        enter = -1
        for j in range(width):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            coeff = rows[i][enter]
            if coeff > 0:
                ratio = rows[i][-1] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise InternalBugError("unbounded linear program")
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, rows[leave])]
        basis[leave] = enter

    x = [Fraction(0)] * nv
    for i, bi in enumerate(basis):
        if bi < nv:
            x[bi] = rows[i][-1]
    y = [obj[nv + i] for i in range(m)]
    return obj[-1], x, y
