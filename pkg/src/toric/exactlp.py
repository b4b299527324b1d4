"""Exact rational linear feasibility via phase-1 simplex.

Small dense problems only (a handful of equality constraints, a few dozen
variables), which is all the vertex cross-checks need. Bland's rule, so no
cycling; every pivot is a Fraction operation, so the answer is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_eq_nonneg(rows: Sequence[Sequence], rhs: Sequence) -> bool:
    """Is there x >= 0 with A x = b?"""
    m = len(rows)
    if m == 0:
        return True
    n = len(rows[0])
    a = [[Fraction(x) for x in row] for row in rows]
    b = [Fraction(x) for x in rhs]
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]

    # tableau columns: n structural + m artificial, minimize sum of artificials
    width = n + m
    tab = []
    for i in range(m):
        row = a[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        row.append(b[i])
        tab.append(row)
    basis = [n + i for i in range(m)]

    # reduced cost row for objective sum(artificials); artificials are basic
    cost = [Fraction(0)] * (width + 1)
    for j in range(width):
        cost[j] = -sum(tab[i][j] for i in range(m))
    for i in range(m):
        cost[n + i] += Fraction(1)
    cost[width] = -sum(b)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            # unbounded phase-1 objective cannot happen; defensive
            return False
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter

    return cost[width] == 0


def in_shifted_hull(point, hull_points, cone_generators) -> bool:
    """Exact test for point in conv(hull_points) + cone(cone_generators)."""
    pts = [tuple(p) for p in hull_points]
    if not pts:
        return False
    d = len(point)
    gens = [tuple(g) for g in cone_generators]
    rows = []
    for i in range(d):
        rows.append([p[i] for p in pts] + [g[i] for g in gens])
    rows.append([1] * len(pts) + [0] * len(gens))
    rhs = list(point) + [1]
    return feasible_eq_nonneg(rows, rhs)
