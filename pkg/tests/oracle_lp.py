"""Brute-force feasibility oracle for 2D constraint systems.

Deliberately shares no code with the production solver: it enumerates
candidate vertices of the slack program

    maximize s  s.t.  a_i.x + s <= b_i (strict rows), a_i.x <= b_i (rest),
                      0 <= s <= 1,  |x_j| <= B

by solving every 3x3 subsystem of tight constraints with Cramer's rule
and taking the best feasible candidate.  The box bound B is far beyond
any vertex coordinate reachable from small rational inputs, so boxing
never changes the answer; it only guarantees the optimum sits at an
enumerable vertex.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

BOX = Fraction(2) ** 200


def oracle_feasible(constraints):
    """constraints: iterable of (coeffs(len 2), bound, strict) Fractions.
    Returns (nonempty, best_slack_or_None)."""
    rows = []  # (c1, c2, cs, b) meaning c1*x1 + c2*x2 + cs*s <= b
    has_strict = False
    for coeffs, bound, strict in constraints:
        rows.append((Fraction(coeffs[0]), Fraction(coeffs[1]),
                     Fraction(1 if strict else 0), Fraction(bound)))
        has_strict = has_strict or strict
    rows.append((Fraction(0), Fraction(0), Fraction(1), Fraction(1)))   # s <= 1
    rows.append((Fraction(0), Fraction(0), Fraction(-1), Fraction(0)))  # s >= 0
    for j in (0, 1):
        unit = [Fraction(0)] * 3
        unit[j] = Fraction(1)
        rows.append((unit[0], unit[1], unit[2], BOX))
        rows.append((-unit[0], -unit[1], -unit[2], BOX))

    best = None
    for triple in combinations(rows, 3):
        pt = _solve3(triple)
        if pt is None:
            continue
        if all(c1 * pt[0] + c2 * pt[1] + cs * pt[2] <= b for c1, c2, cs, b in rows):
            if best is None or pt[2] > best:
                best = pt[2]
    if best is None:
        return False, None
    if has_strict:
        return best > 0, best
    return True, best


def _solve3(triple):
    (a1, b1, c1, d1), (a2, b2, c2, d2), (a3, b3, c3, d3) = triple
    det = (a1 * (b2 * c3 - b3 * c2)
           - b1 * (a2 * c3 - a3 * c2)
           + c1 * (a2 * b3 - a3 * b2))
    if det == 0:
        return None
    dx = (d1 * (b2 * c3 - b3 * c2)
          - b1 * (d2 * c3 - d3 * c2)
          + c1 * (d2 * b3 - d3 * b2))
    dy = (a1 * (d2 * c3 - d3 * c2)
          - d1 * (a2 * c3 - a3 * c2)
          + c1 * (a2 * d3 - a3 * d2))
    ds = (a1 * (b2 * d3 - b3 * d2)
          - b1 * (a2 * d3 - a3 * d2)
          + d1 * (a2 * b3 - a3 * b2))
    return dx / det, dy / det, ds / det
