"""Plane-graph verification of straight-line drawings, the triangulation
edge-count check, and exact degeneracy diagnostics.

A drawing is a plane graph when (1) no vertex lies on a non-incident
edge and (2) edges meet only at shared endpoints.  Both conditions are
checked exhaustively and exactly; to keep the all-pairs scans cheap the
rational coordinates are first mapped onto a common integer grid, which
preserves every orientation and incidence predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .geometry import (Point2, Segment, SegmentRelation, convex_hull,
                       on_closed_segment, scale_to_integers, segments_cross)
from .region import ConvexRegion, LinearConstraint, feasible
from .builder import GeometricGraph
from .shape import HOMOTHET, POSITIVE_SCALE, ConvexShape, membership_constraints

IndexEdge = tuple[int, int]


@dataclass(frozen=True)
class PlanarityReport:
    condition1_violations: tuple[tuple[int, IndexEdge], ...]
    condition2_violations: tuple[tuple[IndexEdge, IndexEdge], ...]

    @property
    def is_plane(self) -> bool:
        return not self.condition1_violations and not self.condition2_violations


def verify_plane(g: GeometricGraph) -> PlanarityReport:
    """Exhaustive exact check of both plane-graph conditions."""
    scaled, _ = scale_to_integers(list(g.points.points))
    pts = [Point2(x, y) for x, y in scaled]
    edges = [(e.i, e.j) for e in g.edges]
    segs = {(i, j): Segment(pts[i], pts[j]) for i, j in edges}

    cond1 = []
    for v in range(len(pts)):
        for (i, j) in edges:
            if v == i or v == j:
                continue
            if on_closed_segment(pts[v], segs[(i, j)]):
                cond1.append((v, (i, j)))

    cond2 = []
    for e1, e2 in combinations(edges, 2):
        if len({e1[0], e1[1], e2[0], e2[1]}) == 2:
            continue  # cannot happen with deduplicated edges, kept defensive
        rel = segments_cross(segs[e1], segs[e2])
        if rel is SegmentRelation.CROSSING_OR_OVERLAPPING:
            cond2.append((e1, e2))

    return PlanarityReport(tuple(cond1), tuple(cond2))


@dataclass(frozen=True)
class TriangulationReport:
    applicable: bool
    edge_count: int
    hull_size: int
    expected_count: int
    matches: bool


def triangulation_check(g: GeometricGraph) -> TriangulationReport:
    """Compare the edge count against 3n - 3 - h, the count of any
    triangulation of the point set (h = hull vertices).  Undefined for
    n < 3 or fully collinear sets, reported as not applicable."""
    n = len(g.points)
    e = len(g.edges)
    if n < 3:
        return TriangulationReport(False, e, 0, 0, False)
    scaled, _ = scale_to_integers(list(g.points.points))
    hull = convex_hull([Point2(x, y) for x, y in scaled])
    h = len(hull)
    if h <= 2:
        return TriangulationReport(False, e, h, 0, False)
    expected = 3 * n - 3 - h
    return TriangulationReport(True, e, h, expected, e == expected)


# ---------------------------------------------------------------------------
# Degeneracy diagnostics
# ---------------------------------------------------------------------------

def collinear_triples(points) -> list[tuple[int, int, int]]:
    scaled, _ = scale_to_integers(list(points))
    out = []
    for i, j, k in combinations(range(len(scaled)), 3):
        (ax, ay), (bx, by), (cx, cy) = scaled[i], scaled[j], scaled[k]
        if (bx - ax) * (cy - ay) == (by - ay) * (cx - ax):
            out.append((i, j, k))
    return out


def on_common_homothet_boundary(points, shape: ConvexShape,
                                indices) -> bool:
    """Exact test whether all the chosen points lie on the boundary of a
    single homothet of a closed full-dimensional shape.

    A point sits on the placed boundary iff it is inside and at least one
    half-plane is tight, so the search assigns one tight half-plane per
    point and decides the equality-tightened system by LP, pruning
    assignment prefixes as soon as they go infeasible.
    """
    cons: list[LinearConstraint] = [POSITIVE_SCALE]
    mems = []
    for idx in indices:
        m = membership_constraints(shape, points[idx], HOMOTHET)
        mems.append(m)
        cons.extend(m)
    if not shape.halfplanes:
        return False
    base = ConvexRegion(3, tuple(cons))
    if not feasible(base):
        return False

    def tightened(c: LinearConstraint) -> LinearConstraint:
        # reverse non-strict row; together with c it pins a.x == b
        return LinearConstraint(tuple(-v for v in c.coeffs), -c.bound, False)

    def dfs(region: ConvexRegion, depth: int) -> bool:
        if depth == len(mems):
            return True
        for c in mems[depth]:
            sub = region.with_constraints([tightened(c)])
            if feasible(sub) and dfs(sub, depth + 1):
                return True
        return False

    return dfs(base, 0)


def find_boundary_degeneracy(points, shape: ConvexShape) -> tuple[int, ...] | None:
    """First 4-point subset (lexicographic) on a common homothet boundary,
    or None.  Used to trace triangulation-count misses back to the
    degeneracy that legitimately excuses them."""
    for quad in combinations(range(len(points)), 4):
        if on_common_homothet_boundary(points, shape, quad):
            return quad
    return None
