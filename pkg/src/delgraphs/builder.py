"""Construction of translate graphs and homothet (generalized Delaunay)
graphs with a verified witness placement per edge.

A pair {p_i, p_j} is an edge iff some placed copy of the shape contains
p_i and p_j and no other point of P.  The search runs in placement
parameter space: the placements containing both endpoints form a convex
region, each other point r carves out the convex "hole" of placements
containing r, and the edge exists iff the base region minus all holes is
nonempty.  Holes are subtracted in ascending point order and the
resulting disjoint cells are scanned in generation order, so the witness
each edge carries is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import Point2
from .region import (ConvexRegion, FeasibilityResult, feasible,
                     feasible_with_hint, negate)
from .shape import (HOMOTHET, MODES, POSITIVE_SCALE, TRANSLATE, ConvexShape,
                    Placement, contains, membership_constraints)


class WitnessVerificationError(AssertionError):
    """An emitted witness failed its own membership re-check.  This is an
    internal invariant violation, never a data error."""


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point2, ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i) -> Point2:
        return self.points[i]


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    witness: Placement


@dataclass(frozen=True)
class GeometricGraph:
    points: PointSet
    shape: ConvexShape
    mode: str
    edges: tuple[Edge, ...]

    def edge_pairs(self) -> set[tuple[int, int]]:
        return {(e.i, e.j) for e in self.edges}


def _witness_from(x: tuple[Fraction, ...], mode: str) -> Placement:
    if mode == TRANSLATE:
        return Placement((x[0], x[1]), Fraction(1))
    return Placement((x[0], x[1]), x[2])


def _membership_tables(points: PointSet, shape: ConvexShape, mode: str):
    """Per-point membership constraints and their negations, computed once
    per build so every pair search reuses the same (memoized) rows."""
    mems = [membership_constraints(shape, points[k], mode)
            for k in range(len(points))]
    negs = [[negate(h) for h in mem] for mem in mems]
    return mems, negs


def _edge_search(points: PointSet, shape: ConvexShape, i: int, j: int,
                 mode: str, mems, negs) -> Placement | None:
    base_cons = list(mems[i]) + list(mems[j])
    dim = 2
    if mode == HOMOTHET:
        base_cons.append(POSITIVE_SCALE)
        dim = 3
    base = ConvexRegion(dim, tuple(base_cons))
    res = feasible(base)
    if not res:
        return None

    excluded = [k for k in range(len(points)) if k != i and k != j]

    def dfs(cell: ConvexRegion, hint, depth: int) -> Placement | None:
        if depth == len(excluded):
            final = feasible(cell)
            if not final:  # cell was certified nonempty on the way down
                raise AssertionError("feasible cell became infeasible")
            return _witness_from(final.witness, mode)
        k = excluded[depth]
        prefix: list = []
        for h, neg in zip(mems[k], negs[k]):
            piece = cell.with_constraints(prefix + [neg])
            probe = feasible_with_hint(piece, hint)
            if probe:
                found = dfs(piece, probe.witness, depth + 1)
                if found is not None:
                    return found
            prefix.append(h)
        return None

    return dfs(base, res.witness, 0)


def edge_feasible(points: PointSet, shape: ConvexShape, i: int, j: int,
                  mode: str) -> Placement | None:
    """Witness placement containing exactly {p_i, p_j} among P, or None.

    The hole of each excluded point r (in ascending r) splits every
    surviving cell along its constraints in order; the first cell that
    survives every hole supplies the witness via a fresh feasibility
    solve, whose optimizer lies strictly inside all open constraints.
    """
    if i == j:
        raise ValueError("edge endpoints must differ")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    i, j = min(i, j), max(i, j)
    mems, negs = _membership_tables(points, shape, mode)
    return _edge_search(points, shape, i, j, mode, mems, negs)


def verify_witness(points: PointSet, shape: ConvexShape, i: int, j: int,
                   w: Placement) -> bool:
    """Direct membership re-check: the placed shape must contain exactly
    the two endpoints among all of P."""
    for k in range(len(points)):
        inside = contains(shape, w, points[k])
        if inside != (k == i or k == j):
            return False
    return True


def build_graph(points: PointSet, shape: ConvexShape, mode: str) -> GeometricGraph:
    """All-pairs edge search; every emitted edge re-verifies its witness
    by direct containment before being admitted."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    edges = []
    n = len(points)
    mems, negs = _membership_tables(points, shape, mode)
    for i in range(n):
        for j in range(i + 1, n):
            w = _edge_search(points, shape, i, j, mode, mems, negs)
            if w is None:
                continue
            if mode == TRANSLATE and w.scale != 1:
                raise WitnessVerificationError(
                    f"translate witness for ({i},{j}) has scale {w.scale}")
            if not verify_witness(points, shape, i, j, w):
                raise WitnessVerificationError(
                    f"witness for edge ({i},{j}) fails membership re-check: "
                    f"t={w.translation} scale={w.scale}")
            edges.append(Edge(i, j, w))
    return GeometricGraph(points, shape, mode, tuple(edges))


def is_subgraph(g1: GeometricGraph, g2: GeometricGraph) -> bool:
    """True iff every edge of g1 is an edge of g2.  Requires both graphs
    to be over the same point set and shape."""
    if g1.points != g2.points or g1.shape != g2.shape:
        raise ValueError("graphs must share point set and shape")
    return g1.edge_pairs() <= g2.edge_pairs()
