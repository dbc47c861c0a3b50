from fractions import Fraction

from delgraphs.builder import Edge, GeometricGraph, PointSet, build_graph
from delgraphs.geometry import point
from delgraphs.instances import generate_bounded_instance, generate_instance
from delgraphs.planarity import (collinear_triples, find_boundary_degeneracy,
                                 on_common_homothet_boundary,
                                 triangulation_check, verify_plane)
from delgraphs.shape import HOMOTHET, TRANSLATE, Placement, shape_from_rows

F = Fraction

CLOSED_UNIT_SQUARE = shape_from_rows([
    (1, 0, 1, False), (-1, 0, 0, False), (0, 1, 1, False), (0, -1, 0, False)])
SQUARE_CORNERS = PointSet((point(0, 0), point(2, 0), point(0, 2), point(2, 2)))
W = Placement((F(0), F(0)), F(1))


def drawing(points, edges):
    return GeometricGraph(points, CLOSED_UNIT_SQUARE, HOMOTHET,
                          tuple(Edge(i, j, W) for i, j in edges))


def test_four_cycle_is_plane():
    g = drawing(SQUARE_CORNERS, [(0, 1), (0, 2), (1, 3), (2, 3)])
    rep = verify_plane(g)
    assert rep.is_plane
    assert rep.condition1_violations == () and rep.condition2_violations == ()


def test_k4_diagonals_flagged():
    g = drawing(SQUARE_CORNERS, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3), (1, 2)])
    rep = verify_plane(g)
    assert not rep.is_plane
    assert ((0, 3), (1, 2)) in rep.condition2_violations


def test_vertex_interior_to_edge_flagged():
    P = PointSet((point(0, 0), point(1, 0), point(2, 0)))
    rep = verify_plane(drawing(P, [(0, 2)]))
    assert rep.condition1_violations == ((1, (0, 2)),)
    assert not rep.is_plane


def test_shared_endpoints_are_fine():
    P = PointSet((point(0, 0), point(1, 0), point(1, 1), point(0, 1)))
    star = drawing(P, [(0, 1), (0, 2), (0, 3)])
    assert verify_plane(star).is_plane


def test_rational_coordinates_handled_exactly():
    # exact midpoint of a nearly-unit-slope segment: on the segment,
    # so condition 1 must fire
    top = F(10**12 + 1, 10**12)
    P_on = PointSet((point(0, 0), point(1, top), point(F(1, 2), top / 2)))
    rep = verify_plane(drawing(P_on, [(0, 1)]))
    assert not rep.is_plane
    assert rep.condition1_violations == ((2, (0, 1)),)
    # displaced by 1/(2*10^12): off the segment, far below float resolution
    P_off = PointSet((point(0, 0), point(1, top),
                      point(F(1, 2), top / 2 - F(1, 2 * 10**12))))
    assert verify_plane(drawing(P_off, [(0, 1)])).is_plane


def test_verify_plane_monotone_under_edge_removal():
    for seed in range(6):
        inst = generate_instance(3000 + seed, 7, 5, TRANSLATE, F(1, 4))
        g = build_graph(inst.points, inst.shape, HOMOTHET)
        assert verify_plane(g).is_plane
        for drop in range(len(g.edges)):
            sub = GeometricGraph(g.points, g.shape, g.mode,
                                 g.edges[:drop] + g.edges[drop + 1:])
            assert verify_plane(sub).is_plane


def test_triangulation_square_corners_mismatch():
    g = build_graph(SQUARE_CORNERS, CLOSED_UNIT_SQUARE, HOMOTHET)
    rep = triangulation_check(g)
    assert rep.applicable
    assert rep.edge_count == 4 and rep.hull_size == 4
    assert rep.expected_count == 5 and not rep.matches


def test_triangulation_three_generic_points():
    P = PointSet((point(0, 0), point(3, 1), point(1, F(5, 2))))
    g = build_graph(P, CLOSED_UNIT_SQUARE, HOMOTHET)
    rep = triangulation_check(g)
    assert rep.applicable and rep.edge_count == 3
    assert rep.expected_count == 3 and rep.matches


def test_triangulation_not_applicable():
    P2 = PointSet((point(0, 0), point(1, 1)))
    g = build_graph(P2, CLOSED_UNIT_SQUARE, HOMOTHET)
    assert not triangulation_check(g).applicable
    P_line = PointSet((point(0, 0), point(1, 0), point(3, 0)))
    g2 = build_graph(P_line, CLOSED_UNIT_SQUARE, HOMOTHET)
    assert not triangulation_check(g2).applicable


def test_collinear_triples():
    pts = (point(0, 0), point(1, 1), point(2, 2), point(0, 1))
    assert collinear_triples(pts) == [(0, 1, 2)]
    assert collinear_triples((point(0, 0), point(1, 0), point(0, 1))) == []


def test_square_corners_are_boundary_degenerate():
    # all four corners lie on the boundary of the 2x scaled unit square
    assert on_common_homothet_boundary(SQUARE_CORNERS.points,
                                       CLOSED_UNIT_SQUARE, (0, 1, 2, 3))
    assert find_boundary_degeneracy(SQUARE_CORNERS.points,
                                    CLOSED_UNIT_SQUARE) == (0, 1, 2, 3)


def test_generic_points_not_boundary_degenerate():
    pts = (point(0, 0), point(3, 1), point(1, F(5, 2)), point(F(7, 3), F(8, 3)))
    assert find_boundary_degeneracy(pts, CLOSED_UNIT_SQUARE) is None


def test_triangulation_on_generic_bounded_instances():
    matched = checked = 0
    for seed in range(25):
        inst = generate_bounded_instance(7000 + seed, 6, 4, HOMOTHET)
        if collinear_triples(inst.points.points):
            continue
        g = build_graph(inst.points, inst.shape, HOMOTHET)
        rep = triangulation_check(g)
        if not rep.applicable:
            continue
        checked += 1
        if rep.matches:
            matched += 1
        else:
            assert find_boundary_degeneracy(inst.points.points, inst.shape) \
                is not None
    assert checked >= 15
    assert matched >= checked * 3 // 4
