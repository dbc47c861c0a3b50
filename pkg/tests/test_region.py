import random
from fractions import Fraction

import pytest

from delgraphs.region import (ConvexRegion, LinearConstraint, constraint,
                              feasible, feasible_with_hint, negate, subtract)
from oracle_lp import oracle_feasible

F = Fraction


def region2(*cons):
    return ConvexRegion(2, tuple(cons))


def test_feasible_contradictory_bounds_empty():
    # x >= 0 and x <= -1
    r = region2(constraint((-1, 0), 0), constraint((1, 0), -1))
    assert not feasible(r).nonempty


def test_feasible_open_strip_witness_and_slack():
    # {x > 0, x < 1, y >= 0, y <= 0}: oracle-derived optimum of the slack
    # program is s = 1/2 at the unique point (1/2, 0).
    cons = [((F(-1), F(0)), F(0), True), ((F(1), F(0)), F(1), True),
            ((F(0), F(-1)), F(0), False), ((F(0), F(1)), F(0), False)]
    ora_ok, ora_slack = oracle_feasible(cons)
    assert ora_ok and ora_slack == F(1, 2)
    res = feasible(region2(*(LinearConstraint(a, b, s) for a, b, s in cons)))
    assert res.nonempty
    assert res.witness == (F(1, 2), F(0))
    assert res.slack == F(1, 2)


def test_feasible_pinned_to_open_boundary_empty():
    # x <= 0, x >= 0 force x = 0 but -x < 0 requires x > 0
    r = region2(constraint((1, 0), 0), constraint((-1, 0), 0),
                constraint((-1, 0), 0, True))
    assert not feasible(r).nonempty


def test_feasible_no_constraints_whole_space():
    res = feasible(region2())
    assert res.nonempty and res.witness == (F(0), F(0)) and res.slack is None


def test_feasible_unbounded_region_with_strict():
    res = feasible(region2(constraint((0, -1), -3, True)))  # y > 3
    assert res.nonempty
    assert res.witness[1] > 3
    assert res.slack is not None and res.slack > 0


def test_feasible_equality_pair_line():
    # y == 2 as two opposing non-strict constraints
    r = region2(constraint((0, 1), 2), constraint((0, -1), -2))
    res = feasible(r)
    assert res.nonempty and res.witness[1] == 2


def test_witness_round_trip_randomized():
    rng = random.Random(4242)
    for _ in range(300):
        cons = []
        for _ in range(rng.randint(1, 6)):
            a = (F(rng.randint(-4, 4), rng.randint(1, 3)),
                 F(rng.randint(-4, 4), rng.randint(1, 3)))
            if not any(a):
                a = (F(1), F(0))
            cons.append(LinearConstraint(a, F(rng.randint(-6, 6), rng.randint(1, 4)),
                                         rng.random() < 0.4))
        res = feasible(region2(*cons))
        if res.nonempty:
            for c in cons:
                assert c.satisfied_by(res.witness)
            if any(c.strict for c in cons):
                assert res.slack > 0


def test_feasible_matches_bruteforce_oracle():
    rng = random.Random(777)
    for _ in range(400):
        cons = []
        for _ in range(rng.randint(1, 6)):
            a = (F(rng.randint(-5, 5)), F(rng.randint(-5, 5)))
            if not any(a):
                a = (F(0), F(1))
            cons.append((a, F(rng.randint(-7, 7), rng.randint(1, 2)),
                         rng.random() < 0.5))
        res = feasible(region2(*(LinearConstraint(a, b, s) for a, b, s in cons)))
        ora, _ = oracle_feasible(cons)
        assert res.nonempty == ora, cons


def test_negate_strictness_duality():
    c = constraint((2, -3), 5)
    nc = negate(c)
    assert nc.strict and nc.coeffs == (F(-2), F(3)) and nc.bound == F(-5)
    assert negate(nc) == c
    s = constraint((1, 1), 0, strict=True)
    ns = negate(s)
    assert not ns.strict
    assert negate(ns) == s


def test_negate_partitions_plane():
    c = constraint((3, -2), F(7, 3), strict=True)
    nc = negate(c)
    rng = random.Random(11)
    for _ in range(200):
        x = (F(rng.randint(-40, 40), rng.randint(1, 5)),
             F(rng.randint(-40, 40), rng.randint(1, 5)))
        assert c.satisfied_by(x) != nc.satisfied_by(x)


def test_zero_normal_rejected():
    with pytest.raises(ValueError):
        constraint((0, 0), 1)


def test_bad_dimension_rejected():
    with pytest.raises(ValueError):
        ConvexRegion(4, ())
    with pytest.raises(ValueError):
        ConvexRegion(2, (constraint((1, 0, 0), 1),))


UNIT_SQUARE = (constraint((1, 0), 1), constraint((-1, 0), 0),
               constraint((0, 1), 1), constraint((0, -1), 0))


def square_cell(lo, hi):
    return region2(constraint((1, 0), hi), constraint((-1, 0), -lo),
                   constraint((0, 1), hi), constraint((0, -1), -lo))


def test_subtract_single_halfplane_hole():
    cells = subtract([square_cell(0, 1)], [constraint((1, 0), F(1, 2))])
    assert len(cells) == 1
    res = feasible(cells[0])
    assert res.nonempty and res.witness[0] > F(1, 2)


def test_subtract_full_cover_empty():
    assert subtract([square_cell(0, 1)], list(square_cell(0, 1).constraints)) == []


def test_subtract_interior_hole_four_cells_and_sampling():
    # [0,3]^2 minus [1,2]^2: 4 disjoint cells; verified below against 10^4
    # random rational points classified independently
    outer = square_cell(0, 3)
    hole = list(square_cell(1, 2).constraints)
    cells = subtract([outer], hole)
    assert len(cells) == 4

    rng = random.Random(99)
    for _ in range(10_000):
        x = (F(rng.randint(-2, 14), 4), F(rng.randint(-2, 14), 4))
        in_outer = outer.contains_point(x)
        in_hole = all(c.satisfied_by(x) for c in hole)
        in_cells = [cell.contains_point(x) for cell in cells]
        assert sum(in_cells) <= 1  # disjoint
        assert (in_outer and not in_hole) == any(in_cells)


def test_subtract_pairwise_disjoint_by_lp():
    outer = square_cell(0, 3)
    cells = subtract([outer], list(square_cell(1, 2).constraints))
    for a in range(len(cells)):
        for b in range(a + 1, len(cells)):
            merged = cells[a].with_constraints(cells[b].constraints)
            assert not feasible(merged).nonempty


def test_subtract_dimension_mismatch():
    with pytest.raises(ValueError):
        subtract([square_cell(0, 1)], [constraint((1, 0, 0), 1)])
    with pytest.raises(ValueError):
        subtract([ConvexRegion(3, ())], [constraint((1, 0), 1)])


def test_feasible_with_hint_agrees_with_feasible():
    rng = random.Random(321)
    for _ in range(200):
        cons = []
        for _ in range(rng.randint(1, 5)):
            a = (F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
            if not any(a):
                a = (F(1), F(1))
            cons.append(LinearConstraint(a, F(rng.randint(-5, 5)), rng.random() < 0.4))
        r = region2(*cons)
        hint = (F(rng.randint(-4, 4), 2), F(rng.randint(-4, 4), 2))
        assert feasible_with_hint(r, hint).nonempty == feasible(r).nonempty
