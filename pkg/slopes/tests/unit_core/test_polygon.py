import pytest
from fractions import Fraction

from robba.errors import InvariantViolation
from robba.polygon import Interval, NewtonPolygon, lower_hull


class TestInterval:
    def test_half_open_by_default(self):
        interval = Interval(0, 1)
        assert not interval.contains(Fraction(0))
        assert interval.contains(Fraction(1))
        assert str(interval) == "(0, 1]"

    def test_closed(self):
        interval = Interval.closed(Fraction(1, 4), Fraction(1, 2))
        assert interval.contains(Fraction(1, 4))
        assert interval.samples() == [Fraction(1, 4), Fraction(3, 8), Fraction(1, 2)]

    def test_degenerate_closed_interval(self):
        assert Interval.closed(1, 1).samples() == [Fraction(1)]

    def test_empty(self):
        with pytest.raises(InvariantViolation):
            Interval(1, 1)
        with pytest.raises(InvariantViolation):
            Interval(1, 0)


class TestLowerHull:
    def test_drops_points_above(self):
        points = [(0, 3), (2, 1), (2, 2), (1, 3), (7, 0)]
        assert lower_hull(points) == [(0, 3), (2, 1), (7, 0)]

    def test_collinear_middle_point_removed(self):
        assert lower_hull([(0, 2), (1, 1), (2, 0)]) == [(0, 2), (2, 0)]


class TestModulePolygon:
    def test_from_slopes_groups_multiplicities(self):
        polygon = NewtonPolygon.from_slopes(["1/2", 0, "1/2"])
        assert polygon.slopes == ((Fraction(0), 1), (Fraction(1, 2), 2))
        assert polygon.multiset == [0, Fraction(1, 2), Fraction(1, 2)]
        assert polygon.endpoint == (3, Fraction(1))

    def test_vertices_and_values(self):
        polygon = NewtonPolygon.from_slopes([0, 1])
        assert polygon.vertices() == [(0, 0), (1, 0), (2, 1)]
        assert polygon.value_at(Fraction(3, 2)) == Fraction(1, 2)

    def test_shifted(self):
        assert NewtonPolygon.from_slopes([0, 1]).shifted(Fraction(-1)).multiset == [-1, 0]

    def test_slopes_must_increase(self):
        with pytest.raises(InvariantViolation):
            NewtonPolygon(((Fraction(1), 1), (Fraction(0), 1)), kind="module")

    def test_slopes_must_lie_in_interval(self):
        with pytest.raises(InvariantViolation, match="outside"):
            NewtonPolygon(((Fraction(2), 1),), interval=Interval(0, 1))
