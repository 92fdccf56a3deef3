import json
import pytest
from fractions import Fraction

from robba.codec import (context_from, dumps, load_json, parse_context, parse_element, parse_interval,
                         parse_module, parse_polygon, parse_rational, parse_report, serialize_context,
                         serialize_element, serialize_polygon, serialize_report)
from robba.errors import ParseError
from robba.padic_core import LaurentElement
from robba.polygon import NewtonPolygon
from robba.sigma_mod import degree
from robba.slope_engine import SPECIAL_ABOVE, SlopeReport

EXAMPLE = {
    "ctx": {"p": 5, "q": 5, "prec": 24, "window": "-64:256", "r0": "1"},
    "frob_power": 1,
    "matrix": [[[], [[0, "5"]]], [[[0, "1"]], [[1, "1"]]]],
}


class TestElement:
    def test_parse(self, ctx):
        x = parse_element([[0, "1"], [5, "1"]], ctx)
        assert x == LaurentElement.from_terms(ctx, {0: 1, 5: 1})

    def test_repeated_exponents_are_added(self, ctx):
        x = parse_element([[1, "1/5"], [1, "4/5"]], ctx)
        assert x == LaurentElement.monomial(ctx, 1)

    def test_serialize_uses_balanced_representatives(self, ctx):
        x = LaurentElement.from_terms(ctx, {0: -1, 3: Fraction(1, 5)})
        assert serialize_element(x) == [[0, "-1"], [3, "1/5"]]

    def test_serialize_zero(self, ctx):
        assert serialize_element(LaurentElement.zero(ctx)) == []


class TestParseErrors:
    def test_not_a_list(self, ctx):
        with pytest.raises(ParseError):
            parse_element({"0": "1"}, ctx)

    def test_bad_pair(self, ctx):
        with pytest.raises(ParseError, match=r"element\[1\]"):
            parse_element([[0, "1"], [2]], ctx)

    def test_exponent_outside_window(self, narrow_ctx):
        with pytest.raises(ParseError) as e:
            parse_element([[9, "1"]], narrow_ctx)
        assert "[0][0]" in e.value.location

    @pytest.mark.parametrize("raw", ["1/0", True, 0.5, "abc"])
    def test_bad_rational(self, raw):
        with pytest.raises(ParseError):
            parse_rational(raw, "x")

    def test_rational_forms(self):
        assert parse_rational("-3/6", "x") == Fraction(-1, 2)
        assert parse_rational(4, "x") == 4

    def test_bad_json_reports_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"element\": [\n", encoding="utf-8")
        with pytest.raises(ParseError) as e:
            load_json(path)
        assert "line" in e.value.location

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="cannot read"):
            load_json(tmp_path / "missing.json")


class TestContext:
    def test_file_values(self):
        ctx = parse_context({"p": 3, "q": 9, "prec": 10, "window": [-4, 40], "r0": "1/2"})
        assert (ctx.p, ctx.q, ctx.prec, ctx.window, ctx.r0) == (3, 9, 10, (-4, 40), Fraction(1, 2))

    def test_overrides_win(self):
        ctx = parse_context({"p": 5, "q": 5, "prec": 10}, overrides={"prec": 8, "window": None})
        assert ctx.prec == 8
        assert ctx.window == (-64, 256)

    def test_bad_window(self):
        with pytest.raises(ParseError) as e:
            parse_context({"window": "64"})
        assert e.value.location == "ctx.window"

    def test_serialize(self, ctx):
        assert serialize_context(ctx) == {"p": 5, "q": 5, "prec": 24, "window": "-64:256", "r0": "1"}

    def test_environment_defaults(self):
        ctx = context_from()
        assert (ctx.p, ctx.q, ctx.prec, ctx.window) == (5, 5, 24, (-64, 256))

    def test_context_from_ignores_none(self):
        assert context_from({"prec": None, "window": (-8, 8)}).window == (-8, 8)


class TestModule:
    def test_parse_example(self):
        module = parse_module(EXAMPLE)
        assert module.rank == 2
        assert degree(module) == 1

    def test_missing_matrix(self):
        with pytest.raises(ParseError, match="matrix"):
            parse_module({"frob_power": 1})

    def test_not_square(self):
        with pytest.raises(ParseError):
            parse_module({"matrix": [[[[0, "1"]], []]]})


class TestPolygonAndReport:
    def test_serialize_polygon(self):
        polygon = NewtonPolygon.from_slopes([Fraction(1, 2), Fraction(1, 2)])
        out = serialize_polygon(polygon)
        assert out["kind"] == "module"
        assert out["slopes"] == ["1/2", "1/2"]
        assert out["precision_limited"] is False

    def test_parse_polygon_list(self):
        assert parse_polygon(["1", "0"]).multiset == [Fraction(0), Fraction(1)]

    def test_parse_polygon_requires_slopes(self):
        with pytest.raises(ParseError):
            parse_polygon({"kind": "module"})

    def test_report_reads_back(self, ctx):
        report = SlopeReport(NewtonPolygon.from_slopes([0, 1]),
                             NewtonPolygon.from_slopes([Fraction(1, 2)] * 2), SPECIAL_ABOVE)
        raw = json.loads(dumps(serialize_report(report)))
        back = parse_report(raw, ctx)
        assert back.generic.multiset == [0, 1]
        assert back.special.multiset == [Fraction(1, 2)] * 2
        assert back.comparison == SPECIAL_ABOVE
        assert back.cyclic_vector_used is None

    def test_interval(self):
        interval = parse_interval(["0", "1/2"])
        assert interval.contains(Fraction(1, 2))
        with pytest.raises(ParseError):
            parse_interval(["1", "0"])


def test_dumps_sorts_keys():
    assert dumps({"b": 1, "a": 2}).index('"a"') < dumps({"b": 1, "a": 2}).index('"b"')
