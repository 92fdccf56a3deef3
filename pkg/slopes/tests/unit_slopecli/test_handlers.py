import pytest
from unittest.mock import MagicMock


@pytest.fixture
def logger():
    return MagicMock()


class TestPolygon:
    def test_default_interval(self, make_command, sample, run_context, logger):
        from handlers.polygon import execute
        result = execute(make_command("polygon", sample("element_u5_plus_p.json")), run_context, logger)
        assert result["polygon"]["slopes"] == ["1/5"]
        assert result["interval"] == "(0, 1]"
        assert result["element"] == [[0, "5"], [5, "1"]]

    def test_interval_below_the_slope(self, make_command, sample, run_context, logger):
        from handlers.polygon import execute
        command = make_command("polygon", sample("element_u5_plus_p.json"), interval="0:1/10")
        assert execute(command, run_context, logger)["polygon"]["slopes"] == []

    def test_bad_interval(self, make_command, sample, run_context, logger):
        from handlers.polygon import execute
        from robba.errors import ParseError
        with pytest.raises(ParseError, match="--interval"):
            execute(make_command("polygon", sample("element_u5_plus_p.json"), interval="1/2"),
                    run_context, logger)


class TestDivrem:
    def test_remainder_below_height(self, make_command, sample, run_context, logger):
        """5u^-2 + 25u^3 = (u^-2 + 5u^3)(5 + u^5) + (-u^3 - 5u^8)"""
        from handlers.divrem import execute
        command = make_command("divrem", sample("divrem_y.json"), sample("divrem_x.json"))
        result = execute(command, run_context, logger)
        assert result["quotient"] == [[-2, "1"], [3, "5"]]
        assert result["remainder"] == [[3, "-1"], [8, "-5"]]
        assert result["height_x"] == 1
        assert result["height_z"] == 0
        assert result["radius"] == "1/2"
        assert all(e["satisfied"] for e in result["certificate"]["residual_valuations"])


class TestHN:
    def test_generic_constant_module(self, make_command, sample, run_context, logger):
        from handlers.hn_generic import execute
        result = execute(make_command("hn-generic", sample("standard_1_2.json")), run_context, logger)
        assert result["polygon"]["slopes"] == ["1/2", "1/2"]
        assert result["coefficient_valuations"] == ["1", "inf"]
        assert result["cyclic_vector_used"] is None
        assert (result["rank"], result["degree"], result["slope"]) == (2, 1, "1/2")

    def test_special(self, make_command, sample, run_context, logger):
        from handlers.hn_special import execute
        result = execute(make_command("hn-special", sample("example73.json")), run_context, logger)
        assert result["polygon"]["slopes"] == ["1/2", "1/2"]

    def test_compare(self, make_command, sample, run_context, logger):
        from handlers.compare import execute
        result = execute(make_command("compare", sample("example73.json")), run_context, logger)
        assert result["report"]["comparison"] == "special_above"
        assert result["report"]["generic"]["slopes"] == ["0", "1"]
        assert "violation" not in result

    def test_builtin_example(self, make_command, run_context, logger):
        from handlers.example73 import execute
        result = execute(make_command("example-7-3"), run_context, logger)
        assert result["report"]["special"]["slopes"] == ["1/2", "1/2"]
        assert result["module"]["matrix"] == [[[], [[0, "5"]]], [[[0, "1"]], [[1, "1"]]]]


class TestIterations:
    def test_triangularize(self, make_command, sample, run_context, logger):
        from handlers.triangularize import execute
        result = execute(make_command("triangularize", sample("triangularize.json")), run_context, logger)
        assert result["target"] == 12
        assert all(e["satisfied"] for e in result["certificate"]["residual_valuations"])

    def test_goodmodel(self, make_command, sample, run_context, logger):
        from handlers.goodmodel import execute
        result = execute(make_command("goodmodel", sample("goodmodel.json")), run_context, logger)
        assert result["r"] == "1/10"
        assert all(e["satisfied"] for e in result["certificate"]["residual_valuations"])

    def test_missing_diagonal(self, make_command, sample, run_context, logger):
        from handlers.triangularize import execute
        from robba.errors import ParseError
        with pytest.raises(ParseError, match="diagonal"):
            execute(make_command("triangularize", sample("example73.json")), run_context, logger)


class TestSolveH1:
    def test_window_truncation_is_reported(self, make_command, sample, run_context, logger):
        from handlers.solve_h1 import execute
        result = execute(make_command("solve-h1", sample("h1_x.json")), run_context, logger)
        assert result["n"] == 1
        assert result["truncated"] is True
        assert result["residual_valuation"] == "inf"
        assert result["h0"]["kind"] == "zero"

    def test_strict(self, make_command, sample, run_context, logger):
        from handlers.solve_h1 import execute
        from robba.errors import WindowOverflow
        with pytest.raises(WindowOverflow):
            execute(make_command("solve-h1", sample("h1_x.json"), strict=True), run_context, logger)


class TestModuleAlgebra:
    @pytest.mark.parametrize("inputs, options, slopes", [
        (["standard_1_2.json"], {"op": "wedge", "arg": 2}, ["1"]),
        (["standard_1_2.json"], {"op": "dual"}, ["-1/2", "-1/2"]),
        (["standard_1_2.json"], {"op": "twist", "arg": 1}, ["3/2", "3/2"]),
        (["standard_1_2.json", "standard_m1_1.json"], {"op": "tensor"}, ["-1/2", "-1/2"]),
        (["standard_m1_1.json", "standard_1_2.json"], {"op": "direct-sum"}, ["-1", "1/2", "1/2"]),
    ])
    def test_prediction(self, make_command, sample, run_context, logger, inputs, options, slopes):
        from handlers.module_algebra import execute
        command = make_command("module-algebra", *[sample(name) for name in inputs], **options)
        result = execute(command, run_context, logger)
        assert result["polygon"]["slopes"] == slopes
        assert result["predicted"] == slopes
        assert result["matches_prediction"] is True

    @pytest.mark.parametrize("options", [{"op": "rotate"}, {"op": "twist"}, {"op": None}])
    def test_bad_operation(self, make_command, sample, run_context, logger, options):
        from handlers.module_algebra import execute
        from robba.errors import InvariantViolation
        with pytest.raises(InvariantViolation):
            execute(make_command("module-algebra", sample("standard_1_2.json"), **options), run_context, logger)

    def test_binary_needs_two_inputs(self, make_command, sample, run_context, logger):
        from handlers.module_algebra import execute
        from robba.errors import InvariantViolation
        with pytest.raises(InvariantViolation, match="takes 2"):
            execute(make_command("module-algebra", sample("standard_1_2.json"), op="tensor"), run_context, logger)
