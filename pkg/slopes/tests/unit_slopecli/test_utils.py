import pytest
from fractions import Fraction


class TestExitCodeFor:
    def test_exact_class(self, exit_codes):
        from utils import exit_code_for
        from robba.errors import HypothesisFailed
        assert exit_code_for(HypothesisFailed("x"), exit_codes) == 4

    def test_follows_mro(self, exit_codes):
        """WindowOverflow は PrecisionExhausted の対応を使う"""
        from utils import exit_code_for
        from robba.errors import NoCyclicVectorFound, WindowOverflow
        assert exit_code_for(WindowOverflow("x"), exit_codes) == 5
        assert exit_code_for(NoCyclicVectorFound("x"), exit_codes) == 5

    def test_unknown_error_uses_default(self, exit_codes):
        from utils import exit_code_for
        assert exit_code_for(KeyError("x"), exit_codes) == 1


class TestOptions:
    def test_target_default_and_clamp(self, make_command, ctx):
        from utils import target_of
        assert target_of(make_command("divrem"), ctx, 16) == 16
        assert target_of(make_command("divrem", target=30), ctx, 16) == ctx.prec

    def test_radius(self, make_command):
        from utils import radius_of
        assert radius_of(make_command("divrem"), Fraction(1, 2)) == Fraction(1, 2)
        assert radius_of(make_command("divrem", radius="1/3"), Fraction(1, 2)) == Fraction(1, 3)

    def test_overrides(self, make_command):
        from utils import overrides_of
        command = make_command("polygon")
        command["window"] = (-8, 8)
        assert overrides_of(command) == {"prec": None, "window": (-8, 8)}


class TestDocuments:
    def test_diagonal(self):
        from utils import diagonal_of
        assert diagonal_of({"diagonal": [1, 0]}, "m.json") == [1, 0]

    @pytest.mark.parametrize("raw", [{}, {"diagonal": "1,0"}, {"diagonal": [1, "0"]}, {"diagonal": [True]}])
    def test_bad_diagonal(self, raw):
        from utils import diagonal_of
        from robba.errors import ParseError
        with pytest.raises(ParseError, match="diagonal"):
            diagonal_of(raw, "m.json")

    def test_module_document(self, make_command, sample):
        from utils import load_module_document
        module, raw = load_module_document(sample("triangularize.json"), make_command("triangularize"))
        assert module.rank == 2
        assert raw["r"] == "1/2"

    def test_module_document_must_be_object(self, make_command, tmp_path):
        from utils import load_module_document
        from robba.errors import ParseError
        path = tmp_path / "list.json"
        path.write_text("[]", encoding="utf-8")
        with pytest.raises(ParseError, match="module object"):
            load_module_document(str(path), make_command("triangularize"))
