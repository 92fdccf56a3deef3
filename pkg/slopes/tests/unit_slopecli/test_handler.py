import json
import pytest
from unittest.mock import patch, MagicMock
from handler import UsageError, classify


class TestClassify:
    def test_known_verb(self, make_command):
        assert classify(make_command("polygon", "x.json")) == "polygon"

    def test_verb_without_inputs(self, make_command):
        assert classify(make_command("selftest")) == "selftest"

    def test_unknown_verb_raises(self, make_command):
        with pytest.raises(UsageError, match="unknown verb"):
            classify(make_command("bogus"))

    def test_wrong_arity_raises(self, make_command):
        with pytest.raises(UsageError, match="takes 2 input"):
            classify(make_command("divrem", "y.json"))

    def test_arity_range(self, make_command):
        """module-algebra は1〜2ファイル"""
        assert classify(make_command("module-algebra", "a.json", "b.json")) == "module-algebra"
        with pytest.raises(UsageError, match="1-2"):
            classify(make_command("module-algebra"))


class TestParseCommand:
    def test_defaults_from_environment(self):
        from handler import build_parser, parse_command
        command = parse_command(["polygon", "x.json"], build_parser())
        assert command["seed"] == 42
        assert command["max_iter"] == 64
        assert command["prec"] is None
        assert command["options"]["strict"] is False

    def test_flags(self):
        from handler import build_parser, parse_command
        command = parse_command(["solve-h1", "x.json", "--n", "2", "--window=-8:40", "--strict"],
                                build_parser())
        assert command["options"]["n"] == 2
        assert command["window"] == (-8, 40)
        assert command["options"]["strict"] is True

    def test_target_above_precision(self):
        from handler import build_parser, parse_command
        with pytest.raises(UsageError, match="exceeds"):
            parse_command(["divrem", "y.json", "x.json", "--prec", "10", "--target", "11"], build_parser())


class TestMainUsage:
    def test_unknown_verb(self, capsys):
        from handler import main
        assert main(["bogus"]) == 2
        assert "verbs:" in capsys.readouterr().err

    def test_missing_input(self):
        from handler import main
        assert main(["polygon"]) == 2

    def test_nonpositive_precision(self):
        """数値フラグは計算前に検証する"""
        from handler import main
        assert main(["example-7-3", "--prec", "0"]) == 2

    def test_empty_window(self):
        from handler import main
        assert main(["example-7-3", "--window", "5:5"]) == 2


class TestMainExitCodes:
    def _run_with(self, outcome, mock_renderer):
        from handler import main
        mock_renderer.render.return_value = ("{}\n", "polygon: done")
        fake = MagicMock(side_effect=outcome) if isinstance(outcome, Exception) else MagicMock(return_value=outcome)
        with patch.dict("handler.DISPATCHERS", {"polygon": fake}):
            return main(["polygon", "x.json"])

    @patch("handler.sender")
    @patch("handler.renderer")
    def test_success(self, mock_renderer, mock_sender):
        assert self._run_with({"polygon": {}}, mock_renderer) == 0
        mock_sender.send.assert_called_once_with("{}\n", None)

    @patch("handler.sender")
    @patch("handler.renderer")
    def test_violation_after_report(self, mock_renderer, mock_sender):
        """反例はレポートを書いてから終了コード 6"""
        assert self._run_with({"violation": "special below generic"}, mock_renderer) == 6
        mock_sender.send.assert_called_once()

    @pytest.mark.parametrize("error, code", [
        ("HypothesisFailed", 4),
        ("PrecisionExhausted", 5),
        ("WindowOverflow", 5),
        ("NotAUnit", 5),
        ("ParseError", 3),
        ("DetHasSlopes", 3),
    ])
    @patch("handler.sender")
    @patch("handler.renderer")
    def test_library_errors(self, mock_renderer, mock_sender, error, code):
        from robba import errors
        assert self._run_with(getattr(errors, error)("boom"), mock_renderer) == code
        mock_sender.send.assert_not_called()

    @patch("handler.sender")
    @patch("handler.renderer")
    def test_unexpected_error(self, mock_renderer, mock_sender):
        assert self._run_with(RuntimeError("boom"), mock_renderer) == 1


class TestMainEndToEnd:
    def test_example_report_file(self, tmp_path):
        from handler import main
        out = tmp_path / "reports" / "example.json"
        assert main(["example-7-3", "--out", str(out)]) == 0
        document = json.loads(out.read_text(encoding="utf-8"))
        assert document["verb"] == "example-7-3"
        assert document["result"]["report"]["comparison"] == "special_above"

    def test_report_is_deterministic(self, tmp_path):
        from handler import main
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        main(["example-7-3", "--out", str(first)])
        main(["example-7-3", "--out", str(second)])
        assert first.read_bytes() == second.read_bytes()

    def test_parse_error_exit_code(self, tmp_path):
        from handler import main
        broken = tmp_path / "broken.json"
        broken.write_text("{", encoding="utf-8")
        assert main(["polygon", str(broken)]) == 3
