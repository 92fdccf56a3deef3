import pytest
from unittest.mock import patch, MagicMock


class TestCliBootstrap:
    @patch("slope_common.decorator.get_logger")
    def test_start_end_log_on_success(self, mock_get_logger, run_context):
        """正常終了時にSTART→ENDログが出ること"""
        mock_logger = MagicMock()
        mock_get_logger.return_value = mock_logger

        from slope_common.decorator import cli_bootstrap

        @cli_bootstrap(service_name="test-svc")
        def run(command, context, logger=None):
            return {"ok": True}

        assert run({"verb": "selftest", "inputs": []}, run_context) == {"ok": True}

        assert mock_logger.info.call_count == 2
        start_output = mock_logger.info.call_args_list[0][0][0]
        end_output = mock_logger.info.call_args_list[1][0][0]
        assert start_output.startswith("START ")
        assert "test-svc" in start_output
        assert "test-run-id-12345" in start_output
        assert "selftest inputs=0" in start_output
        assert end_output.startswith("END ")
        assert "SUCCESS" in end_output

    @patch("slope_common.decorator.get_logger")
    def test_error_log_and_reraise(self, mock_get_logger, run_context):
        """異常時にERRORログ出力→例外再raise"""
        mock_logger = MagicMock()
        mock_get_logger.return_value = mock_logger

        from robba.errors import PrecisionExhausted
        from slope_common.decorator import cli_bootstrap

        @cli_bootstrap(service_name="test-svc")
        def bad_run(command, context, logger=None):
            raise PrecisionExhausted("window too narrow")

        with pytest.raises(PrecisionExhausted, match="window too narrow"):
            bad_run({"verb": "divrem", "inputs": ["y", "x"]}, run_context)

        mock_logger.error.assert_called_once()
        err_output = mock_logger.error.call_args[0][0]
        first_line = err_output.split("\n")[0]
        assert first_line.startswith("ERROR ")
        assert "FAILURE" in first_line
        assert "PrecisionExhausted" in first_line
        assert "window too narrow" in first_line
        assert "Traceback" in err_output
        # END は出ない
        assert mock_logger.info.call_count == 1

    @patch("slope_common.decorator.get_logger")
    def test_logger_passed_to_run(self, mock_get_logger, run_context):
        """実行関数にloggerが渡されること"""
        mock_logger = MagicMock()
        mock_get_logger.return_value = mock_logger

        from slope_common.decorator import cli_bootstrap

        received_logger = None

        @cli_bootstrap(service_name="test-svc")
        def run(command, context, logger=None):
            nonlocal received_logger
            received_logger = logger

        run({}, run_context)
        assert received_logger is mock_logger
