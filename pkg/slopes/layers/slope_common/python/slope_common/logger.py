"""
logger.py - 構造化ログ出力

CLI・ライブラリ共通の構造化ログ（空白区切りプレーンテキスト形式）を提供する。
selftest の並列実行でもログを追いやすいよう、全コマンドで統一されたフォーマットで出力する。

出力形式: phase service run_id timestamp ...
  - START: phase service run_id timestamp command_summary
  - END:   phase service run_id timestamp SUCCESS
  - WARN:  phase service run_id timestamp message
  - ERROR: phase service run_id timestamp FAILURE error_type error_message
           (次行以降にスタックトレース)
"""
import logging
import os
import traceback
from datetime import datetime, timezone
from zoneinfo import ZoneInfo

# タイムスタンプ出力用の日本標準時
JST = ZoneInfo("Asia/Tokyo")


def get_logger(service_name: str) -> logging.Logger:
    """サービス名を名前空間とするロガーを取得する（レベルは ROBBA_LOG_LEVEL）。"""
    logger = logging.getLogger(service_name)
    level = os.environ.get("ROBBA_LOG_LEVEL", "INFO").upper()
    logger.setLevel(getattr(logging, level, logging.INFO))
    return logger


def _now_jst() -> str:
    """現在時刻をJSTのISO 8601形式で返す（ログのタイムスタンプ用）。"""
    return datetime.now(timezone.utc).astimezone(JST).isoformat()


def _summarize_command(command: dict) -> str:
    """
    コマンドの要約文字列を生成する。

    行列や要素のリテラルをそのまま出すと巨大になるため、
    動詞と入力件数・シードだけの短い要約に変換する。
    """
    verb = command.get("verb", "")
    if not verb:
        return "unknown"
    parts = [verb, f"inputs={len(command.get('inputs', []))}"]
    if command.get("seed") is not None:
        parts.append(f"seed={command['seed']}")
    return " ".join(parts)


def log_start(logger: logging.Logger, service_name: str,
              run_id: str, command: dict) -> None:
    """コマンド実行開始ログを出力する。"""
    logger.info(f"START {service_name} {run_id} {_now_jst()} {_summarize_command(command)}")


def log_end(logger: logging.Logger, service_name: str,
            run_id: str) -> None:
    """コマンド正常終了ログを出力する。"""
    logger.info(f"END {service_name} {run_id} {_now_jst()} SUCCESS")


def log_error(logger: logging.Logger, service_name: str,
              run_id: str, error: Exception) -> None:
    """コマンド異常終了ログを出力する（次行以降にスタックトレース）。"""
    logger.error(
        f"ERROR {service_name} {run_id} {_now_jst()} FAILURE {type(error).__name__} {error}\n{traceback.format_exc()}"
    )


def log_warn(logger: logging.Logger, service_name: str,
             run_id: str, message: str) -> None:
    """個別インスタンス処理の警告ログを出力する（処理続行時に使用）。"""
    logger.warning(f"WARN {service_name} {run_id} {_now_jst()} {message}")
