"""
decorator.py - CLI 共通デコレータ

@cli_bootstrap デコレータを提供する。
すべての CLI エントリポイントにこのデコレータを適用することで、
構造化ログ・エラーハンドリングが自動的に有効になる。

使い方:
    @cli_bootstrap(service_name="robba-slopes")
    def run(command, context, logger=None):
        ...
"""
from functools import wraps
from slope_common.logger import get_logger, log_start, log_end, log_error


def cli_bootstrap(service_name: str):
    """
    1行でログ・エラーハンドリングを初期化するデコレータ。

    デコレータ適用時（モジュールロード時）に以下を実行:
      - サービス名付きロガーの生成

    各呼び出し時に以下を自動実行:
      - START ログ出力
      - 正常終了時に END ログ出力
      - 例外発生時に ERROR ログ出力 → 例外を再raise（終了コード変換は呼び出し側）
    """
    def decorator(func):
        # デコレータ適用時に1回だけ実行
        logger = get_logger(service_name)

        @wraps(func)
        def wrapper(command, context):
            run_id = context.run_id
            log_start(logger, service_name, run_id, command)
            try:
                # 元の関数に logger を注入して呼び出し
                result = func(command, context, logger=logger)
                log_end(logger, service_name, run_id)
                return result
            except Exception as e:
                log_error(logger, service_name, run_id, e)
                raise
        return wrapper
    return decorator
