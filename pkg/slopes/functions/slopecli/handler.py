"""
handler.py - CLI エントリポイント

コマンドライン引数を検証してコマンド辞書を組み立て、動詞に応じた
ハンドラへディスパッチ → レンダリング → レポート出力 の一連の処理を行う。

処理フロー:
  1. main() で引数を解析し、数値の上書き値をすべて検証する（計算前）
  2. classify() で動詞と入力ファイル数を確認
  3. 対応する execute() で計算し、結果辞書を得る
  4. renderer.render() で決定的な JSON レポートと要約行を生成
  5. sender.send() でファイルまたは標準出力へ書き出す
  6. 例外は mappings/exit_codes.json に従って終了コードへ変換する
"""
import argparse
import json
import logging
import sys
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from slope_common.config import load_context_defaults, parse_window
from slope_common.decorator import cli_bootstrap

from robba.errors import Violation
from handlers import (compare, divrem, example73, goodmodel, hn_generic, hn_special, module_algebra, polygon,
                      selftest, solve_h1, triangularize)
from utils import exit_code_for
import renderer
import sender

SERVICE_NAME = "robba-slopes"

# --- モジュールレベル初期化 ---

# マッピング定義の読み込み（verbs: 動詞→ハンドラ・入力数、exit_codes: 例外→終了コード）
_HERE = Path(__file__).resolve().parent

with open(_HERE / "mappings" / "verbs.json", encoding="utf-8") as f:
    VERBS = json.load(f)
with open(_HERE / "mappings" / "exit_codes.json", encoding="utf-8") as f:
    EXIT_CODES = json.load(f)

DISPATCHERS = {
    "polygon": polygon.execute,
    "divrem": divrem.execute,
    "hn_generic": hn_generic.execute,
    "hn_special": hn_special.execute,
    "compare": compare.execute,
    "triangularize": triangularize.execute,
    "goodmodel": goodmodel.execute,
    "solve_h1": solve_h1.execute,
    "module_algebra": module_algebra.execute,
    "selftest": selftest.execute,
    "example73": example73.execute,
}


class UsageError(ValueError):
    """動詞・入力数・フラグの値が不正（終了コード 2）。"""


@dataclass(frozen=True)
class RunContext:
    """1回の実行を識別するコンテキスト（ログの run_id）。"""
    run_id: str = field(default_factory=lambda: uuid.uuid4().hex)


@cli_bootstrap(service_name=SERVICE_NAME)
def run(command: dict, context: RunContext, logger=None) -> dict:
    """検証済みのコマンドを実行し、レポートを書き出す。"""
    verb = classify(command)
    execute = DISPATCHERS[VERBS[verb]["handler"]]

    result = execute(command, context, logger)

    document, summary = renderer.render(verb, result)
    sender.send(document, command.get("out"))
    logger.info(summary)

    # 比較定理の反例・selftest の失敗はレポートを書いた後で終了コード 6 にする
    if "violation" in result:
        raise Violation(result["violation"])
    return result


def classify(command: dict) -> str:
    """
    動詞を確認して返す。

    判定ロジック:
      - verbs.json にない動詞 → UsageError
      - 入力ファイル数が verbs.json の [最小, 最大] の外 → UsageError
    """
    verb = command.get("verb")
    if verb not in VERBS:
        raise UsageError(f"unknown verb {verb!r}")
    lo, hi = VERBS[verb]["inputs"]
    count = len(command.get("inputs", []))
    if not lo <= count <= hi:
        expected = str(lo) if lo == hi else f"{lo}-{hi}"
        raise UsageError(f"{verb} takes {expected} input file(s), got {count}")
    return verb


def usage_text() -> str:
    lines = ["verbs:"]
    width = max(len(v) for v in VERBS)
    for verb, entry in VERBS.items():
        lines.append(f"  {verb.ljust(width)}  {entry['summary']}")
    return "\n".join(lines) + "\n"


# --- 引数の解析と検証 ---

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = parse_window(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
    if lo >= hi:
        raise argparse.ArgumentTypeError(f"window {text!r} is empty (need LO < HI)")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robba-slopes",
        description="Exact slope computations for Frobenius modules over truncated Robba rings.",
        epilog=usage_text(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("verb")
    parser.add_argument("inputs", nargs="*")
    parser.add_argument("--prec", type=_positive_int, help="absolute p-adic precision N_abs")
    parser.add_argument("--window", type=_window, help="retained u-exponent window LO:HI")
    parser.add_argument("--seed", type=int, help="seed for cyclic vectors and instance generators")
    parser.add_argument("--instances", type=_positive_int, help="instances per randomized selftest suite")
    parser.add_argument("--target", type=_positive_int, help="residual valuation target")
    parser.add_argument("--out", help="report path (default: stdout)")
    parser.add_argument("--radius", help="radius r for divrem (rational string)")
    parser.add_argument("--interval", help="radius interval LO:HI for polygon")
    parser.add_argument("--n", type=_positive_int, help="twist n for solve-h1")
    parser.add_argument("--op", help="module-algebra operation")
    parser.add_argument("--arg", type=int, help="integer argument of the module-algebra operation")
    parser.add_argument("--strict", action="store_true", help="solve-h1: fail when the window truncates")
    return parser


def parse_command(argv: Optional[list[str]], parser: argparse.ArgumentParser) -> dict:
    """引数からコマンド辞書を作る。未指定の値は環境変数の既定値で埋める。"""
    args = parser.parse_args(argv)
    defaults = load_context_defaults()
    prec = args.prec if args.prec is not None else defaults["prec"]
    if args.target is not None and args.target > prec:
        raise UsageError(f"--target {args.target} exceeds the precision {prec}")
    return {
        "verb": args.verb,
        "inputs": list(args.inputs),
        "out": args.out,
        "prec": args.prec,
        "window": args.window,
        "seed": args.seed if args.seed is not None else defaults["seed"],
        "instances": args.instances,
        "target": args.target,
        "max_iter": defaults["max_iterations"],
        "options": {"radius": args.radius, "interval": args.interval, "n": args.n,
                    "op": args.op, "arg": args.arg, "strict": args.strict},
    }


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(message)s")
    parser = build_parser()
    try:
        command = parse_command(argv, parser)
        classify(command)
    except SystemExit as e:
        # argparse のエラー（終了コード 2）と --help（0）
        return int(e.code or 0)
    except (UsageError, ValueError) as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {e}\n{usage_text()}")
        return EXIT_CODES["usage"]

    try:
        run(command, RunContext())
    except Exception as e:
        # ERROR ログはデコレータが出力済み
        return exit_code_for(e, EXIT_CODES)
    return EXIT_CODES["success"]


if __name__ == "__main__":
    sys.exit(main())
