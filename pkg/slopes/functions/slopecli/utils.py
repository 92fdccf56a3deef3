"""
utils.py - ユーティリティ関数

コマンド辞書からの上書き値の取り出しや、例外 → 終了コードの変換など、
handler と各 handlers モジュールから共通で使用する補助関数を定義する。
"""
from fractions import Fraction
from typing import Any, Mapping, Optional

from robba.codec import load_json, parse_module, parse_rational
from robba.errors import ParseError
from robba.padic_core import RingContext
from robba.sigma_mod import SigmaModule


def overrides_of(command: Mapping) -> dict:
    """CLI フラグで指定された作業用環の上書き値（未指定は None）。"""
    return {"prec": command.get("prec"), "window": command.get("window")}


def option(command: Mapping, key: str, default: Any = None) -> Any:
    value = command.get("options", {}).get(key)
    return default if value is None else value


def target_of(command: Mapping, ctx: RingContext, default: int) -> int:
    """--target（未指定なら default）。作業精度を超える値は精度に丸める。"""
    target = command.get("target")
    return min(default if target is None else target, ctx.prec)


def radius_of(command: Mapping, default: Fraction) -> Fraction:
    value = option(command, "radius")
    return default if value is None else parse_rational(value, "--radius")


def load_module_document(path: str, command: Mapping) -> tuple[SigmaModule, dict]:
    """
    加群ファイルを読み、加群と元の辞書を返す。

    triangularize / goodmodel では同じファイルに "diagonal"（D の p 冪）と "r" を書く。
    """
    raw = load_json(path)
    if not isinstance(raw, dict):
        raise ParseError("expected a module object", str(path))
    return parse_module(raw, str(path), overrides_of(command)), raw


def diagonal_of(raw: Mapping, path: str) -> list[int]:
    if "diagonal" not in raw:
        raise ParseError("missing field", f"{path}: diagonal")
    exps = raw["diagonal"]
    if not isinstance(exps, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in exps):
        raise ParseError("expected a list of integers", f"{path}: diagonal")
    return exps


def exit_code_for(error: BaseException, table: Mapping) -> int:
    """例外クラスの MRO をたどって exit_codes.json の対応を引く。"""
    for cls in type(error).__mro__:
        code: Optional[int] = table["errors"].get(cls.__name__)
        if code is not None:
            return code
    return table["default"]
