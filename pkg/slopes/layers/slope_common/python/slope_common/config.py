"""
config.py - 共通設定ロード

作業用環 (RingContext) の既定値と反復上限・乱数シードを環境変数から取得する。
CLI フラグが指定された場合はそちらが優先される（handler 側で上書き）。

対応する環境変数:
  - ROBBA_PRIME: 素数 p（既定 5）
  - ROBBA_Q: Frobenius の冪 q = p^s（既定 5）
  - ROBBA_PREC: 絶対 p 進精度 N_abs（既定 24）
  - ROBBA_WINDOW: u 指数の保持窓 "LO:HI"（既定 "-64:256"）
  - ROBBA_R0: 外側半径 r0（既定 "1"）
  - ROBBA_MAX_ITER: 反復アルゴリズムの上限回数（既定 64）
  - ROBBA_SEED: インスタンス生成のシード（既定 42）
"""
import os
from fractions import Fraction


def parse_window(text: str) -> tuple[int, int]:
    """"LO:HI" 形式の窓指定を整数の組に変換する。"""
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"window must look like LO:HI, got {text!r}")
    return int(lo), int(hi)


def load_context_defaults() -> dict:
    """
    環境変数から作業用環の既定値を辞書として返す。

    Returns:
        RingContext の引数と反復上限・シードを含む辞書
        - p, q, prec: 整数
        - window: (lo_cap, hi_cap)
        - r0: Fraction
        - max_iterations, seed: 整数
    """
    return {
        "p": int(os.environ.get("ROBBA_PRIME", "5")),
        "q": int(os.environ.get("ROBBA_Q", "5")),
        "prec": int(os.environ.get("ROBBA_PREC", "24")),
        "window": parse_window(os.environ.get("ROBBA_WINDOW", "-64:256")),
        "r0": Fraction(os.environ.get("ROBBA_R0", "1")),
        "max_iterations": int(os.environ.get("ROBBA_MAX_ITER", "64")),
        "seed": int(os.environ.get("ROBBA_SEED", "42")),
    }
