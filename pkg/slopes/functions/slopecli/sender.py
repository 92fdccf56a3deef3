"""
sender.py - レポートの出力

レンダリング済みのレポートを --out のファイル（未指定なら標準出力）へ書き出す。
"""
import sys
from pathlib import Path
from typing import Optional


def send(document: str, out_path: Optional[str] = None) -> None:
    """
    レポートを書き出す。

    Args:
        document: renderer.render() が返したレポート本文
        out_path: 出力先ファイル。None なら標準出力
    """
    if out_path is None:
        sys.stdout.write(document)
        return
    path = Path(out_path)
    # 出力先ディレクトリがなければ作る
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(document, encoding="utf-8")
