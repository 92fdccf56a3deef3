"""
renderer.py - レポートのレンダリング

各ハンドラの結果辞書から、決定的な JSON レポート（キー順固定・有理数は文字列）と
端末に出す1行の要約を生成する。

レポートには実行 ID や時刻を入れない（同じ入力とシードなら同じバイト列になる）。
"""
from robba.codec import dumps


def render(verb: str, result: dict) -> tuple[str, str]:
    """
    結果辞書からレポート本文と要約行を生成する。

    Args:
        verb: 実行した動詞（mappings/verbs.json のキー）
        result: 各ハンドラの execute() の戻り値

    Returns:
        (document, summary) のタプル
    """
    document = dumps({"verb": verb, "result": result}) + "\n"
    builder = _SUMMARIES.get(verb, _summary_default)
    return document, f"{verb}: {builder(result)}"


def _slopes(polygon: dict) -> str:
    text = "[" + ", ".join(polygon["slopes"]) + "]"
    return text + " (precision limited)" if polygon.get("precision_limited") else text


def _summary_default(result: dict) -> str:
    return "done"


def _summary_polygon(result: dict) -> str:
    return f"slopes {_slopes(result['polygon'])} on {result['interval']}"


def _summary_divrem(result: dict) -> str:
    return f"height(x)={result['height_x']} height(z)={result['height_z']}"


def _summary_hn(result: dict) -> str:
    return f"rank {result['rank']} degree {result['degree']} slopes {_slopes(result['polygon'])}"


def _summary_report(result: dict) -> str:
    report = result["report"]
    special = _slopes(report["special"]) if report["special"] else "-"
    return f"{report['comparison']} generic {_slopes(report['generic'])} special {special}"


def _summary_certificate(result: dict) -> str:
    cert = result["certificate"]
    flags = ",".join(cert["flags"]) or "none"
    return f"{cert['iterations_used']} passes, target {result['target']}, flags {flags}"


def _summary_h1(result: dict) -> str:
    return f"n={result['n']} residual valuation {result['residual_valuation']}"


def _summary_algebra(result: dict) -> str:
    verdict = "matches" if result["matches_prediction"] else "differs from"
    return f"{result['op']} slopes {_slopes(result['polygon'])} {verdict} prediction"


def _summary_selftest(result: dict) -> str:
    passed = sum(1 for s in result["suites"] if not s["failed"])
    instances = sum(s["instances"] for s in result["suites"])
    return f"{passed}/{len(result['suites'])} suites passed ({instances} instances, seed {result['seed']})"


_SUMMARIES = {
    "polygon": _summary_polygon,
    "divrem": _summary_divrem,
    "hn-generic": _summary_hn,
    "hn-special": _summary_hn,
    "compare": _summary_report,
    "example-7-3": _summary_report,
    "triangularize": _summary_certificate,
    "goodmodel": _summary_certificate,
    "solve-h1": _summary_h1,
    "module-algebra": _summary_algebra,
    "selftest": _summary_selftest,
}
