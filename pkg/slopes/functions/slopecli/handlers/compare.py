"""
compare.py - generic / special 多角形の比較

比較結果が violation の場合は、レポートを書き出した後に handler が
Violation（終了コード 6）として扱う。
"""
from robba.codec import parse_module_file, serialize_report
from robba.slope_engine import VIOLATION, compare_polygons
from utils import overrides_of


def execute(command: dict, context, logger) -> dict:
    module = parse_module_file(command["inputs"][0], overrides_of(command))
    report = compare_polygons(module, seed=command["seed"])
    result = {"rank": module.rank, "report": serialize_report(report)}
    if report.comparison == VIOLATION:
        result["violation"] = report.detail
    return result
