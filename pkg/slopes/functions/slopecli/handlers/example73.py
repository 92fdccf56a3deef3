"""
example73.py - 入力ファイル不要の固定例

F v1 = v2, F v2 = p v1 + u v2 の階数2の加群を既定の作業用環で組み立てて比較する。
generic 多角形は {0, 1}、special 多角形は {1/2, 1/2} になる。
"""
from robba.codec import context_from, serialize_module, serialize_report
from robba.slope_engine import VIOLATION, compare_polygons, example_7_3_module
from utils import overrides_of


def execute(command: dict, context, logger) -> dict:
    module = example_7_3_module(context_from(overrides_of(command)))
    report = compare_polygons(module, seed=command["seed"])
    result = {"module": serialize_module(module), "report": serialize_report(report)}
    if report.comparison == VIOLATION:
        result["violation"] = report.detail
    return result
