"""
hn_special.py - special HN 多角形

u = 0 に特殊化した定数行列の特性多項式から多角形を作る。
"""
from robba.codec import parse_module_file, serialize_polygon
from robba.sigma_mod import degree
from robba.slope_engine import special_hn_polygon_dwork
from utils import overrides_of


def execute(command: dict, context, logger) -> dict:
    module = parse_module_file(command["inputs"][0], overrides_of(command))
    return {
        "rank": module.rank,
        "degree": degree(module),
        "polygon": serialize_polygon(special_hn_polygon_dwork(module)),
    }
