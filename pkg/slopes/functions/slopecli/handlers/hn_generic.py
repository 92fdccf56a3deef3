"""
hn_generic.py - generic HN 多角形

巡回ベクトルを探して捩れ特性多項式を作り、その Newton 多角形を返す。
"""
from robba.codec import (parse_module_file, rational_text, serialize_certificate, serialize_element,
                         serialize_polygon, valuation_text)
from robba.sigma_mod import degree, slope
from robba.slope_engine import generic_poly
from utils import overrides_of


def execute(command: dict, context, logger) -> dict:
    module = parse_module_file(command["inputs"][0], overrides_of(command))
    poly = generic_poly(module, seed=command["seed"])
    return {
        "rank": module.rank,
        "degree": degree(module),
        "polygon": serialize_polygon(poly.polygon()),
        "coefficient_valuations": [valuation_text(w) for w in poly.valuations],
        "ceiling": poly.ceiling,
        "cyclic_vector_used": [serialize_element(c) for c in poly.vector] if poly.vector else None,
        "certificate": serialize_certificate(poly.certificate),
        "slope": rational_text(slope(module)),
    }
