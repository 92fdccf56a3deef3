"""
polygon.py - 元の Newton 多角形

入力ファイルの元について、半径区間（--interval LO:HI、既定 (0, r0]）の
Newton 多角形と、区間の端点・中点での重み付き付値を返す。
"""
from fractions import Fraction

from robba.codec import parse_element_file, parse_rational, serialize_element, serialize_polygon, valuation_text
from robba.errors import ParseError
from robba.polygon import Interval
from robba.valuations import newton_polygon, weighted_valuation
from utils import option, overrides_of


def _interval(command, r0: Fraction) -> Interval:
    text = option(command, "interval")
    if text is None:
        return Interval(Fraction(0), r0)
    lo, sep, hi = str(text).partition(":")
    if not sep:
        raise ParseError(f"expected LO:HI, got {text!r}", "--interval")
    return Interval.closed(parse_rational(lo, "--interval"), parse_rational(hi, "--interval"))


def execute(command: dict, context, logger) -> dict:
    x = parse_element_file(command["inputs"][0], overrides_of(command))
    interval = _interval(command, x.ctx.r0)
    polygon = newton_polygon(x, interval)
    logger.debug(f"polygon: {len(polygon.multiset)} slopes in {interval}")
    return {
        "element": serialize_element(x),
        "interval": str(interval),
        "polygon": serialize_polygon(polygon),
        "weighted": {str(s): valuation_text(weighted_valuation(x, s)) for s in interval.samples()},
    }
