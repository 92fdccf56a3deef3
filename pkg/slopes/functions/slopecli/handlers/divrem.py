"""
divrem.py - 割り算

入力は y, x の順。半径 --radius（既定 1/2）で y = q·x + z を求め、
余り z・商 q と残差の証明書を返す。
"""
from fractions import Fraction

from robba.codec import parse_element_file, serialize_certificate, serialize_element
from robba.division_factor import div_rem
from robba.valuations import height
from utils import overrides_of, radius_of, target_of

DEFAULT_TARGET = 16


def execute(command: dict, context, logger) -> dict:
    y_path, x_path = command["inputs"]
    y = parse_element_file(y_path, overrides_of(command))
    x = parse_element_file(x_path, overrides_of(command))
    r = radius_of(command, Fraction(1, 2))
    target = target_of(command, x.ctx, DEFAULT_TARGET)
    z, q, cert = div_rem(y, x, r, target, command.get("max_iter"))
    return {
        "radius": str(r),
        "target": target,
        "quotient": serialize_element(q),
        "remainder": serialize_element(z),
        "height_x": height(x, r, check=False),
        "height_z": None if z.is_zero else height(z, r, check=False),
        "certificate": serialize_certificate(cert),
    }
