"""
solve_h1.py - 階数1の H^1

y - p^n σ(y) = x を解き、残差の付値を返す（--n、既定 1）。
--strict を付けると、目標に届く前に σ^m(x) が窓から出た場合 WindowOverflow にする。
"""
from robba.codec import parse_element_file, serialize_element, valuation_text
from robba.errors import InvariantViolation
from robba.slope_engine import h1_residual, solve_h0_rank1, solve_h1_rank1
from utils import option, overrides_of, target_of

DEFAULT_TARGET = 16


def execute(command: dict, context, logger) -> dict:
    x = parse_element_file(command["inputs"][0], overrides_of(command))
    n = int(option(command, "n", 1))
    if n < 1:
        raise InvariantViolation(f"--n must be >= 1, got {n}")
    target = target_of(command, x.ctx, DEFAULT_TARGET)
    y = solve_h1_rank1(n, x, target, strict=bool(option(command, "strict", False)))
    residual = h1_residual(n, x, y)
    h0 = solve_h0_rank1(n)
    return {
        "n": n,
        "target": target,
        "solution": serialize_element(y),
        "truncated": y.truncated,
        "residual_valuation": valuation_text(residual.valuation),
        "h0": {"kind": h0.kind, "dimension": h0.dimension, "description": h0.description},
    }
