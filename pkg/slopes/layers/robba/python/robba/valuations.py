"""
valuations.py - 部分付値・重み付き付値・元の Newton 多角形

v_n(x) = min{ i : w(c_i) <= n }、v_{n,r}(x) = r·v_n(x) + n、
w_r(x) = min_n v_{n,r}(x) を有理数のまま正確に計算する。
単元判定・高さ・半単元表示（桁分解）・分割・近似・位置合わせもここで扱う。

n の範囲は [w(x), N_abs)。N_abs - 1 に触れる凸包は precision_limited とする。
"""
from fractions import Fraction
from functools import lru_cache
from typing import Union

from slope_common.logger import get_logger

from robba.errors import InvariantViolation, PrecisionExhausted, ZeroElement
from robba.padic_core import INF, LaurentElement, digit_decompose, digit_slice, frobenius, invert_in_field
from robba.polygon import Interval, NewtonPolygon, element_polygon_from_points

logger = get_logger("robba.valuations")

Valuation = Union[int, Fraction, float]


@lru_cache(maxsize=4096)
def _partial_table(x: LaurentElement) -> tuple[tuple[int, Union[int, float]], ...]:
    """(n, v_n) の表（n = w(x) .. N_abs - 1）。"""
    by_valuation = sorted(x.term_valuations, key=lambda t: t[1])
    out = []
    best: Union[int, float] = INF
    idx = 0
    for n in range(x.shift, x.ctx.prec):
        while idx < len(by_valuation) and by_valuation[idx][1] <= n:
            best = min(best, by_valuation[idx][0])
            idx += 1
        out.append((n, best))
    return tuple(out)


def partial_valuation(x: LaurentElement, n: int) -> Union[int, float]:
    """v_n(x)。n >= N_abs は保持している項だけから求めた値（精度制限付き）。"""
    if n >= x.ctx.prec:
        logger.debug(f"partial valuation at n={n} is precision-limited (N_abs={x.ctx.prec})")
    best: Union[int, float] = INF
    for i, w in x.term_valuations:
        if w <= n and i < best:
            best = i
    return best


def partial_weighted(x: LaurentElement, n: int, r: Fraction) -> Valuation:
    """v_{n,r}(x) = r·v_n(x) + n。"""
    v = partial_valuation(x, n)
    return INF if v == INF else Fraction(r) * v + n


def weighted_valuation(x: LaurentElement, r: Union[Fraction, int]) -> Valuation:
    """w_r(x) = min over terms of r·i + w(c_i)（r = 0 なら p 進付値 w）。"""
    r = Fraction(r)
    if r < 0 or r > x.ctx.r0:
        raise InvariantViolation(f"radius {r} outside [0, {x.ctx.r0}]")
    if x.is_zero:
        return INF
    return min(r * i + w for i, w in x.term_valuations)


def negative_digit_bound(x: LaurentElement, s: Fraction) -> Valuation:
    """min_{n<0} v_{n,s}(x)（負の桁がなければ +∞）。"""
    values = [Fraction(s) * i + w for i, w in x.term_valuations if w < 0]
    return min(values) if values else INF


def interval_min_valuation(x: LaurentElement, interval: Interval) -> Valuation:
    """閉区間での min_s w_s(x)。s ↦ w_s は凹なので端点で達成される。"""
    return min(weighted_valuation(x, interval.lo), weighted_valuation(x, interval.hi))


def frobenius_rescaling_holds(x: LaurentElement, r: Fraction) -> bool:
    """w_r(x) = w_{r/q}(σx) を確認する（窓の切り捨てがない場合）。"""
    return weighted_valuation(x, r) == weighted_valuation(frobenius(x), Fraction(r) / x.ctx.q)


def minimizing_digits(x: LaurentElement, r: Fraction) -> list[int]:
    """v_{n,r}(x) を最小にする n の一覧（昇順）。"""
    r = Fraction(r)
    values = [(n, r * v + n) for n, v in _partial_table(x) if v != INF]
    best = min(val for _, val in values)
    return [n for n, val in values if val == best]


def newton_polygon(x: LaurentElement, interval: Interval) -> NewtonPolygon:
    """点 (v_n, n) の下側凸包から、傾き s（= -辺の傾き）が区間外の辺を除いた多角形。"""
    if x.is_zero:
        raise ZeroElement("Newton polygon of an element that is zero at precision")
    if interval.hi > x.ctx.r0:
        raise InvariantViolation(f"interval {interval} exceeds r0={x.ctx.r0}")
    table = _partial_table(x)
    points = [(v, n) for n, v in table if v != INF]
    anchor_n = max(minimizing_digits(x, interval.hi))
    anchor_v = dict(table)[anchor_n]
    return element_polygon_from_points(points, interval, x.ctx.prec - 1, anchor_n, anchor_v)


def is_unit(x: LaurentElement, interval: Interval) -> bool:
    """区間に傾きを持たず、凸包が精度制限でもなければ単元。"""
    if x.is_zero:
        return False
    polygon = newton_polygon(x, interval)
    return polygon.is_empty and not polygon.precision_limited


def height(x: LaurentElement, r: Fraction, check: bool = True) -> int:
    """w_r(x) = v_{n,r}(x) となる最大の n。check=True なら w(x) + (0, r] の総多重度と照合する。"""
    if x.is_zero:
        raise ZeroElement("height of an element that is zero at precision")
    r = Fraction(r)
    if r <= 0 or r > x.ctx.r0:
        raise InvariantViolation(f"radius {r} outside (0, {x.ctx.r0}]")
    result = max(minimizing_digits(x, r))
    if check:
        polygon = newton_polygon(x, Interval(Fraction(0), r))
        if not polygon.precision_limited and result != x.valuation + polygon.total_multiplicity:
            raise InvariantViolation(
                f"height {result} disagrees with w + multiplicity = "
                f"{x.valuation} + {polygon.total_multiplicity}")
    return result


def semiunit_presentation(x: LaurentElement) -> list[tuple[int, LaurentElement]]:
    """桁分解を半単元表示として返す（非ゼロの各桁が r0 で単元であることを確認）。"""
    pieces = digit_decompose(x)
    whole = Interval(Fraction(0), x.ctx.r0)
    for i, digit in pieces:
        if not is_unit(digit, whole):
            raise InvariantViolation(f"digit {i} ({digit!r}) is not a unit at r0")
    return pieces


def split_at_zero(x: LaurentElement) -> tuple[LaurentElement, LaurentElement]:
    """y = 桁 <= 0 の部分、z = 桁 > 0 の部分（x = y + z）。"""
    return digit_slice(x, None, 1), digit_slice(x, 1, None)


def _ratio(s: Fraction, t: Fraction) -> Fraction:
    """s/t（t = 0 のときは s = t = 0 なので 1）。"""
    return s / t if t else Fraction(1)


def splitting_bounds_hold(x: LaurentElement, inner: LaurentElement, outer: LaurentElement,
                          a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> bool:
    """
    I = [a, b], J = [c, d] に対する分割の3つの不等式を端点と中点で確認する。

      w_s(inner) >= (s/c) w_c(x)                (s in [a, c])
      w_s(outer) >= (s/b) w_b(x)                (s in [b, d])
      min(w_s(inner), w_s(outer)) >= w_s(x)     (s in [c, b])

    inner は小さい半径側 Γ_I に置く部分（正の桁）、outer は Γ_J 側（0 以下の桁）。
    split_at_zero の戻り値 (y, z) なら inner = z, outer = y として渡す。
    """
    wc, wb = weighted_valuation(x, c), weighted_valuation(x, b)
    for s in Interval.closed(a, c).samples():
        if weighted_valuation(inner, s) < _ratio(s, c) * wc:
            return False
    for s in Interval.closed(b, d).samples():
        if weighted_valuation(outer, s) < _ratio(s, b) * wb:
            return False
    for s in Interval.closed(c, b).samples():
        if min(weighted_valuation(inner, s), weighted_valuation(outer, s)) < weighted_valuation(x, s):
            return False
    return True


def bounded_approx(x: LaurentElement, r: Fraction, interval: Interval) -> LaurentElement:
    """桁 0..m の部分 y で w_s(x - y) >= min_{n<0} v_{n,s}(x) を区間の端点・中点で満たすもの。"""
    r = Fraction(r)
    if interval.hi > r or r >= x.ctx.r0:
        raise InvariantViolation(f"bounded_approx needs {interval} inside [0, {r}] and r < r0")
    if x.is_zero:
        return x
    samples = interval.samples()
    bounds = {s: negative_digit_bound(x, s) for s in samples}
    for m in range(0, x.ctx.prec):
        y = digit_slice(x, 0, m + 1)
        diff = x - y
        if all(weighted_valuation(diff, s) >= bounds[s] for s in samples):
            logger.debug(f"bounded_approx settled at digit m={m}")
            return y
    raise PrecisionExhausted(f"no digit cutoff below N_abs={x.ctx.prec} meets the approximation bound on {interval}")


def position(x: LaurentElement, r: Fraction) -> tuple[LaurentElement, int, LaurentElement]:
    """
    単元 u と整数 i で y = u·p^i·x が
      (a) w_r(y) = 0, (b) v_0(y - 1) > 0, (c) n < 0 で v_{n,r}(y) > 0
    を満たすものを返す。i は v_{-i,r}(x) を最小にする最大の整数（右向きの走査）。
    """
    if x.is_zero:
        raise ZeroElement("cannot position an element that is zero at precision")
    r = Fraction(r)
    if r <= 0 or r > x.ctx.r0:
        raise InvariantViolation(f"radius {r} outside (0, {x.ctx.r0}]")
    i = -min(minimizing_digits(x, r))
    shifted = x.scale_p(i)
    head = digit_slice(shifted, 0, 1)
    if head.is_zero:
        raise PrecisionExhausted(f"digit 0 of p^{i}·x vanished at precision")
    unit = invert_in_field(head)
    y = unit * shifted
    if weighted_valuation(y, r) != 0:
        raise PrecisionExhausted(f"positioned element has w_r = {weighted_valuation(y, r)} at r={r}")
    if not partial_valuation(y - 1, 0) > 0:
        raise PrecisionExhausted("positioned element is not congruent to 1 at digit 0")
    if not negative_digit_bound(y, r) > 0:
        raise PrecisionExhausted(f"positioned element has v_(n,r) <= 0 for some n < 0 at r={r}")
    return unit, i, y
