"""
padic_core.py - 係数と Laurent 元の切り捨て演算

p 進係数の Laurent 多項式 Σ c_i u^i を、絶対精度 p^N_abs と u 指数の窓
[lo_cap, hi_cap] で切り捨てて正確に計算する。Frobenius 持ち上げ σ(u) = u^q、
単元の逆元（幾何級数）、p 進桁分解もここで提供する。

表現:
  - LaurentElement は共通の p 冪 shift と整数係数 A_i を持ち、
    値は p^shift · Σ A_i u^i。A_i は [1, p^(N_abs - shift)) に正規化され、
    少なくとも1つは p と互いに素（したがって shift = w(x)）。
  - 窓の外に出た項は捨て、truncated_hi / truncated_lo フラグを立てる。
    切り捨てられた元は正確な指数範囲 [exact_lo, exact_hi] を持ち、積や和はその
    範囲を伝播して、範囲外の（不正確な）項を自動的に落とす。
"""
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Optional, Union

from sympy import isprime, multiplicity

from robba.errors import (
    ContextMismatch, InvariantViolation, NegativeSupport, NotAUnit,
    PrecisionExhausted, ZeroDivisor,
)
from robba.polygon import Interval
from slope_common.logger import get_logger

# 精度内ゼロの付値
INF = math.inf

# これより項数の積が大きい乗算は Kronecker 代入で行う
_SCHOOLBOOK_LIMIT = 2048

Number = Union[int, Fraction]

logger = get_logger("robba.padic_core")


def p_adic_valuation(n: int, p: int, cap: int) -> int:
    """整数 n の p 進付値を返す（n = 0 または cap 以上なら cap）。"""
    if n == 0:
        return cap
    return min(multiplicity(p, abs(n)), cap)


@dataclass(frozen=True)
class RingContext:
    """素数 p、Frobenius 冪 q、絶対精度、u 指数の窓、外側半径 r0 をまとめた作業用環。"""
    p: int
    q: int
    prec: int
    lo_cap: int
    hi_cap: int
    r0: Fraction = Fraction(1)

    def __post_init__(self):
        if not isprime(self.p):
            raise InvariantViolation(f"p={self.p} is not prime")
        s = multiplicity(self.p, self.q) if self.q > 1 else 0
        if s < 1 or self.p ** s != self.q:
            raise InvariantViolation(f"q={self.q} is not a positive power of p={self.p}")
        if self.prec < 1:
            raise InvariantViolation(f"prec must be >= 1, got {self.prec}")
        if self.lo_cap >= self.hi_cap:
            raise InvariantViolation(f"window [{self.lo_cap}, {self.hi_cap}] is empty")
        object.__setattr__(self, "r0", Fraction(self.r0))
        if self.r0 <= 0:
            raise InvariantViolation(f"r0 must be positive, got {self.r0}")

    @classmethod
    def from_mapping(cls, values: Mapping) -> "RingContext":
        """config.load_context_defaults() 形式の辞書から生成する。"""
        lo, hi = values["window"]
        return cls(int(values["p"]), int(values["q"]), int(values["prec"]),
                   int(lo), int(hi), Fraction(values["r0"]))

    @property
    def modulus(self) -> int:
        return self.p ** self.prec

    @property
    def window(self) -> tuple[int, int]:
        return self.lo_cap, self.hi_cap

    def widened(self, lo_cap: int, hi_cap: int) -> "RingContext":
        return replace(self, lo_cap=lo_cap, hi_cap=hi_cap)

    def check(self, other: "RingContext") -> None:
        if self != other:
            raise ContextMismatch(f"context mismatch: {self} vs {other}")


@dataclass(frozen=True, slots=True)
class PAdicScalar:
    """mantissa · p^vexp を p^N_abs を法として表す係数。ゼロは vexp = +∞。"""
    vexp: Union[int, float]
    mantissa: int = 0

    @classmethod
    def zero(cls) -> "PAdicScalar":
        return cls(INF, 0)

    @classmethod
    def from_fraction(cls, ctx: RingContext, value: Number) -> "PAdicScalar":
        """有理数を p 進係数に変換する（分母の p と素な部分は法 p^N の逆元で消す）。"""
        value = Fraction(value)
        if value == 0:
            return cls.zero()
        p = ctx.p
        num, den = value.numerator, value.denominator
        vnum = p_adic_valuation(num, p, abs(num).bit_length() + 1)
        vden = p_adic_valuation(den, p, den.bit_length() + 1)
        vexp = vnum - vden
        if vexp >= ctx.prec:
            return cls.zero()
        modulus = p ** (ctx.prec - vexp)
        unit = (num // p ** vnum) * pow(den // p ** vden, -1, modulus) % modulus
        return cls(vexp, unit)

    @classmethod
    def from_scaled(cls, ctx: RingContext, shift: int, scaled: int) -> "PAdicScalar":
        """p^shift · scaled を正規形にする。"""
        precision = ctx.prec - shift
        if precision <= 0 or scaled % ctx.p ** precision == 0:
            return cls.zero()
        scaled %= ctx.p ** precision
        v = p_adic_valuation(scaled, ctx.p, precision)
        return cls(shift + v, scaled // ctx.p ** v)

    @property
    def is_zero(self) -> bool:
        return self.vexp == INF

    def scaled(self, ctx: RingContext, shift: int) -> int:
        """値を p^shift · A と書いたときの整数 A（vexp >= shift が前提）。"""
        if self.is_zero:
            return 0
        if self.vexp < shift:
            raise InvariantViolation(f"cannot scale p^{self.vexp} down to p^{shift}")
        return self.mantissa * ctx.p ** (self.vexp - shift)

    def to_fraction(self, ctx: RingContext) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.mantissa * Fraction(ctx.p) ** self.vexp


def _convolve(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    """非負整数係数の Laurent 多項式の積（正確）。"""
    if not a or not b:
        return {}
    span_a = max(a) - min(a) + 1
    span_b = max(b) - min(b) + 1
    dense = span_a + span_b <= 4 * (len(a) + len(b))
    if len(a) * len(b) <= _SCHOOLBOOK_LIMIT or not dense:
        out: dict[int, int] = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return out
    return _kronecker(a, b, span_a, span_b)


def _kronecker(a: Mapping[int, int], b: Mapping[int, int],
               span_a: int, span_b: int) -> dict[int, int]:
    """係数を固定幅のバイト列に詰めて1回の整数乗算で畳み込む。"""
    amin, bmin = min(a), min(b)
    bound = max(a.values()) * max(b.values()) * min(len(a), len(b))
    width = bound.bit_length() // 8 + 2
    packed_a = int.from_bytes(
        b"".join(a.get(amin + k, 0).to_bytes(width, "little") for k in range(span_a)), "little")
    packed_b = int.from_bytes(
        b"".join(b.get(bmin + k, 0).to_bytes(width, "little") for k in range(span_b)), "little")
    length = span_a + span_b - 1
    data = (packed_a * packed_b).to_bytes(width * length, "little")
    out = {}
    base = amin + bmin
    for k in range(length):
        c = int.from_bytes(data[k * width:(k + 1) * width], "little")
        if c:
            out[base + k] = c
    return out


def _normalize(ctx: RingContext, shift: int, raw: Mapping[int, int],
               truncated_hi: bool = False, truncated_lo: bool = False,
               top: Optional[int] = None, bottom: Optional[int] = None) -> "LaurentElement":
    """
    p^shift · Σ raw[i] u^i を正規形に直す（法の縮約・共通 p 冪の抽出）。

    top / bottom は値が正確に分かっている指数の範囲。その外側と窓の外側の項は
    捨てて切り捨てフラグを立て、正確な範囲を exact_hi / exact_lo に残す。
    """
    hi = ctx.hi_cap if top is None else min(top, ctx.hi_cap)
    lo = ctx.lo_cap if bottom is None else max(bottom, ctx.lo_cap)
    truncated_hi = truncated_hi or hi < ctx.hi_cap
    truncated_lo = truncated_lo or lo > ctx.lo_cap
    precision = ctx.prec - shift
    kept: dict[int, int] = {}
    if precision > 0:
        modulus = ctx.p ** precision
        for i, a in raw.items():
            a %= modulus
            if not a:
                continue
            if i > hi:
                truncated_hi = True
            elif i < lo:
                truncated_lo = True
            else:
                kept[i] = a
    exact_hi = hi if truncated_hi else None
    exact_lo = lo if truncated_lo else None
    if not kept:
        return LaurentElement(ctx, 0, (), truncated_hi, truncated_lo, exact_hi, exact_lo)
    common = ctx.p ** precision
    for a in kept.values():
        common = math.gcd(common, a)
        if common == 1:
            break
    g = p_adic_valuation(common, ctx.p, precision)
    if g:
        scale = ctx.p ** g
        kept = {i: a // scale for i, a in kept.items()}
    return LaurentElement(ctx, shift + g, tuple(sorted(kept.items())),
                          truncated_hi, truncated_lo, exact_hi, exact_lo)


@dataclass(frozen=True, eq=False)
class LaurentElement:
    """
    有限台の Laurent 多項式 p^shift · Σ A_i u^i。

    値は不変。等号は係数ごと（法 p^N_abs）で判定し、切り捨てフラグは比較しない。
    truncated_hi の元は exact_hi までの指数でのみ正確（truncated_lo も同様）。
    直接のコンストラクタ呼び出しは正規形を前提とするため、通常は
    from_terms / monomial / constant を使う。
    """
    ctx: RingContext
    shift: int = 0
    coeffs: tuple[tuple[int, int], ...] = ()
    truncated_hi: bool = False
    truncated_lo: bool = False
    exact_hi: Optional[int] = None
    exact_lo: Optional[int] = None

    # --- 生成 ---

    @classmethod
    def zero(cls, ctx: RingContext) -> "LaurentElement":
        return cls(ctx)

    @classmethod
    def one(cls, ctx: RingContext) -> "LaurentElement":
        return cls.monomial(ctx, 0, 1)

    @classmethod
    def constant(cls, ctx: RingContext, value: Union[Number, PAdicScalar]) -> "LaurentElement":
        return cls.monomial(ctx, 0, value)

    @classmethod
    def monomial(cls, ctx: RingContext, exponent: int,
                 value: Union[Number, PAdicScalar] = 1) -> "LaurentElement":
        return cls.from_terms(ctx, {exponent: value})

    @classmethod
    def from_terms(cls, ctx: RingContext,
                   terms: Mapping[int, Union[Number, PAdicScalar]]) -> "LaurentElement":
        """指数 → 係数（整数・有理数・PAdicScalar）の対応から生成する。"""
        scalars = {}
        for i, c in terms.items():
            s = c if isinstance(c, PAdicScalar) else PAdicScalar.from_fraction(ctx, c)
            if not s.is_zero:
                scalars[int(i)] = s
        if not scalars:
            return cls.zero(ctx)
        shift = min(s.vexp for s in scalars.values())
        raw = {i: s.scaled(ctx, shift) for i, s in scalars.items()}
        return _normalize(ctx, shift, raw)

    # --- 基本的な性質 ---

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> Union[int, float]:
        """p 進付値 w(x)（ゼロなら +∞）。"""
        return INF if self.is_zero else self.shift

    @property
    def exponents(self) -> list[int]:
        return [i for i, _ in self.coeffs]

    @property
    def min_exponent(self) -> int:
        return self.coeffs[0][0]

    @property
    def max_exponent(self) -> int:
        return self.coeffs[-1][0]

    @property
    def is_integral(self) -> bool:
        """すべての桁が p 冪 >= 0 にあるか。"""
        return self.is_zero or self.shift >= 0

    @property
    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def truncated(self) -> bool:
        return self.truncated_hi or self.truncated_lo

    @property
    def top(self) -> int:
        """値が正確な最大の指数。"""
        return self.ctx.hi_cap if self.exact_hi is None else self.exact_hi

    @property
    def bottom(self) -> int:
        """値が正確な最小の指数。"""
        return self.ctx.lo_cap if self.exact_lo is None else self.exact_lo

    @cached_property
    def term_valuations(self) -> tuple[tuple[int, int], ...]:
        """(指数 i, w(c_i)) の組。付値の計算に繰り返し使う。"""
        p, cap = self.ctx.p, self.ctx.prec - self.shift
        return tuple((i, self.shift + p_adic_valuation(a, p, cap)) for i, a in self.coeffs)

    @property
    def terms(self) -> dict[int, PAdicScalar]:
        return {i: PAdicScalar.from_scaled(self.ctx, self.shift, a) for i, a in self.coeffs}

    def coefficient(self, exponent: int) -> PAdicScalar:
        for i, a in self.coeffs:
            if i == exponent:
                return PAdicScalar.from_scaled(self.ctx, self.shift, a)
        return PAdicScalar.zero()

    def _rebuilt(self, shift: int, raw: Mapping[int, int], offset: int = 0,
                 factor: int = 1) -> "LaurentElement":
        """同じ切り捨て状態のまま係数だけ差し替える（正確な範囲は factor 倍して offset だけずらす）。"""
        top = self.top * factor + offset if self.truncated_hi else None
        bottom = self.bottom * factor + offset if self.truncated_lo else None
        return _normalize(self.ctx, shift, raw, self.truncated_hi, self.truncated_lo, top, bottom)

    # --- 演算 ---

    def _coerce(self, other) -> "LaurentElement":
        if isinstance(other, LaurentElement):
            self.ctx.check(other.ctx)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentElement.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other) -> "LaurentElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        operands = (self, other)
        top = min((x.top for x in operands if x.truncated_hi), default=None)
        bottom = max((x.bottom for x in operands if x.truncated_lo), default=None)
        hi = self.truncated_hi or other.truncated_hi
        lo = self.truncated_lo or other.truncated_lo
        nonzero = [x for x in operands if not x.is_zero]
        if not nonzero:
            return _normalize(self.ctx, 0, {}, hi, lo, top, bottom)
        p = self.ctx.p
        base = min(x.shift for x in nonzero)
        raw: dict[int, int] = {}
        for x in nonzero:
            scale = p ** (x.shift - base)
            for i, a in x.coeffs:
                raw[i] = raw.get(i, 0) + a * scale
        return _normalize(self.ctx, base, raw, hi, lo, top, bottom)

    __radd__ = __add__

    def __neg__(self) -> "LaurentElement":
        return self._rebuilt(self.shift, {i: -a for i, a in self.coeffs})

    def __sub__(self, other) -> "LaurentElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentElement":
        return (-self) + other

    def __mul__(self, other) -> "LaurentElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        for x in (self, other):
            if x.is_zero and not x.truncated:
                return LaurentElement.zero(self.ctx)
        top = bottom = None
        for x, y in ((self, other), (other, self)):
            if x.truncated_hi and not y.is_zero:
                t = x.top + y.min_exponent
                top = t if top is None else min(top, t)
            if x.truncated_lo and not y.is_zero:
                b = x.bottom + y.max_exponent
                bottom = b if bottom is None else max(bottom, b)
        hi = self.truncated_hi or other.truncated_hi
        lo = self.truncated_lo or other.truncated_lo
        shift = self.shift + other.shift
        if self.is_zero or other.is_zero or shift >= self.ctx.prec:
            return _normalize(self.ctx, 0, {}, hi, lo, top, bottom)
        modulus = self.ctx.p ** (self.ctx.prec - shift)
        a = {i: c % modulus for i, c in self.coeffs}
        b = {j: c % modulus for j, c in other.coeffs}
        return _normalize(self.ctx, shift, _convolve(a, b), hi, lo, top, bottom)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentElement":
        if n < 0:
            raise InvariantViolation("negative powers need invert_in_field")
        result = LaurentElement.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentElement.constant(self.ctx, other)
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return (self.ctx == other.ctx and self.shift == other.shift
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.ctx, self.shift, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero:
            body = "0"
        else:
            parts = []
            for i, s in self.terms.items():
                coeff = f"{s.mantissa}" if s.vexp == 0 else f"{s.mantissa}*p^{s.vexp}"
                parts.append(coeff if i == 0 else f"{coeff}*u^{i}")
            body = " + ".join(parts)
        flags = "".join(f for f, on in (("~hi", self.truncated_hi), ("~lo", self.truncated_lo)) if on)
        return f"LaurentElement({body}{flags})"

    # --- 構造的な変形 ---

    def scale_p(self, k: int) -> "LaurentElement":
        """p^k 倍。"""
        if self.is_zero:
            return self
        return self._rebuilt(self.shift + k, dict(self.coeffs))

    def shift_u(self, k: int) -> "LaurentElement":
        """u^k 倍。"""
        return self._rebuilt(self.shift, {i + k: a for i, a in self.coeffs}, offset=k)

    def restrict(self, lo: int, hi: int) -> "LaurentElement":
        """指数 [lo, hi] の項だけを残す。"""
        kept = {i: a for i, a in self.coeffs if lo <= i <= hi}
        return self._rebuilt(self.shift, kept)

    def specialize_zero(self) -> "LaurentElement":
        """u = 0 での値（u の負冪を含む元は NegativeSupport）。"""
        if not self.is_zero and self.min_exponent < 0:
            raise NegativeSupport(f"{self!r} has negative u-support")
        if self.truncated_lo or self.top < 0:
            raise PrecisionExhausted(f"constant term of {self!r} is not known exactly")
        return _normalize(self.ctx, self.shift, {i: a for i, a in self.coeffs if i == 0})


def add(x: LaurentElement, y: LaurentElement) -> LaurentElement:
    return x + y


def mul(x: LaurentElement, y: LaurentElement) -> LaurentElement:
    return x * y


def frobenius(x: LaurentElement, iterations: int = 1) -> LaurentElement:
    """σ^iterations(x): 指数 i を i·q^iterations に置き換える（係数は不変）。"""
    if iterations < 1:
        raise InvariantViolation(f"iterations must be >= 1, got {iterations}")
    factor = x.ctx.q ** iterations
    return x._rebuilt(x.shift, {i * factor: a for i, a in x.coeffs}, factor=factor)


def digit_decompose(x: LaurentElement) -> list[tuple[int, LaurentElement]]:
    """x = Σ p^i d_i の桁分解。d_i は係数が [1, p-1] の Laurent 多項式（ゼロの桁は省く）。"""
    p = x.ctx.p
    digits: dict[int, dict[int, int]] = {}
    for i, a in x.coeffs:
        k = x.shift
        while a:
            a, d = divmod(a, p)
            if d:
                digits.setdefault(k, {})[i] = d
            k += 1
    return [(k, LaurentElement(x.ctx, 0, tuple(sorted(terms.items()))))
            for k, terms in sorted(digits.items())]


def digit_slice(x: LaurentElement, lo: Optional[int] = None,
                hi: Optional[int] = None) -> LaurentElement:
    """桁分解のうち lo <= i < hi の部分 Σ p^i d_i（None は無限）。"""
    if x.is_zero:
        return x
    p = x.ctx.p
    base = x.shift if lo is None else min(lo, x.shift)
    raw = {}
    for i, a in x.coeffs:
        c = a * p ** (x.shift - base)
        if hi is None:
            top = c
        elif hi <= base:
            top = 0
        else:
            top = c % p ** (hi - base)
        low = c % p ** (lo - base) if lo is not None else 0
        if top - low:
            raw[i] = top - low
    return x._rebuilt(base, raw)


def _mod_mul(a: Mapping[int, int], b: Mapping[int, int], modulus: int, cap: int) -> dict[int, int]:
    out = {}
    for i, c in _convolve(a, b).items():
        if i <= cap:
            c %= modulus
            if c:
                out[i] = c
    return out


def _series_inverse(poly: Mapping[int, int], modulus: int, degree: int) -> dict[int, int]:
    """定数項が単元の多項式の逆元を、次数 degree までの冪級数として返す。"""
    c_inv = pow(poly[0], -1, modulus)
    tail = sorted((j, a) for j, a in poly.items() if j > 0)
    if not tail:
        return {0: c_inv}
    out = [0] * (degree + 1)
    out[0] = c_inv
    for k in range(1, degree + 1):
        s = 0
        for j, a in tail:
            if j > k:
                break
            s += a * out[k - j]
        out[k] = (-s * c_inv) % modulus
    return {k: b for k, b in enumerate(out) if b}


def invert_in_field(x: LaurentElement) -> LaurentElement:
    """
    Γ[1/p] での逆元。

    x = p^m · x' (w(x') = 0) とし、x' の0桁目 d0 = u^v · P で割る幾何級数
    x'^{-1} = u^{-v} Σ_k h^k P^{-(k+1)}  (h = (d0 - x') u^{-v}, w(h) >= 1)
    を計算する。x' は法 p^(N-m) でしか分からないので、逆元の仮数は法 p^(N-|m|) で求め、
    m > 0 のときは絶対 p^(N-2m) 以上の桁を捨てる。P^{-1} は u の冪級数なので上側は窓で切り捨てる。
    """
    if x.is_zero:
        raise ZeroDivisor("cannot invert an element that is zero at precision")
    if x.truncated_lo:
        raise PrecisionExhausted(f"cannot invert {x!r}: terms below exponent {x.bottom} are unknown")
    ctx, p, m = x.ctx, x.ctx.p, x.shift
    precision = ctx.prec - abs(m)
    if precision <= 0:
        return LaurentElement.zero(ctx)
    if m > 0:
        logger.debug(f"invert_in_field: digits from p^{ctx.prec - 2 * m} on are unknown (w(x) = {m})")
    modulus = p ** precision
    unit = {i: a % modulus for i, a in x.coeffs}
    leading = {i: a % p for i, a in unit.items() if a % p}
    v = min(leading)
    poly = {i - v: a for i, a in leading.items()}
    h = {}
    for i, a in unit.items():
        c = (leading.get(i, 0) - a) % modulus
        if c:
            h[i - v] = c
    loss = max(0, -min(h)) if h else 0
    top = x.top - 2 * v - 2 * precision * loss if x.truncated_hi else None
    if len(unit) == 1:
        return _normalize(ctx, -m, {-v: pow(unit[v], -1, modulus)}, x.truncated_hi, False, top)

    cap = ctx.hi_cap + v + 2 * precision * loss + 1
    q_series = _series_inverse(poly, modulus, cap)
    acc = q_series
    if h:
        # Horner: acc <- P^{-1} (1 + h·acc)
        for _ in range(precision - 1):
            t = _mod_mul(h, acc, modulus, cap)
            t[0] = (t.get(0, 0) + 1) % modulus
            nxt = _mod_mul(q_series, t, modulus, cap)
            if nxt == acc:
                break
            acc = nxt
    series_cut = len(poly) > 1
    if series_cut:
        top = ctx.hi_cap if top is None else min(top, ctx.hi_cap)
    return _normalize(ctx, -m, {i - v: a for i, a in acc.items()},
                      x.truncated_hi or series_cut, False, top)


def certify_inverse(x: LaurentElement, y: LaurentElement) -> None:
    """x·y - 1 が正確に分かる範囲で、到達可能な精度までゼロであることを確認する。"""
    residual = x * y - 1
    if residual.bottom > residual.top:
        raise PrecisionExhausted(
            f"window [{x.ctx.lo_cap}, {x.ctx.hi_cap}] too narrow to certify the inverse of {x!r}")
    bound = x.ctx.prec - abs(x.shift)
    if residual.valuation < bound:
        raise PrecisionExhausted(
            f"inverse residual has valuation {residual.valuation} < {bound} "
            f"on [{residual.bottom}, {residual.top}]")


def invert_unit(x: LaurentElement, r: Number) -> LaurentElement:
    """(0, r] に傾きを持たない x の逆元。乗算して 1 に戻ることを確認してから返す。"""
    from robba.valuations import is_unit

    r = Fraction(r)
    if r <= 0 or r > x.ctx.r0:
        raise InvariantViolation(f"radius {r} outside (0, {x.ctx.r0}]")
    if x.is_zero:
        raise ZeroDivisor("cannot invert an element that is zero at precision")
    if not is_unit(x, Interval(Fraction(0), r)):
        raise NotAUnit(f"{x!r} has a slope in (0, {r}]")
    y = invert_in_field(x)
    certify_inverse(x, y)
    return y
