"""
sigma_mod.py - σ 加群と加群の演算・次数・多角形の計算

σ^a 加群は行列 A（F e_j = Σ_i A_ij e_i）と Frobenius 冪 a、定義半径 r の組で表す。
構築時に det(A) が p^c × (0, r] の単元であることを確認する。

基底の順序:
  - tensor: e_i ⊗ f_j を (i, j) の辞書式（行優先の Kronecker 積）
  - wedge:  e_{i1} ∧ ... ∧ e_{ik}（i1 < ... < ik）の辞書式
  - pullback: e_i ⊗ σ^j を添字 j·rank + i
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence

from robba.errors import (
    DetHasSlopes, EndpointMismatch, FrobeniusPowerMismatch, InvariantViolation,
    NotCoprime, PrecisionExhausted,
)
from robba.matrices import (
    Matrix, as_matrix, block_diagonal, compound, context_of, kronecker, matrix_det,
    matrix_inverse, matrix_mul, matrix_scale_p, sigma_matrix, transpose,
)
from robba.padic_core import LaurentElement, RingContext, certify_inverse, frobenius, invert_in_field
from robba.polygon import Interval, NewtonPolygon
from robba.valuations import minimizing_digits, newton_polygon


@dataclass(frozen=True)
class SigmaModule:
    """
    σ^frob_power 加群。

    不変条件: det(A) は精度内で非ゼロかつ (0, radius] に傾きを持たない
    （p^c × 単元）。傾きがあれば DetHasSlopes、精度内でゼロなら PrecisionExhausted。
    さらに X = adj(A)·(p^{-c} det A)^{-1} が A·X = p^c·I を満たすことを、
    単元部分の逆元の検証（A·adj(A) = det(A)·I）で確かめる。
    """
    matrix: Matrix
    frob_power: int = 1
    radius: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_matrix(self.matrix))
        if not self.matrix:
            raise InvariantViolation("a sigma-module needs rank >= 1")
        ctx = context_of(self.matrix)
        for row in self.matrix:
            for a in row:
                ctx.check(a.ctx)
        if self.frob_power < 1:
            raise InvariantViolation(f"frob_power must be >= 1, got {self.frob_power}")
        radius = ctx.r0 if self.radius is None else Fraction(self.radius)
        if not 0 < radius <= ctx.r0:
            raise InvariantViolation(f"radius {radius} outside (0, {ctx.r0}]")
        object.__setattr__(self, "radius", radius)
        det = matrix_det(self.matrix)
        if det.is_zero:
            raise PrecisionExhausted("det(A) vanishes at precision")
        polygon = newton_polygon(det, Interval(Fraction(0), radius))
        if polygon.is_empty and polygon.precision_limited:
            raise PrecisionExhausted(f"Newton polygon of det(A) reaches the precision ceiling on (0, {radius}]")
        if not polygon.is_empty:
            raise DetHasSlopes(f"det(A) has slopes {polygon} in (0, {radius}]")
        unit = det.scale_p(-det.valuation)
        certify_inverse(unit, invert_in_field(unit))
        object.__setattr__(self, "_det", det)

    @property
    def ctx(self) -> RingContext:
        return context_of(self.matrix)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def det(self) -> LaurentElement:
        return self._det

    def apply(self, vector: Sequence[LaurentElement]) -> tuple[LaurentElement, ...]:
        """F(v) = A·σ^a(v)。"""
        twisted = [frobenius(c, self.frob_power) for c in vector]
        out = []
        for row in self.matrix:
            acc = LaurentElement.zero(self.ctx)
            for a, c in zip(row, twisted):
                if not a.is_zero and not c.is_zero:
                    acc = acc + a * c
            out.append(acc)
        return tuple(out)

    def __repr__(self) -> str:
        return f"SigmaModule(rank={self.rank}, frob_power={self.frob_power}, radius={self.radius})"


def _require_same_power(*modules: SigmaModule) -> None:
    powers = {m.frob_power for m in modules}
    if len(powers) > 1:
        raise FrobeniusPowerMismatch(f"modules over different Frobenius powers: {sorted(powers)}")
    contexts = {m.ctx for m in modules}
    if len(contexts) > 1:
        modules[0].ctx.check(modules[1].ctx)


def _radius_of(*modules: SigmaModule) -> Fraction:
    return min(m.radius for m in modules)


# --- 標準加群と加群の演算 ---

def standard_module(ctx: RingContext, c: int, d: int) -> SigmaModule:
    """M_{c,d}: F e_i = e_{i+1}（i < d）、F e_d = p^c e_1。"""
    if d < 1:
        raise InvariantViolation(f"d must be >= 1, got {d}")
    if gcd(c, d) != 1:
        raise NotCoprime(f"gcd({c}, {d}) != 1")
    one, zero = LaurentElement.one(ctx), LaurentElement.zero(ctx)
    rows = [[zero] * d for _ in range(d)]
    for i in range(d - 1):
        rows[i + 1][i] = one
    rows[0][d - 1] = LaurentElement.one(ctx).scale_p(c)
    return SigmaModule(as_matrix(rows))


def twist(module: SigmaModule, c: int) -> SigmaModule:
    """Frobenius を p^c 倍する。"""
    return SigmaModule(matrix_scale_p(module.matrix, c), module.frob_power, module.radius)


def dual(module: SigmaModule) -> SigmaModule:
    """双対: 行列は (A^{-1})^T。"""
    return SigmaModule(transpose(matrix_inverse(module.matrix)), module.frob_power, module.radius)


def tensor(left: SigmaModule, right: SigmaModule) -> SigmaModule:
    _require_same_power(left, right)
    return SigmaModule(kronecker(left.matrix, right.matrix), left.frob_power, _radius_of(left, right))


def wedge(module: SigmaModule, k: int) -> SigmaModule:
    return SigmaModule(compound(module.matrix, k), module.frob_power, module.radius)


def direct_sum(left: SigmaModule, right: SigmaModule) -> SigmaModule:
    _require_same_power(left, right)
    return SigmaModule(block_diagonal(left.matrix, right.matrix), left.frob_power,
                       _radius_of(left, right))


def pushforward(module: SigmaModule, a: int) -> SigmaModule:
    """[a]_*: F^a を σ^{a·b} 加群の Frobenius とみなす。行列は A·σ^b(A)·…·σ^{b(a-1)}(A)。"""
    if a < 1:
        raise InvariantViolation(f"pushforward needs a >= 1, got {a}")
    b = module.frob_power
    result = module.matrix
    for k in range(1, a):
        result = matrix_mul(result, sigma_matrix(module.matrix, b * k))
    return SigmaModule(result, a * b, module.radius)


def pullback(module: SigmaModule, a: int) -> SigmaModule:
    """
    [a]^*: σ^{a·b} 加群 N から階数 a·m の σ^b 加群を作る。

    F(e_i ⊗ σ^j) = e_i ⊗ σ^{j+1}（j < a-1）、F(e_i ⊗ σ^{a-1}) = Σ_k N_ki (e_k ⊗ 1)。
    """
    if a < 1:
        raise InvariantViolation(f"pullback needs a >= 1, got {a}")
    if module.frob_power % a:
        raise FrobeniusPowerMismatch(
            f"pullback by {a} needs frob_power divisible by {a}, got {module.frob_power}")
    if a == 1:
        return module
    ctx, m = module.ctx, module.rank
    one, zero = LaurentElement.one(ctx), LaurentElement.zero(ctx)
    size = a * m
    rows = [[zero] * size for _ in range(size)]
    for j in range(a - 1):
        for i in range(m):
            rows[(j + 1) * m + i][j * m + i] = one
    for i in range(m):
        for k in range(m):
            rows[k][(a - 1) * m + i] = module.matrix[k][i]
    return SigmaModule(as_matrix(rows), module.frob_power // a, module.radius)


def degree(module: SigmaModule) -> int:
    """det(A) = p^c × 単元 の c（半径 radius で v_{n,r}(det) を最小にする唯一の n）。"""
    digits = minimizing_digits(module.det, module.radius)
    if len(digits) != 1 or digits[0] != module.det.valuation:
        raise DetHasSlopes(f"det(A) minimizers {digits} do not single out w(det) = {module.det.valuation}")
    return digits[0]


def slope(module: SigmaModule) -> Fraction:
    return Fraction(degree(module), module.rank)


# --- 傾きの予測（関手性） ---

def predicted_slopes(operation: str, slopes: Iterable[Fraction], argument=None) -> list[Fraction]:
    """
    加群の演算が HN 傾きの多重集合に与える変換。

    twist(b): s + b、dual: -s、pushforward(a): a·s、pullback(a): s/a を a 重、
    wedge(k): k 元部分集合の和、tensor(T): s + t、direct_sum(T): 和集合。
    """
    values = [Fraction(s) for s in slopes]
    if operation == "twist":
        out = [s + argument for s in values]
    elif operation == "dual":
        out = [-s for s in values]
    elif operation == "pushforward":
        out = [argument * s for s in values]
    elif operation == "pullback":
        out = [s / argument for s in values for _ in range(argument)]
    elif operation == "wedge":
        out = [sum(c, Fraction(0)) for c in combinations(values, argument)]
    elif operation == "tensor":
        out = [s + Fraction(t) for s in values for t in argument]
    elif operation == "direct_sum":
        out = values + [Fraction(t) for t in argument]
    else:
        raise InvariantViolation(f"unknown module operation {operation!r}")
    return sorted(out)


def standard_tensor_type(c: int, d: int, c2: int, d2: int) -> tuple[int, int, int]:
    """M_{c,d} ⊗ M_{c2,d2} ≅ M_{c'',d''}^{⊕ d·d2/d''} の (c'', d'', 重複度)。"""
    for cc, dd in ((c, d), (c2, d2)):
        if dd < 1 or gcd(cc, dd) != 1:
            raise NotCoprime(f"({cc}, {dd}) is not a coprime pair with d >= 1")
    total = Fraction(c, d) + Fraction(c2, d2)
    return total.numerator, total.denominator, d * d2 // total.denominator


def hom_nonzero(source: Fraction, target: Fraction) -> bool:
    """Hom(M_source, M_target) ≠ 0 ⟺ source ≥ target（傾きで比較）。"""
    return Fraction(source) >= Fraction(target)


def ext_nonzero(source: Fraction, target: Fraction) -> bool:
    """Ext(M_source, M_target) ≠ 0 ⟺ source < target。"""
    return Fraction(source) < Fraction(target)


def h0_nonzero(mu: Fraction) -> bool:
    return Fraction(mu) <= 0


def h1_nonzero(mu: Fraction) -> bool:
    return Fraction(mu) > 0


# --- 多角形の計算 ---

@dataclass(frozen=True)
class PolygonVerdict:
    """多角形比較の結果。bool として評価でき、reason に理由コードを持つ。"""
    holds: bool
    reason: str
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def polygon_sum(*polygons: NewtonPolygon) -> NewtonPolygon:
    slopes = [s for p in polygons for s in p.multiset]
    return NewtonPolygon.from_slopes(slopes, any(p.precision_limited for p in polygons))


def polygon_lies_above(upper: NewtonPolygon, lower: NewtonPolygon) -> PolygonVerdict:
    """upper が lower の上にある（同じ終点で、どの整数点でも upper >= lower）か。"""
    if upper.endpoint != lower.endpoint:
        return PolygonVerdict(False, "endpoint_mismatch",
                              f"endpoints {upper.endpoint} vs {lower.endpoint}")
    rank = upper.total_multiplicity
    for x in range(rank + 1):
        hi, lo = upper.value_at(Fraction(x)), lower.value_at(Fraction(x))
        if hi < lo:
            return PolygonVerdict(False, "vertex_below", f"at x={x}: {hi} < {lo}")
    return PolygonVerdict(True, "ok")


def filtration_check(whole: NewtonPolygon, parts: Sequence[NewtonPolygon]) -> PolygonVerdict:
    """HN 多角形 whole が、部分商の多角形の和の上にあるか。"""
    combined = polygon_sum(*parts)
    if whole.endpoint != combined.endpoint:
        raise EndpointMismatch(f"whole ends at {whole.endpoint}, parts sum to {combined.endpoint}")
    return polygon_lies_above(whole, combined)
