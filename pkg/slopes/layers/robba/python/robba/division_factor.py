"""
division_factor.py - 割り算・単元分解・行列の近似と分解

Γ_r での割り算、半径区間をまたぐ単元分解、二重区間での行列分解 M = U·V、
行列の近似逆 U (w_s(M·U - I) > 0) を反復で求める。

どの操作も結果と一緒に FactorizationCertificate を返す。証明書には
「半径 s で w_s(対象) >= bound」という事後条件を1件ずつ記録し、
満たさない項目が1つでもあれば呼び出し元へ返す前に例外を送出する。
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from slope_common.logger import get_logger

from robba.errors import (
    BadOverlap, HypothesisFailed, InvariantViolation, PrecisionExhausted,
    SingularAtPrecision, ZeroDivisor, ZeroElement,
)
from robba.matrices import (
    Matrix, context_of, identity_matrix, is_truncated, matrix_add, matrix_det,
    matrix_mul, matrix_scale, matrix_sub, matrix_valuation, minus_identity,
    transpose,
)
from robba.padic_core import INF, LaurentElement, digit_slice, invert_in_field, invert_unit
from robba.polygon import Interval
from robba.valuations import (
    height, interval_min_valuation, is_unit, newton_polygon,
    position, weighted_valuation,
)

logger = get_logger("robba.division_factor")

DEFAULT_MAX_ITER = 64

Valuation = Union[int, Fraction, float]
Subject = Union[LaurentElement, Matrix]


def _valuation_of(subject: Subject, radius: Fraction) -> Valuation:
    if isinstance(subject, LaurentElement):
        return weighted_valuation(subject, radius)
    return matrix_valuation(subject, radius)


def _flags_of(subject: Subject) -> set[str]:
    entries = [subject] if isinstance(subject, LaurentElement) else [a for row in subject for a in row]
    flags = set()
    if any(a.truncated_hi for a in entries):
        flags.add("truncated_hi")
    if any(a.truncated_lo for a in entries):
        flags.add("truncated_lo")
    return flags


@dataclass(frozen=True)
class CertificateEntry:
    """半径 radius での w_radius(subject) >= bound（strict なら >）の記録。"""
    label: str
    radius: Fraction
    bound: Valuation
    achieved: Valuation
    strict: bool = False
    subject: Optional[Subject] = field(default=None, repr=False, compare=False)

    @property
    def satisfied(self) -> bool:
        return self.achieved > self.bound if self.strict else self.achieved >= self.bound


@dataclass
class FactorizationCertificate:
    """反復アルゴリズムの事後条件・反復回数・切り捨てフラグ・各パスの利得。"""
    residual_valuations: list[CertificateEntry] = field(default_factory=list)
    iterations_used: int = 0
    flags: set[str] = field(default_factory=set)
    gains: list[Valuation] = field(default_factory=list)

    def record(self, label: str, radius, bound: Valuation, subject: Subject,
               strict: bool = False) -> CertificateEntry:
        radius = Fraction(radius)
        entry = CertificateEntry(label, radius, bound, _valuation_of(subject, radius), strict, subject)
        self.residual_valuations.append(entry)
        self.flags |= _flags_of(subject)
        return entry

    def failures(self) -> list[CertificateEntry]:
        return [e for e in self.residual_valuations if not e.satisfied]

    def require(self, error_cls=PrecisionExhausted) -> "FactorizationCertificate":
        failed = self.failures()
        if failed:
            detail = "; ".join(
                f"{e.label} at s={e.radius}: {e.achieved} vs bound {e.bound}" for e in failed)
            raise error_cls(f"certificate check failed: {detail}")
        return self

    def verify(self) -> bool:
        """記録した対象から付値を計算し直し、achieved と一致して条件を満たすか確認する。"""
        for e in self.residual_valuations:
            if e.subject is not None and _valuation_of(e.subject, e.radius) != e.achieved:
                return False
        return not self.failures()

    def merge(self, other: "FactorizationCertificate") -> "FactorizationCertificate":
        self.residual_valuations.extend(other.residual_valuations)
        self.iterations_used += other.iterations_used
        self.flags |= other.flags
        self.gains.extend(other.gains)
        return self


def _check_radius(ctx, r: Fraction, name: str = "r") -> Fraction:
    r = Fraction(r)
    if not 0 < r < ctx.r0:
        raise InvariantViolation(f"{name}={r} must lie in (0, {ctx.r0})")
    return r


def _guard_window(current: LaurentElement, support_top: int, what: str) -> None:
    if current.truncated_hi and current.top < support_top:
        raise PrecisionExhausted(
            f"{what}: exact range shrank to u^{current.top}, below the input support u^{support_top}")


# --- 割り算 ---

def div_rem(y: LaurentElement, x: LaurentElement, r, target: int,
            max_iter: Optional[int] = None) -> tuple[LaurentElement, LaurentElement, FactorizationCertificate]:
    """
    y = q·x + z で height(z, r) < height(x, r)（または z = 0）となる (z, q) を求める。

    x の桁 m = height(x) 以上の部分 x' について x'/p^m は Γ_r の単元になる。
    y_l の桁 m 以上の部分を p^m で割って (x'/p^m)^{-1} を掛けたものを商に足し、
    y_{l+1} = y_l - q_l·x と更新する。w_r は各パス (1 - r/r0) 以上増える。
    """
    ctx = x.ctx
    ctx.check(y.ctx)
    r = _check_radius(ctx, r)
    if x.is_zero:
        raise ZeroDivisor("div_rem divisor is zero at precision")
    if target > ctx.prec:
        raise InvariantViolation(f"target {target} exceeds N_abs={ctx.prec}")
    if not (x.is_integral and y.is_integral):
        raise InvariantViolation("div_rem needs integral x and y (all digits at p-power >= 0)")
    max_iter = max_iter or DEFAULT_MAX_ITER

    m = height(x, r)
    head = digit_slice(x, m, None)
    inverse = invert_unit(head.scale_p(-m), r)
    support_top = max(a.max_exponent for a in (x, y) if not a.is_zero)
    quotient = LaurentElement.zero(ctx)
    current = y
    remainder = None
    iterations = 0
    for iterations in range(max_iter):
        if current.is_zero or current.valuation >= target:
            remainder = LaurentElement.zero(ctx)
            break
        if height(current, r, check=False) < m:
            remainder = current
            break
        _guard_window(current, support_top, "div_rem")
        step = digit_slice(current, m, None).scale_p(-m) * inverse
        quotient = quotient + step
        current = current - step * x
        logger.debug(f"div_rem pass {iterations}: w_r(y_l)={weighted_valuation(current, r)}")
    if remainder is None:
        raise PrecisionExhausted(f"div_rem did not reach w >= {target} within {max_iter} passes")

    cert = FactorizationCertificate(iterations_used=iterations)
    residual = y - remainder - quotient * x
    cert.record("w_r(z) >= w_r(y)", r, weighted_valuation(y, r), remainder)
    cert.record("w(y - z - q*x) >= target", 0, target, residual)
    if not remainder.is_zero and height(remainder, r, check=False) >= m:
        raise PrecisionExhausted(f"remainder height {height(remainder, r, check=False)} is not below {m}")
    cert.require()
    return remainder, quotient, cert


# --- 単元分解 ---

def _nonpositive_digit_bound(x: LaurentElement, s: Fraction) -> Valuation:
    """min_{n<=0} v_{n,s}(x)。"""
    values = [s * i + w for i, w in x.term_valuations if w <= 0]
    return min(values) if values else INF


def factor_unit(x: LaurentElement, s, r, target: int,
                max_iter: Optional[int] = None) -> tuple[LaurentElement, LaurentElement, FactorizationCertificate]:
    """
    [s, r] の単元 u と整係数の g = u·x で、g の (0, r] の傾きがすべて [s, r] に入るものを求める。

    半径 s で位置合わせした y について、u_l·y の負の桁の部分 N_l を
    u_{l+1} = u_l (1 - N_l) で消していく。
    """
    ctx = x.ctx
    s, r = Fraction(s), Fraction(r)
    if not 0 < s < r < ctx.r0:
        raise InvariantViolation(f"factor_unit needs 0 < s < r < r0, got s={s}, r={r}")
    if x.is_zero:
        raise ZeroElement("factor_unit of an element that is zero at precision")
    max_iter = max_iter or DEFAULT_MAX_ITER
    interval = Interval.closed(s, r)
    samples = interval.samples()
    one = LaurentElement.one(ctx)

    # 整係数で傾きがすでに [s, r] にあれば分解は不要（傾きのない p^k·単元は g = p^k に正規化する）
    polygon = newton_polygon(x, Interval(Fraction(0), r))
    settled = not polygon.is_empty and not polygon.precision_limited
    if x.is_integral and settled and all(slope >= s for slope in polygon.multiset):
        cert = FactorizationCertificate()
        cert.record("w_s(u*x - g) >= target", s, target, x - x)
        return one, x, cert

    head_inverse, i, positioned = position(x, s)
    gap = min(_nonpositive_digit_bound(positioned - 1, t) for t in samples)
    if not gap > 0:
        raise PrecisionExhausted(f"positioned element has min v_(n,s)(y - 1) = {gap} <= 0 on {interval}")

    cert = FactorizationCertificate()
    current = one
    product = positioned
    for step in range(max_iter):
        negative = digit_slice(product, None, 0)
        if negative.is_zero or all(weighted_valuation(negative, t) >= target for t in samples):
            cert.iterations_used = step
            break
        gain = min(weighted_valuation(negative, t) for t in samples)
        cert.gains.append(gain)
        logger.debug(f"factor_unit pass {step}: negative-digit residual {gain}")
        current = current * (one - negative)
        product = current * positioned
    else:
        raise PrecisionExhausted(f"factor_unit gains stalled after {max_iter} passes: {cert.gains[-3:]}")

    integral = digit_slice(product, 0, None)
    if i <= 0:
        unit = current * head_inverse
        g = integral.scale_p(-i)
    else:
        unit = (current * head_inverse).scale_p(i)
        g = integral

    residual = unit * x - g
    for t in samples:
        cert.record("w_s(u*x - g) >= target", t, target, residual)
    cert.require()
    if not g.is_integral:
        raise PrecisionExhausted("factor_unit output still has negative digits")
    if not is_unit(unit, interval):
        raise PrecisionExhausted(f"factor_unit multiplier is not certified a unit on {interval}")
    slopes = newton_polygon(g, Interval(Fraction(0), r)).multiset
    if any(slope < s for slope in slopes):
        raise PrecisionExhausted(f"factor_unit output has slopes {slopes} below s={s}")
    return unit, g, cert


# --- 行列の分解 ---

def _split_matrix(E: Matrix) -> tuple[Matrix, Matrix]:
    """E = Y + Z（Y は正の桁、Z は 0 以下の桁）。"""
    Y = tuple(tuple(digit_slice(a, 1, None) for a in row) for row in E)
    Z = tuple(tuple(digit_slice(a, None, 1) for a in row) for row in E)
    return Y, Z


def neumann_inverse(X: Matrix, radii: list[Fraction], target: Valuation, max_terms: int) -> Matrix:
    """(I + X)^{-1} = Σ (-X)^k を、項の w_s が radii のすべてで target 以上になるまで足す。"""
    ctx = context_of(X)
    n = len(X)
    total = identity_matrix(ctx, n)
    term = identity_matrix(ctx, n)
    minus_x = matrix_scale(X, -1)
    for _ in range(max_terms):
        term = matrix_mul(term, minus_x)
        if all(matrix_valuation(term, s) >= target for s in radii):
            return total
        total = matrix_add(total, term)
    raise PrecisionExhausted(f"Neumann series did not reach w >= {target} within {max_terms} terms")


def matrix_factor(M: Matrix, inner: Interval, outer: Interval, target: int,
                  max_iter: Optional[int] = None) -> tuple[Matrix, Matrix, FactorizationCertificate]:
    """
    I = [a, b], J = [c, d]（a <= c <= b <= d）で、重なり [c, b] において
    w_s(M - I) > 0 の M を U（Γ_I 上）と V（Γ_J 上）の積に分解する。

    M_l - I を正の桁 Y_l と 0 以下の桁 Z_l に分け、U_{l+1} = U_l (I + Y_l)、
    V_{l+1} = (I + Z_l) V_l、M_{l+1} - I = -(I + Y_l)^{-1} Y_l Z_l (I + Z_l)^{-1}。
    重なりでの w_s(M_l - I) はパスごとに倍になる。
    """
    ctx = context_of(M)
    n = len(M)
    a, b, c, d = inner.lo, inner.hi, outer.lo, outer.hi
    if not (a <= c <= b <= d):
        raise InvariantViolation(f"intervals {inner} and {outer} must satisfy a <= c <= b <= d")
    if d >= ctx.r0 or b <= 0:
        raise InvariantViolation(f"intervals must lie in (0, r0={ctx.r0}) with b > 0")
    max_iter = max_iter or DEFAULT_MAX_ITER
    overlap = Interval.closed(c, b).samples()
    E0 = minus_identity(M)
    for s in overlap:
        if not matrix_valuation(E0, s) > 0:
            raise BadOverlap(f"w_s(M - I) = {matrix_valuation(E0, s)} <= 0 at s={s} in the overlap [{c}, {b}]")

    identity = identity_matrix(ctx, n)
    U, V, E = identity, identity, E0
    cert = FactorizationCertificate()
    for step in range(max_iter):
        level = min(matrix_valuation(E, s) for s in overlap)
        if level >= target:
            cert.iterations_used = step
            break
        cert.gains.append(level)
        logger.debug(f"matrix_factor pass {step}: overlap residual {level}")
        Y, Z = _split_matrix(E)
        U = matrix_mul(U, matrix_add(identity, Y))
        V = matrix_mul(matrix_add(identity, Z), V)
        left = neumann_inverse(Y, overlap, target, 4 * max_iter)
        right = neumann_inverse(Z, overlap, target, 4 * max_iter)
        E = matrix_scale(matrix_mul(matrix_mul(left, matrix_mul(Y, Z)), right), -1)
    else:
        raise PrecisionExhausted(f"matrix_factor did not reach {target} within {max_iter} passes")

    residual = matrix_sub(M, matrix_mul(U, V))
    for s in overlap:
        cert.record("w_s(M - U*V) >= target", s, target, residual)
    U_minus, V_minus = minus_identity(U), minus_identity(V)
    wc, wb = matrix_valuation(E0, c), matrix_valuation(E0, b)
    for s in Interval.closed(a, c).samples():
        ratio = s / c if c else Fraction(1)
        cert.record("w_s(U - I) >= (s/c) w_c(M - I)", s, ratio * wc, U_minus)
    for s in Interval.closed(b, d).samples():
        cert.record("w_s(V - I) >= (s/b) w_b(M - I)", s, (s / b) * wb, V_minus)
    for s in overlap:
        bound = matrix_valuation(E0, s)
        cert.record("w_s(U - I) >= w_s(M - I)", s, bound, U_minus)
        cert.record("w_s(V - I) >= w_s(M - I)", s, bound, V_minus)
    cert.require()
    if not is_unit(matrix_det(U), inner):
        raise PrecisionExhausted(f"det U is not certified a unit on {inner}")
    if not is_unit(matrix_det(V), outer):
        raise PrecisionExhausted(f"det V is not certified a unit on {outer}")
    return U, V, cert


# --- 行列の近似逆 ---

def _swap_columns(A: Matrix, i: int, j: int) -> Matrix:
    if i == j:
        return A
    cols = list(transpose(A))
    cols[i], cols[j] = cols[j], cols[i]
    return transpose(tuple(cols))


def _scale_column(A: Matrix, j: int, factor: LaurentElement) -> Matrix:
    return tuple(tuple(a * factor if k == j else a for k, a in enumerate(row)) for row in A)


def _eliminate_column(A: Matrix, target: int, pivot: int, factor: LaurentElement) -> Matrix:
    """列 target から factor × 列 pivot を引く。"""
    return tuple(
        tuple(a - row[pivot] * factor if k == target else a for k, a in enumerate(row))
        for row in A)


def matrix_approximate(M: Matrix, interval: Interval, r, unimodular: bool = False) -> tuple[Matrix, FactorizationCertificate]:
    """
    区間 I 上で可逆な M に対し、w_s(M·U - I) > 0（s は I の端点と中点）となる U を返す。

    X = M·U を保ちながら列操作で Gauss–Jordan 消去を行う。各行 k では
    I 上の単元になっている成分のうち w_s が最小のものをピボットにし、
    その逆元で列を正規化してから他の列を消す。
    unimodular=True のときは最後の列を det(U)^{-1} 倍して det(U) = 1 にする。
    """
    ctx = context_of(M)
    r = _check_radius(ctx, r)
    if interval.hi > r:
        raise InvariantViolation(f"interval {interval} must lie inside [0, {r}]")
    n = len(M)
    samples = interval.samples()
    det = matrix_det(M)
    if det.is_zero:
        raise SingularAtPrecision("det M vanishes at precision")
    if not is_unit(det, interval):
        raise SingularAtPrecision(f"det M has slopes in {interval}; M is not invertible there")

    X, U = M, identity_matrix(ctx, n)
    for k in range(n):
        candidates = [j for j in range(k, n) if not X[k][j].is_zero and is_unit(X[k][j], interval)]
        if not candidates:
            if all(X[k][j].is_zero for j in range(k, n)):
                raise SingularAtPrecision(f"row {k} vanished during elimination")
            raise PrecisionExhausted(
                f"row {k} has no entry that is a unit on {interval}; a Bezout combination would be needed")
        j = min(candidates, key=lambda col: (interval_min_valuation(X[k][col], interval), col))
        X, U = _swap_columns(X, k, j), _swap_columns(U, k, j)
        pivot_inverse = invert_in_field(X[k][k])
        X, U = _scale_column(X, k, pivot_inverse), _scale_column(U, k, pivot_inverse)
        for other in range(n):
            factor = X[k][other]
            if other == k or factor.is_zero:
                continue
            X = _eliminate_column(X, other, k, factor)
            U = _eliminate_column(U, other, k, factor)
        logger.debug(f"matrix_approximate: row {k} pivot column {j}")

    cert = FactorizationCertificate(iterations_used=n)
    if unimodular:
        det_minus = det - 1
        for s in samples:
            if not weighted_valuation(det_minus, s) > 0:
                raise HypothesisFailed(
                    f"unimodular U needs w_s(det M - 1) > 0, got {weighted_valuation(det_minus, s)} at s={s}")
        det_u = matrix_det(U)
        U = _scale_column(U, n - 1, invert_in_field(det_u))
        cert.record("w(det U - 1) >= N_abs - |w(det)|", 0,
                    ctx.prec - abs(det_u.valuation), matrix_det(U) - 1)

    residual = minus_identity(matrix_mul(M, U))
    for s in samples:
        cert.record("w_s(M*U - I) > 0", s, 0, residual, strict=True)
    if is_truncated(U):
        cert.flags.add("approximate_inverse")
    cert.require()
    return U, cert
