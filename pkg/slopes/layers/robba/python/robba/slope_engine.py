"""
slope_engine.py - 巡回ベクトル・ひねり特性多項式・HN 多角形・三角化と良いモデル

generic 多角形は巡回ベクトル v から F^n v + Σ a_i F^i v = 0 を解き、
点 (i, w(a_i)) の下側凸包の傾きを符号反転したものとして求める。
special 多角形は u の非負冪だけを持つ行列を u = 0 に特殊化して計算する。

三角化（下三角部分を消す反復）と良いモデルへの回転（0 以下の桁を消す反復）は
division_factor と同じく FactorizationCertificate に事後条件を記録し、
満たさない項目があれば例外を送出する。
"""
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from slope_common.logger import get_logger

from robba.division_factor import DEFAULT_MAX_ITER, FactorizationCertificate, neumann_inverse
from robba.errors import (
    EndpointMismatch, HypothesisFailed, InvariantViolation, NegativeSupport,
    NoCyclicVectorFound, NonIntegralMatrix, PrecisionExhausted, SingularAtPrecision,
    SingularSpecialization, WindowOverflow,
)
from robba.matrices import (
    Matrix, as_matrix, char_poly, context_of, identity_matrix, is_constant,
    matrix_add, matrix_det, matrix_mul, matrix_sub, matrix_valuation, minus_identity,
    sigma_matrix, specialize_zero, transpose, unit_vector,
)
from robba.padic_core import INF, LaurentElement, RingContext, digit_slice, frobenius, invert_in_field
from robba.polygon import NewtonPolygon, lower_hull
from robba.sigma_mod import SigmaModule, degree, polygon_lies_above

logger = get_logger("robba.slope_engine")

DEFAULT_MAX_ATTEMPTS = 32

Vector = tuple[LaurentElement, ...]
Valuation = Union[int, Fraction, float]

# SlopeReport.comparison の値
EQUAL = "equal"
SPECIAL_ABOVE = "special_above"
VIOLATION = "violation"
NOT_COMPUTED = "not_computed"


@dataclass
class SlopeReport:
    """generic / special 多角形と比較結果。comparison = violation は比較定理の反例。"""
    generic: NewtonPolygon
    special: Optional[NewtonPolygon] = None
    comparison: str = NOT_COMPUTED
    certificates: list[FactorizationCertificate] = field(default_factory=list)
    cyclic_vector_used: Optional[Vector] = None
    detail: str = ""


@dataclass(frozen=True)
class TwistedPoly:
    """
    x^n + a_{n-1} x^{n-1} + ... + a_0（coefficients は a_0..a_{n-1}）。

    valuations は行列式の付値の差から求めた正確な w(a_i)（ゼロなら INF）。
    ceiling 以上の付値は精度で決まらない。
    """
    coefficients: tuple[LaurentElement, ...]
    valuations: tuple[Valuation, ...]
    ceiling: int
    vector: Optional[Vector] = None
    certificate: FactorizationCertificate = field(default_factory=FactorizationCertificate)

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def polygon(self) -> NewtonPolygon:
        return _hn_polygon(list(self.valuations) + [0], self.ceiling)


def _hn_polygon(valuations: Sequence[Valuation], ceiling: int) -> NewtonPolygon:
    """点 (i, w(a_i)) の下側凸包の傾きを符号反転し、横幅を重複度とする。"""
    if valuations[0] == INF:
        raise SingularAtPrecision("constant coefficient a_0 vanishes at precision")
    points = [(i, w) for i, w in enumerate(valuations) if w != INF]
    hull = lower_hull(points)
    slopes = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        slopes.extend([-(y1 - y0) / (x1 - x0)] * int(x1 - x0))
    limited = any(y >= ceiling for _, y in hull)
    for i, w in enumerate(valuations):
        if w == INF:
            below = [(x, y) for x, y in hull if x <= i][-1]
            above = [(x, y) for x, y in hull if x >= i][0]
            span = above[0] - below[0]
            height_at = below[1] if not span else below[1] + (above[1] - below[1]) * (i - below[0]) / span
            limited = limited or height_at >= ceiling
    return NewtonPolygon.from_slopes(slopes, limited)


# --- 巡回ベクトル ---

def iterates(module: SigmaModule, vector: Sequence[LaurentElement], count: int) -> list[Vector]:
    """[v, Fv, ..., F^(count-1) v]。"""
    out = [tuple(vector)]
    for _ in range(count - 1):
        out.append(module.apply(out[-1]))
    return out


def _columns(vectors: Sequence[Vector]) -> Matrix:
    return as_matrix(transpose(tuple(vectors)))


def _candidates(ctx: RingContext, n: int, seed: int):
    """e_i、e_1 + p^j e_i、乱数の小さな組み合わせ（u の単項式を含む）の順に候補を出す。"""
    for i in range(n):
        yield unit_vector(ctx, n, i)
    e1 = unit_vector(ctx, n, 0)
    for j in range(3):
        for i in range(1, n):
            yield tuple(a + b.scale_p(j) for a, b in zip(e1, unit_vector(ctx, n, i)))
    rng = random.Random(seed)
    while True:
        v = tuple(LaurentElement.from_terms(ctx, {rng.randint(0, 1): rng.randint(-2, 2)})
                  for _ in range(n))
        if not all(c.is_zero for c in v):
            yield v


def cyclic_vector(module: SigmaModule, max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                  seed: int = 0) -> Vector:
    """v, Fv, ..., F^(n-1) v が基底になる v を探す（反復が窓で切れた候補は失敗扱い）。"""
    ctx, n = module.ctx, module.rank
    for attempt, v in enumerate(_candidates(ctx, n, seed)):
        if attempt >= max_attempts:
            break
        vectors = iterates(module, v, n + 1)
        if any(c.truncated for vec in vectors for c in vec):
            logger.debug(f"cyclic_vector attempt {attempt}: iterates left the window")
            continue
        if matrix_det(_columns(vectors[:n])).is_zero:
            logger.debug(f"cyclic_vector attempt {attempt}: iterates are dependent")
            continue
        logger.debug(f"cyclic_vector found at attempt {attempt}")
        return v
    raise NoCyclicVectorFound(f"no cyclic vector among {max_attempts} candidates for {module!r}")


# --- ひねり特性多項式 ---

def _constant_char_poly(module: SigmaModule) -> TwistedPoly:
    """定数行列では σ が係数に自明に作用するので、通常の特性多項式になる。"""
    coeffs = char_poly(module.matrix)[:-1]
    return TwistedPoly(tuple(coeffs), tuple(c.valuation for c in coeffs), module.ctx.prec - 1)


def twisted_char_poly(module: SigmaModule, vector: Sequence[LaurentElement]) -> TwistedPoly:
    """
    F^n v + a_{n-1} F^{n-1} v + ... + a_0 v = 0 の a_i を Cramer の公式で解く。

    a_i = -det(V_i) / det(V)（V は反復を列に並べた行列、V_i は i 列目を F^n v に置き換えたもの）。
    付値は w(det V_i) - w(det V) で正確に決まる。
    """
    ctx, n = module.ctx, module.rank
    vectors = iterates(module, vector, n + 1)
    if any(c.truncated for vec in vectors for c in vec):
        raise PrecisionExhausted(f"Frobenius iterates of {tuple(vector)!r} left the window {ctx.window}")
    basis = list(vectors[:n])
    det_v = matrix_det(_columns(basis))
    if det_v.is_zero:
        raise SingularAtPrecision("the iterates of the vector are dependent at precision")
    top = vectors[n]
    inverse = invert_in_field(det_v)
    coeffs, valuations = [], []
    for i in range(n):
        replaced = list(basis)
        replaced[i] = top
        det_i = matrix_det(_columns(replaced))
        coeffs.append(-(det_i * inverse))
        valuations.append(INF if det_i.is_zero else det_i.valuation - det_v.valuation)

    cert = FactorizationCertificate(iterations_used=1)
    finite = [w for w in valuations if w != INF]
    iterate_floor = min((c.valuation for vec in vectors for c in vec if not c.is_zero), default=0)
    shift = max(0, det_v.valuation)
    bound = (ctx.prec - 2 * shift + min(0, min(finite, default=0)) + min(0, iterate_floor))
    for k in range(n):
        residual = top[k]
        for a, vec in zip(coeffs, basis):
            if not a.is_zero and not vec[k].is_zero:
                residual = residual + a * vec[k]
        if residual.bottom > residual.top:
            cert.flags.add("residual_unchecked")
            continue
        cert.record(f"w((F^n v + sum a_i F^i v)[{k}]) >= {bound}", 0, bound, residual)
    cert.require(SingularAtPrecision)
    ceiling = ctx.prec - 1 - shift
    return TwistedPoly(tuple(coeffs), tuple(valuations), ceiling, tuple(vector), cert)


# --- HN 多角形 ---

def generic_poly(module: SigmaModule, vector: Optional[Sequence[LaurentElement]] = None,
                 max_attempts: int = DEFAULT_MAX_ATTEMPTS, seed: int = 0) -> TwistedPoly:
    if vector is not None:
        return twisted_char_poly(module, vector)
    if is_constant(module.matrix):
        return _constant_char_poly(module)
    return twisted_char_poly(module, cyclic_vector(module, max_attempts, seed))


def generic_hn_polygon(module: SigmaModule, vector: Optional[Sequence[LaurentElement]] = None,
                       max_attempts: int = DEFAULT_MAX_ATTEMPTS, seed: int = 0) -> NewtonPolygon:
    """generic HN 多角形（傾きの多重集合、昇順）。"""
    return generic_poly(module, vector, max_attempts, seed).polygon()


def special_hn_polygon_dwork(module: SigmaModule) -> NewtonPolygon:
    """u = 0 に特殊化した定数行列の多角形を special HN 多角形とする。"""
    specialized = specialize_zero(module.matrix)
    det0 = matrix_det(specialized)
    if det0.is_zero:
        raise SingularSpecialization("det A(0) vanishes at precision")
    if det0.valuation != degree(module):
        raise SingularSpecialization(
            f"w(det A(0)) = {det0.valuation} differs from deg M = {degree(module)}")
    constant = SigmaModule(specialized, module.frob_power, module.radius)
    return _constant_char_poly(constant).polygon()


def compare_polygons(module: SigmaModule, max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                     seed: int = 0) -> SlopeReport:
    """special 多角形が generic 多角形の上にあるかを調べる。"""
    poly = generic_poly(module, None, max_attempts, seed)
    generic = poly.polygon()
    report = SlopeReport(generic, certificates=[poly.certificate], cyclic_vector_used=poly.vector)
    expected = (module.rank, Fraction(degree(module)))
    if generic.endpoint != expected:
        raise EndpointMismatch(f"generic polygon ends at {generic.endpoint}, expected {expected}")
    try:
        special = special_hn_polygon_dwork(module)
    except NegativeSupport as e:
        report.detail = str(e)
        return report
    report.special = special
    if special.endpoint != generic.endpoint:
        raise EndpointMismatch(f"special ends at {special.endpoint}, generic at {generic.endpoint}")
    if special.multiset == generic.multiset:
        report.comparison = EQUAL
        return report
    verdict = polygon_lies_above(special, generic)
    if verdict:
        report.comparison = SPECIAL_ABOVE
        return report
    report.comparison = VIOLATION
    report.detail = verdict.detail
    logger.warning(
        f"comparison violated: special {special} below generic {generic} ({verdict.detail}); "
        f"matrix={module.matrix!r} frob_power={module.frob_power} vector={poly.vector!r}")
    return report


# --- 対角行列 D の補助 ---

def p_power_diagonal(ctx: RingContext, exponents: Sequence[int]) -> Matrix:
    zero = LaurentElement.zero(ctx)
    n = len(exponents)
    return as_matrix(
        [[LaurentElement.one(ctx).scale_p(exponents[i]) if i == j else zero for j in range(n)]
         for i in range(n)])


def diagonal_exponents(D: Matrix) -> list[int]:
    """D = diag(p^{d_1}, ..., p^{d_n}) の (d_1, ..., d_n)。"""
    out = []
    for i, row in enumerate(D):
        for j, a in enumerate(row):
            if i != j and not a.is_zero:
                raise InvariantViolation(f"D has a nonzero off-diagonal entry at ({i}, {j})")
        a = row[i]
        if a.is_zero or a.exponents != [0] or a.coeffs[0][1] != 1:
            raise InvariantViolation(f"D[{i}][{i}] = {a!r} is not a power of p")
        out.append(a.shift)
    return out


def _times_inverse_diagonal(A: Matrix, exps: Sequence[int]) -> Matrix:
    """A·D^{-1}（列 j を p^{-d_j} 倍）。"""
    return tuple(tuple(a.scale_p(-exps[j]) for j, a in enumerate(row)) for row in A)


def _conjugate_diagonal(X: Matrix, exps: Sequence[int]) -> Matrix:
    """D·X·D^{-1}（成分 (i, j) を p^{d_i - d_j} 倍）。"""
    return tuple(tuple(a.scale_p(exps[i] - exps[j]) for j, a in enumerate(row))
                 for i, row in enumerate(X))


def _lower_part(E: Matrix) -> Matrix:
    """対角を含む下三角部分。"""
    zero = LaurentElement.zero(context_of(E))
    return tuple(tuple(a if i >= j else zero for j, a in enumerate(row)) for i, row in enumerate(E))


def _neumann_margin(A: Matrix, radii: Sequence[Fraction]) -> int:
    floor = min(matrix_valuation(A, s) for s in radii)
    return max(0, math.ceil(-floor)) if floor != INF else 0


# --- 三角化 ---

def _solve_twisted_entry(c: LaurentElement, e: int, frob_power: int) -> LaurentElement:
    """x - p^e σ^a(x) = c（e <= 0）を解く。正の冪は前向きの級数、定数項は 1 - p^e で割る。"""
    ctx = c.ctx
    if c.is_zero:
        return c
    if c.min_exponent < 0:
        raise HypothesisFailed(f"lower entry {c!r} has negative u-support")
    x = LaurentElement.zero(ctx)
    constant = c.restrict(0, 0)
    if not constant.is_zero:
        if e == 0:
            raise HypothesisFailed(
                f"constant term {constant!r} on a block with equal diagonal valuations "
                "needs a Frobenius-fixed solution over an algebraically closed residue field")
        x = constant * invert_in_field(1 - LaurentElement.one(ctx).scale_p(e))
    term = c.restrict(1, ctx.hi_cap)
    while True:
        x = x + term
        if term.is_zero:
            break
        term = frobenius(term, frob_power).scale_p(e)
    return x


def triangularize(module: SigmaModule, D: Matrix, r, target: int,
                  max_iter: Optional[int] = None) -> tuple[Matrix, Matrix, FactorizationCertificate]:
    """
    B = U^{-1}·A·σ(U) で B·D^{-1} - I が（精度 target で）上三角冪零になる U を求める。

    A_l D^{-1} - I の下三角部分 C_l に対し X - D σ(X) D^{-1} = C_l を解き、
    U_{l+1} = U_l (I + X)、A_{l+1} = (I + X)^{-1} A_l σ(I + X) と更新する。
    w_r(C_l) はパスごとに真に増える。
    """
    ctx, n, a = module.ctx, module.rank, module.frob_power
    r = Fraction(r)
    if not 0 < r < ctx.r0:
        raise InvariantViolation(f"r={r} must lie in (0, {ctx.r0})")
    max_iter = max_iter or DEFAULT_MAX_ITER
    exps = diagonal_exponents(D)
    if any(x < y for x, y in zip(exps, exps[1:])):
        raise HypothesisFailed(f"diagonal valuations {exps} must be non-increasing")
    A = module.matrix
    radii = [Fraction(0), r]
    E0 = minus_identity(_times_inverse_diagonal(A, exps))
    for s, label in zip(radii, ("w", "w_r")):
        value = matrix_valuation(E0, s)
        if not value > 0:
            raise HypothesisFailed(f"{label}(A D^-1 - I) = {value} is not > 0 (s={s})")
    c0 = matrix_valuation(E0, r)
    neumann_target = target + _neumann_margin(A, radii)

    identity = identity_matrix(ctx, n)
    U, current = identity, A
    cert = FactorizationCertificate()
    for step in range(max_iter):
        C = _lower_part(minus_identity(_times_inverse_diagonal(current, exps)))
        if min(matrix_valuation(C, s) for s in radii) >= target:
            cert.iterations_used = step
            break
        gain = matrix_valuation(C, r)
        if cert.gains and not gain > cert.gains[-1]:
            raise PrecisionExhausted(f"triangularize stalled at pass {step}: gains {cert.gains[-3:]} then {gain}")
        cert.gains.append(gain)
        logger.debug(f"triangularize pass {step}: w_r(C_l)={gain} (c0={c0})")
        X = tuple(
            tuple(_solve_twisted_entry(C[i][j], exps[i] - exps[j], a) if i >= j else C[i][j]
                  for j in range(n))
            for i in range(n))
        step_matrix = matrix_add(identity, X)
        inverse = neumann_inverse(X, radii, neumann_target, ctx.prec + 1)
        current = matrix_mul(matrix_mul(inverse, current), sigma_matrix(step_matrix, a))
        U = matrix_mul(U, step_matrix)
    else:
        raise PrecisionExhausted(f"triangularize did not reach {target} within {max_iter} passes")

    B = current
    residual = matrix_sub(matrix_mul(A, sigma_matrix(U, a)), matrix_mul(U, B))
    lower = _lower_part(minus_identity(_times_inverse_diagonal(B, exps)))
    U_minus = minus_identity(U)
    twisted_minus = minus_identity(_conjugate_diagonal(sigma_matrix(U, a), exps))
    for s in radii:
        cert.record("w_s(A*sigma(U) - U*B) >= target", s, target, residual)
        cert.record("w_s(lower(B D^-1 - I)) >= target", s, target, lower)
        cert.record("w_s(U - I) > 0", s, 0, U_minus, strict=True)
        cert.record("w_s(D sigma(U) D^-1 - I) > 0", s, 0, twisted_minus, strict=True)
    cert.require()
    return U, B, cert


# --- 良いモデルへの回転 ---

def good_model_turnover(A: Matrix, D: Matrix, r, target: int, frob_power: int = 1,
                        max_iter: Optional[int] = None) -> tuple[Matrix, Matrix, FactorizationCertificate]:
    """
    w_r(A D^{-1} - I) > h/(q-1)（h = max d_i - min d_i）のとき、
    B = U^{-1} A σ(U) で B D^{-1} - I の桁がすべて p 冪 >= 1 になる U を求める。

    X_l は A_l D^{-1} - I の 0 以下の桁の部分。c_l = w_r(X_l) - h/(q-1) は
    c_l >= (l+1) c_0 を満たしながら増える。
    """
    A = as_matrix(A)
    ctx, n = context_of(A), len(A)
    r = Fraction(r)
    big_q = ctx.q ** frob_power
    if not 0 < r or not big_q * r < ctx.r0:
        raise HypothesisFailed(f"good_model_turnover needs 0 < r and q*r < r0, got r={r}, q={big_q}, r0={ctx.r0}")
    max_iter = max_iter or DEFAULT_MAX_ITER
    exps = diagonal_exponents(D)
    threshold = Fraction(max(exps) - min(exps), big_q - 1)
    E0 = minus_identity(_times_inverse_diagonal(A, exps))
    start = matrix_valuation(E0, r)
    if not start > threshold:
        raise HypothesisFailed(f"w_r(A D^-1 - I) = {start} is not > h/(q-1) = {threshold}")
    c0 = start - threshold
    neumann_target = target + _neumann_margin(A, [r])

    identity = identity_matrix(ctx, n)
    U, current = identity, A
    cert = FactorizationCertificate()
    for step in range(max_iter):
        E = minus_identity(_times_inverse_diagonal(current, exps))
        X = tuple(tuple(digit_slice(e, None, 1) for e in row) for row in E)
        level = matrix_valuation(X, r)
        if level >= target:
            cert.iterations_used = step
            break
        gain = level - threshold
        if gain < (step + 1) * c0:
            raise PrecisionExhausted(f"good_model_turnover pass {step}: c_l = {gain} < {step + 1}*c0 = {(step + 1) * c0}")
        cert.gains.append(gain)
        logger.debug(f"good_model_turnover pass {step}: c_l={gain}")
        step_matrix = matrix_add(identity, X)
        inverse = neumann_inverse(X, [r], neumann_target, math.ceil(neumann_target / level) + 2)
        current = matrix_mul(matrix_mul(inverse, current), sigma_matrix(step_matrix, frob_power))
        U = matrix_mul(U, step_matrix)
    else:
        raise PrecisionExhausted(f"good_model_turnover did not reach {target} within {max_iter} passes")

    B = current
    E = minus_identity(_times_inverse_diagonal(B, exps))
    nonpositive = tuple(tuple(digit_slice(e, None, 1) for e in row) for row in E)
    residual = matrix_sub(matrix_mul(A, sigma_matrix(U, frob_power)), matrix_mul(U, B))
    cert.record("w_r(digits <= 0 of B D^-1 - I) >= target", r, target, nonpositive)
    cert.record("w_r(B D^-1 - I) > 0", r, 0, E, strict=True)
    cert.record("w_r(A*sigma(U) - U*B) >= target", r, target, residual)
    for s in (r, big_q * r):
        cert.record("w_s(U - I) > 0", s, 0, minus_identity(U), strict=True)
    cert.require()
    return U, B, cert


# --- 階数1のコホモロジー ---

def solve_h1_rank1(n: int, x: LaurentElement, target: int, strict: bool = False) -> LaurentElement:
    """
    y - p^n σ(y) = x の解 y = Σ_m p^{nm} σ^m(x) を n·m + w(x) < target の範囲で足す。

    σ^m(x) が窓の外に出た項は捨てられ、y に切り捨てフラグが立つ。
    strict=True なら、その場合 WindowOverflow を送出する。
    """
    if n < 1:
        raise InvariantViolation(f"solve_h1_rank1 needs n >= 1, got {n}")
    if x.is_zero:
        return x
    y = LaurentElement.zero(x.ctx)
    m = 0
    while n * m + x.valuation < target:
        term = x if m == 0 else frobenius(x, m)
        if strict and term.truncated and not x.truncated:
            raise WindowOverflow(f"sigma^{m}(x) left the window {x.ctx.window} before reaching w >= {target}")
        y = y + term.scale_p(n * m)
        m += 1
    logger.debug(f"solve_h1_rank1: {m} terms, truncated={y.truncated}")
    return y


def h1_residual(n: int, x: LaurentElement, y: LaurentElement) -> LaurentElement:
    """y - p^n σ(y) - x。"""
    return y - frobenius(y).scale_p(n) - x


@dataclass(frozen=True)
class H0:
    """p^n σ(x) = x の解空間。kind は constants / zero / unsupported。"""
    kind: str
    dimension: Optional[int]
    description: str


def solve_h0_rank1(n: int) -> H0:
    if n == 0:
        return H0("constants", 1, "x = c with c a Frobenius-fixed constant")
    if n > 0:
        return H0("zero", 0, "only x = 0")
    return H0("unsupported", None, "n < 0 needs a perfect coefficient field")


# --- 格子の傾き ---

@dataclass(frozen=True)
class LatticeVerdict:
    """整係数行列の generic 傾きの確認結果。"""
    slopes: tuple[Fraction, ...]
    min_slope: Fraction
    all_zero: bool
    f_isomorphism: bool
    consistent: bool


def lattice_slope_check(module: SigmaModule, max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                        seed: int = 0) -> LatticeVerdict:
    """
    整係数なら generic 傾きはすべて非負で、
    すべて 0 ⟺ det A が単元（F が格子上の同型）を確認する。
    """
    for i, row in enumerate(module.matrix):
        for j, a in enumerate(row):
            if not a.is_integral:
                raise NonIntegralMatrix(f"entry ({i}, {j}) = {a!r} has negative p-adic digits")
    slopes = tuple(generic_hn_polygon(module, None, max_attempts, seed).multiset)
    min_slope = min(slopes)
    all_zero = all(s == 0 for s in slopes)
    f_isomorphism = module.det.valuation == 0
    consistent = min_slope >= 0 and all_zero == f_isomorphism
    return LatticeVerdict(slopes, min_slope, all_zero, f_isomorphism, consistent)


def example_7_3_module(ctx: RingContext) -> SigmaModule:
    """F v1 = v2, F v2 = p v1 + u v2 の階数2の加群（行列 [[0, p], [1, u]]）。"""
    zero, one = LaurentElement.zero(ctx), LaurentElement.one(ctx)
    return SigmaModule(as_matrix([[zero, one.scale_p(1)], [one, LaurentElement.monomial(ctx, 1)]]))
