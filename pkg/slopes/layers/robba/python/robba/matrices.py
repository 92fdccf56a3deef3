"""
matrices.py - LaurentElement 行列の補助演算

行列は行のタプル（タプルのタプル）で表し、すべて不変値として扱う。
行列式と特性多項式は除算を使わない Berkowitz 法で計算し、
余因子行列は Cayley–Hamilton の関係式から得る。
"""
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from robba.errors import InvariantViolation, SingularAtPrecision
from robba.padic_core import INF, LaurentElement, RingContext, frobenius, invert_in_field
from robba.polygon import Interval
from robba.valuations import weighted_valuation

Matrix = tuple[tuple[LaurentElement, ...], ...]
Vector = tuple[LaurentElement, ...]


def as_matrix(rows: Iterable[Iterable[LaurentElement]]) -> Matrix:
    out = tuple(tuple(row) for row in rows)
    if any(len(row) != len(out) for row in out):
        raise InvariantViolation("matrix must be square")
    return out


def identity_matrix(ctx: RingContext, n: int) -> Matrix:
    one, zero = LaurentElement.one(ctx), LaurentElement.zero(ctx)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zero_matrix(ctx: RingContext, n: int) -> Matrix:
    zero = LaurentElement.zero(ctx)
    return tuple(tuple(zero for _ in range(n)) for _ in range(n))


def unit_vector(ctx: RingContext, n: int, i: int) -> Vector:
    one, zero = LaurentElement.one(ctx), LaurentElement.zero(ctx)
    return tuple(one if k == i else zero for k in range(n))


def context_of(A: Matrix) -> RingContext:
    return A[0][0].ctx


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def _dot(row: Sequence[LaurentElement], col: Sequence[LaurentElement]) -> LaurentElement:
    acc = LaurentElement.zero(row[0].ctx)
    for a, b in zip(row, col):
        if not a.is_zero and not b.is_zero:
            acc = acc + a * b
    return acc


def matrix_mul(A: Matrix, B: Matrix) -> Matrix:
    cols = transpose(B)
    return tuple(tuple(_dot(row, col) for col in cols) for row in A)


def matrix_vector(A: Matrix, v: Vector) -> Vector:
    return tuple(_dot(row, v) for row in A)


def matrix_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matrix_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matrix_scale(A: Matrix, x: Union[LaurentElement, int, Fraction]) -> Matrix:
    return tuple(tuple(a * x for a in row) for row in A)


def matrix_scale_p(A: Matrix, k: int) -> Matrix:
    return tuple(tuple(a.scale_p(k) for a in row) for row in A)


def minus_identity(A: Matrix) -> Matrix:
    return matrix_sub(A, identity_matrix(context_of(A), len(A)))


def sigma_matrix(A: Matrix, iterations: int = 1) -> Matrix:
    """σ^iterations を成分ごとに作用させる。"""
    return tuple(tuple(frobenius(a, iterations) for a in row) for row in A)


def specialize_zero(A: Matrix) -> Matrix:
    return tuple(tuple(a.specialize_zero() for a in row) for row in A)


def is_constant(A: Matrix) -> bool:
    return all(a.is_zero or a.exponents == [0] for row in A for a in row)


def is_truncated(A: Matrix) -> bool:
    return any(a.truncated for row in A for a in row)


def is_zero_matrix(A: Matrix) -> bool:
    return all(a.is_zero for row in A for a in row)


def matrix_valuation(A: Matrix, r: Fraction) -> Union[Fraction, float]:
    """成分ごとの w_r の最小値。"""
    return min((weighted_valuation(a, r) for row in A for a in row), default=INF)


def matrix_interval_min(A: Matrix, interval: Interval) -> Union[Fraction, float]:
    return min(matrix_valuation(A, interval.lo), matrix_valuation(A, interval.hi))


def char_poly(A: Matrix) -> list[LaurentElement]:
    """
    det(x·I - A) の係数を低次から [c_0, ..., c_n]（c_n = 1）で返す。

    Berkowitz 法: A = [[a, R], [C, A']] と分割し、Toeplitz 行列
    (1, -a, -RC, -RA'C, -RA'^2 C, ...) を A' の特性ベクトルに掛ける。
    """
    n = len(A)
    ctx = context_of(A)
    one = LaurentElement.one(ctx)
    vec = [one, -A[n - 1][n - 1]]
    # 右下の小行列から順に拡大する
    for k in range(n - 2, -1, -1):
        a = A[k][k]
        row = [A[k][j] for j in range(k + 1, n)]
        col = tuple(A[i][k] for i in range(k + 1, n))
        sub = tuple(tuple(A[i][j] for j in range(k + 1, n)) for i in range(k + 1, n))
        diags = [one, -a]
        current = col
        for _ in range(n - k - 1):
            diags.append(-_dot(row, current))
            current = matrix_vector(sub, current)
        size = len(vec)
        new = []
        for i in range(size + 1):
            acc = LaurentElement.zero(ctx)
            for j in range(max(0, i - (len(diags) - 1)), min(i, size - 1) + 1):
                t, c = diags[i - j], vec[j]
                if not t.is_zero and not c.is_zero:
                    acc = acc + t * c
            new.append(acc)
        vec = new
    # vec は高次から
    return list(reversed(vec))


def matrix_det(A: Matrix) -> LaurentElement:
    n = len(A)
    if n == 1:
        return A[0][0]
    if n == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    c0 = char_poly(A)[0]
    return c0 if n % 2 == 0 else -c0


def adjugate(A: Matrix) -> Matrix:
    """adj(A) = (-1)^(n+1) (A^(n-1) + c_(n-1) A^(n-2) + ... + c_1 I)。"""
    n = len(A)
    ctx = context_of(A)
    if n == 1:
        return ((LaurentElement.one(ctx),),)
    coeffs = char_poly(A)
    acc = identity_matrix(ctx, n)
    for k in range(n - 1, 0, -1):
        # Horner: acc <- A·acc + c_k I（k = n-1 から 1 まで）
        if k == n - 1:
            acc = matrix_add(A, matrix_scale(identity_matrix(ctx, n), coeffs[k]))
        else:
            acc = matrix_add(matrix_mul(A, acc), matrix_scale(identity_matrix(ctx, n), coeffs[k]))
    return acc if n % 2 == 1 else matrix_scale(acc, -1)


def matrix_inverse(A: Matrix) -> Matrix:
    """Γ[1/p] 上の逆行列 adj(A)·det(A)^(-1)。"""
    det = matrix_det(A)
    if det.is_zero:
        raise SingularAtPrecision("determinant vanishes at precision")
    return matrix_scale(adjugate(A), invert_in_field(det))


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    """行優先の Kronecker 積（基底 e_i ⊗ f_j の順序は (i, j) の辞書式）。"""
    n, m = len(A), len(B)
    return tuple(
        tuple(A[i // m][j // m] * B[i % m][j % m] for j in range(n * m))
        for i in range(n * m))


def block_diagonal(A: Matrix, B: Matrix) -> Matrix:
    ctx = context_of(A)
    zero = LaurentElement.zero(ctx)
    n, m = len(A), len(B)
    rows = [tuple(A[i]) + (zero,) * m for i in range(n)]
    rows += [(zero,) * n + tuple(B[i]) for i in range(m)]
    return tuple(rows)


def submatrix(A: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return tuple(tuple(A[i][j] for j in cols) for i in rows)


def compound(A: Matrix, k: int) -> Matrix:
    """k 次小行列式の行列（部分集合は辞書式順）。"""
    n = len(A)
    if not 1 <= k <= n:
        raise InvariantViolation(f"wedge degree {k} outside [1, {n}]")
    subsets = list(combinations(range(n), k))
    return tuple(
        tuple(matrix_det(submatrix(A, rows, cols)) for cols in subsets)
        for rows in subsets)
