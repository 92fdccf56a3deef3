"""
instances.py - 受け入れスイート用の乱数インスタンス生成

すべての生成器は random.Random(seed) だけを乱数源とし、同じシードからは
同じインスタンス列を返す。生成した加群が窓からはみ出さないよう、
必要に応じて作業用環の hi_cap を広げる。
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from slope_common.logger import get_logger

from robba.matrices import Matrix, as_matrix, identity_matrix, matrix_mul
from robba.padic_core import LaurentElement, RingContext
from robba.sigma_mod import SigmaModule, standard_module
from robba.slope_engine import p_power_diagonal

logger = get_logger("robba.instances")

# 巡回ベクトル探索の乱数候補が持つ u の最大次数
_CANDIDATE_DEGREE = 1


def standard_parameters(max_c: int = 4, max_d: int = 4) -> list[tuple[int, int]]:
    """|c| <= max_c、1 <= d <= max_d、gcd(c, d) = 1 の組（d = 1 では c は任意）。"""
    return [(c, d) for d in range(1, max_d + 1) for c in range(-max_c, max_c + 1)
            if gcd(c, d) == 1]


def transfer(A: Matrix, ctx: RingContext) -> Matrix:
    """同じ p・精度の別の作業用環へ成分を写す。"""
    return as_matrix([[LaurentElement.from_terms(ctx, a.terms) for a in row] for row in A])


def module_degree(A: Matrix) -> int:
    return max((a.max_exponent for row in A for a in row if not a.is_zero), default=0)


def context_for(ctx: RingContext, A: Matrix, rank: int, frob_power: int = 1) -> RingContext:
    """F^rank v（v の次数は _CANDIDATE_DEGREE 以下）が窓に収まる作業用環。"""
    q = ctx.q ** frob_power
    needed = module_degree(A) * (q ** rank - 1) // max(q - 1, 1) + _CANDIDATE_DEGREE * q ** rank + 8
    if needed <= ctx.hi_cap:
        return ctx
    return ctx.widened(ctx.lo_cap, needed)


@dataclass(frozen=True)
class TriangularizeCase:
    module: SigmaModule
    D: Matrix
    r: Fraction


@dataclass(frozen=True)
class GoodModelCase:
    A: Matrix
    D: Matrix
    r: Fraction


class InstanceGenerator:
    """シード付きのインスタンス生成器。"""

    def __init__(self, ctx: RingContext, seed: int):
        self.ctx = ctx
        self.seed = seed
        self.rng = random.Random(seed)
        logger.debug(f"instance generator seeded with {seed}")

    # --- 元 ---

    def _nonzero_coefficient(self) -> int:
        c = 0
        while c % self.ctx.p == 0:
            c = self.rng.randint(-(self.ctx.p ** 2), self.ctx.p ** 2)
        return c

    def element(self, exponents: tuple[int, int] = (-6, 6), max_valuation: int = 3,
                terms: Optional[int] = None) -> LaurentElement:
        """係数が p^w × (p と素な整数) の項を持つ非ゼロの元。"""
        count = terms or self.rng.randint(1, 4)
        while True:
            raw = {}
            for _ in range(count):
                i = self.rng.randint(*exponents)
                raw[i] = self._nonzero_coefficient() * self.ctx.p ** self.rng.randint(0, max_valuation)
            x = LaurentElement.from_terms(self.ctx, raw)
            if not x.is_zero:
                return x

    def element_pair(self) -> tuple[LaurentElement, LaurentElement]:
        return self.element(), self.element()

    def integral_pair(self) -> tuple[LaurentElement, LaurentElement]:
        """割り算用の整係数の組 (x, y)。"""
        return self.element((-3, 6), 3), self.element((-3, 6), 3)

    def h1_input(self) -> LaurentElement:
        return self.element((-2, 6), 2)

    # --- 加群 ---

    def _elementary(self, n: int) -> Matrix:
        """I + c·u^k E_ij（i ≠ j）。"""
        i, j = self.rng.sample(range(n), 2)
        entry = LaurentElement.monomial(self.ctx, self.rng.randint(0, 1), self.rng.choice([-2, -1, 1, 2]))
        rows = [list(row) for row in identity_matrix(self.ctx, n)]
        rows[i][j] = entry
        return as_matrix(rows)

    def _unimodular(self, n: int) -> Matrix:
        """det = 1 の整係数行列（基本行列の積）。"""
        result = identity_matrix(self.ctx, n)
        if n == 1:
            return result
        for _ in range(self.rng.randint(1, 2)):
            result = matrix_mul(result, self._elementary(n))
        return result

    def comparison_module(self) -> SigmaModule:
        """
        u の非負冪だけを持つ加群。L·D·R（L, R は det 1 の整係数行列）か、
        [[0, p^c], [1, u^k]] 型の同伴行列。
        """
        if self.rng.random() < 0.3:
            c = self.rng.randint(1, 3)
            k = self.rng.randint(1, 2)
            zero, one = LaurentElement.zero(self.ctx), LaurentElement.one(self.ctx)
            A = as_matrix([[zero, one.scale_p(c)], [one, LaurentElement.monomial(self.ctx, k)]])
            rank = 2
        else:
            rank = self.rng.randint(1, 4)
            exps = [self.rng.randint(0, 2) for _ in range(rank)]
            D = p_power_diagonal(self.ctx, exps)
            A = matrix_mul(matrix_mul(self._unimodular(rank), D), self._unimodular(rank))
        wide = context_for(self.ctx, A, rank)
        return SigmaModule(transfer(A, wide))

    def standard_pair(self) -> tuple[tuple[int, int], tuple[int, int]]:
        params = standard_parameters()
        return self.rng.choice(params), self.rng.choice(params)

    def standard(self) -> SigmaModule:
        c, d = self.rng.choice(standard_parameters())
        return standard_module(self.ctx, c, d)

    # --- 三角化・良いモデル ---

    def _poly(self, valuation: int, exponents: tuple[int, int]) -> LaurentElement:
        raw = {}
        for _ in range(self.rng.randint(1, 2)):
            raw[self.rng.randint(*exponents)] = self._nonzero_coefficient() * self.ctx.p ** valuation
        return LaurentElement.from_terms(self.ctx, raw)

    def triangularize_case(self) -> TriangularizeCase:
        """
        A = (I + E)·D。D の対角の付値は非増加、差の最大を h として
        E の全成分は w >= 1 + 4h、対角を含む下三角部分は u の正冪だけを持つ。
        """
        n = self.rng.randint(2, 3)
        exps = sorted((self.rng.randint(0, 2) for _ in range(n)), reverse=True)
        h = exps[0] - exps[-1]
        floor = 1 + 4 * h
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i != j and self.rng.random() < 0.3:
                    row.append(LaurentElement.zero(self.ctx))
                    continue
                low = 1 if i >= j else 0
                entry = self._poly(floor + self.rng.randint(0, 2), (low, 3))
                row.append(entry + 1 if i == j else entry)
            rows.append(row)
        D = p_power_diagonal(self.ctx, exps)
        A = matrix_mul(as_matrix(rows), D)
        return TriangularizeCase(SigmaModule(A), D, Fraction(1, 2))

    def good_model_case(self) -> GoodModelCase:
        """
        A = (I + E)·D、r = 1/10。E は 0 以下の桁の項（u の冪は w_r > h/(q-1) + 1 となる大きさ）と
        正の桁の項を混ぜたもの。
        """
        n = self.rng.randint(2, 3)
        exps = [self.rng.randint(0, 2) for _ in range(n)]
        r = Fraction(1, 10)
        threshold = Fraction(max(exps) - min(exps), self.ctx.q - 1)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                raw = {}
                if self.rng.random() < 0.6:
                    w = self.rng.randint(-1, 0)
                    k = int((threshold + 1 - w) / r) + self.rng.randint(1, 5)
                    raw[k] = self._nonzero_coefficient() * Fraction(self.ctx.p) ** w
                if self.rng.random() < 0.6:
                    raw[self.rng.randint(0, 3)] = self._nonzero_coefficient() * self.ctx.p ** self.rng.randint(1, 2)
                entry = LaurentElement.from_terms(self.ctx, raw)
                row.append(entry + 1 if i == j else entry)
            rows.append(row)
        D = p_power_diagonal(self.ctx, exps)
        return GoodModelCase(matrix_mul(as_matrix(rows), D), D, r)

    # --- 多角形 ---

    def slope_multiset(self, size: int) -> list[Fraction]:
        return [Fraction(self.rng.randint(-6, 6), self.rng.randint(1, 3)) for _ in range(size)]
