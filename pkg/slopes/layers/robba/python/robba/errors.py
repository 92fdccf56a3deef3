"""
errors.py - 例外階層

ライブラリが送出する例外はすべて RobbaError を基底とする。
CLI は mappings/exit_codes.json で例外クラス名を終了コードへ対応づける。
"""


class RobbaError(Exception):
    """ライブラリ共通の基底例外。"""


class ContextMismatch(RobbaError):
    """異なる RingContext 由来の値を混ぜて演算しようとした。"""


class InvariantViolation(RobbaError):
    """型の不変条件（既約性・窓・行列式の証明など）を満たさない値を構築しようとした。"""


class ParseError(RobbaError):
    """JSON 入力のスキーマ違反。location に行・フィールドを保持する。"""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class ZeroElement(RobbaError):
    """精度内でゼロの元に対して、非ゼロを前提とする操作を行った。"""


class ZeroDivisor(ZeroElement):
    """割り算の除数が精度内でゼロ。"""


class NotAUnit(RobbaError):
    """指定区間に傾きを持つため単元ではない。"""


class PrecisionExhausted(RobbaError):
    """反復が精度・窓・反復上限の範囲で目標残差に到達しなかった。"""


class WindowOverflow(PrecisionExhausted):
    """目標残差に到達する前に台が窓の外へ押し出された。"""


class BadOverlap(RobbaError):
    """二重区間分解の仮定 w_s(M - I) > 0 が重なり部分で成り立たない。"""


class SingularAtPrecision(RobbaError):
    """行列が精度内で特異（ピボットが見つからない）。"""


class NotCoprime(RobbaError):
    """標準加群の (c, d) が互いに素でない。"""


class DetHasSlopes(InvariantViolation):
    """行列式が p 冪と単元の積に分解できない（傾きを持つ）。"""


class FrobeniusPowerMismatch(InvariantViolation):
    """Frobenius 冪が異なる σ 加群同士を組み合わせようとした。"""


class EndpointMismatch(RobbaError):
    """多角形の終点 (rank, degree) が一致しない。"""


class NoCyclicVectorFound(RobbaError):
    """探索上限までに巡回ベクトルが見つからなかった。"""


class NegativeSupport(RobbaError):
    """u の負冪を含むため u = 0 への特殊化が定義できない。"""


class SingularSpecialization(RobbaError):
    """u = 0 への特殊化 A(0) が p を逆元にしても可逆でない。"""


class HypothesisFailed(RobbaError):
    """反復アルゴリズムの仮定（不等式）が入力で成り立たない。"""


class NonIntegralMatrix(RobbaError):
    """行列成分に p の負冪の桁が含まれる。"""


class Violation(RobbaError):
    """比較定理の反例（special が generic の上にない）。テストハーネス用の番兵。"""
