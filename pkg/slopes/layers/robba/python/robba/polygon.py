"""
polygon.py - 半径区間と Newton 多角形

元の Newton 多角形（点 (v_n, n) の下側凸包）と σ 加群の多角形（原点から
始まり横幅 = 階数）を同じ NewtonPolygon 型で表す。傾きはすべて Fraction。
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from robba.errors import InvariantViolation

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Interval:
    """半径区間 (lo, hi]（closed_lo=True なら [lo, hi]）。"""
    lo: Fraction
    hi: Fraction
    closed_lo: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi or (self.lo == self.hi and not self.closed_lo):
            raise InvariantViolation(f"empty interval {self}")
        if self.lo < 0:
            raise InvariantViolation(f"radii must be nonnegative, got {self}")

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi), closed_lo=True)

    def contains(self, s: Fraction) -> bool:
        above_lo = s > self.lo or (self.closed_lo and s == self.lo)
        return above_lo and s <= self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def samples(self) -> list[Fraction]:
        """端点と中点（重複は除く）。区間全体での下界は、この3点で確認する。"""
        out = []
        for s in (self.lo, self.midpoint, self.hi):
            if s not in out:
                out.append(s)
        return out

    def __str__(self) -> str:
        left = "[" if self.closed_lo else "("
        return f"{left}{self.lo}, {self.hi}]"


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Iterable[Point]) -> list[Point]:
    """有限点集合の下側凸包（x 昇順、Andrew の monotone chain）。"""
    pts = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    # 同じ x では最小の y だけ残す
    lowest: dict[Fraction, Fraction] = {}
    for x, y in pts:
        if x not in lowest:
            lowest[x] = y
    pts = sorted(lowest.items())
    if len(pts) <= 2:
        return pts
    hull: list[Point] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    """
    傾きの多重集合（昇順、重複なし）と始点で表した多角形。

    kind="element": 始点 left_anchor = (v, n) から傾き s・多重度 m ごとに
        (v - m/s, n + m) へ進む（n を増やす向き）。
    kind="module":  始点は原点、傾き s・多重度 m ごとに (x + m, y + s·m) へ進む。
    """
    slopes: tuple[tuple[Fraction, int], ...]
    left_anchor: tuple = (Fraction(0), 0)
    interval: Optional[Interval] = None
    precision_limited: bool = False
    kind: str = "element"

    def __post_init__(self):
        slopes = tuple((Fraction(s), int(m)) for s, m in self.slopes)
        object.__setattr__(self, "slopes", slopes)
        for (a, _), (b, _) in zip(slopes, slopes[1:]):
            if a >= b:
                raise InvariantViolation(f"slopes must be strictly increasing: {slopes}")
        if any(m < 1 for _, m in slopes):
            raise InvariantViolation(f"multiplicities must be positive: {slopes}")
        if self.kind not in ("element", "module"):
            raise InvariantViolation(f"unknown polygon kind {self.kind!r}")
        if self.interval is not None:
            outside = [s for s, _ in slopes if not self.interval.contains(s)]
            if outside:
                raise InvariantViolation(f"slopes {outside} lie outside {self.interval}")

    @classmethod
    def from_slopes(cls, values: Iterable[Union[Fraction, int, str]],
                    precision_limited: bool = False) -> "NewtonPolygon":
        """重複を含む傾きの列から加群の多角形を作る。"""
        counts = Counter(Fraction(v) for v in values)
        return cls(tuple(sorted(counts.items())), (Fraction(0), 0), None,
                   precision_limited, "module")

    @property
    def multiset(self) -> list[Fraction]:
        return [s for s, m in self.slopes for _ in range(m)]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.slopes)

    @property
    def is_empty(self) -> bool:
        return not self.slopes

    @property
    def endpoint(self) -> tuple[int, Fraction]:
        """加群の多角形の終点 (階数, 次数)。"""
        return self.total_multiplicity, sum((s * m for s, m in self.slopes), Fraction(0))

    def vertices(self) -> list[Point]:
        if self.kind == "module":
            x, y = Fraction(0), Fraction(0)
            out = [(x, y)]
            for s, m in self.slopes:
                x, y = x + m, y + s * m
                out.append((x, y))
            return out
        v, n = self.left_anchor
        out = [(v, Fraction(n))]
        for s, m in self.slopes:
            v, n = v - Fraction(m) / s, n + m
            out.append((v, Fraction(n)))
        return out

    def value_at(self, x: Fraction) -> Fraction:
        """加群の多角形の x における高さ（0 <= x <= 階数）。"""
        remaining, y = Fraction(x), Fraction(0)
        for s, m in self.slopes:
            step = min(remaining, Fraction(m))
            y += s * step
            remaining -= step
            if remaining <= 0:
                break
        return y

    def shifted(self, b: Fraction) -> "NewtonPolygon":
        """全傾きに b を足した多角形（ひねり用）。"""
        return NewtonPolygon.from_slopes([s + b for s in self.multiset], self.precision_limited)

    def __str__(self) -> str:
        body = ", ".join(f"{s}x{m}" if m > 1 else f"{s}" for s, m in self.slopes)
        return f"{{{body}}}"


def element_polygon_from_points(points: Sequence[tuple[int, int]], interval: Interval,
                                ceiling: int, anchor_n: int,
                                anchor_v: Union[int, float]) -> NewtonPolygon:
    """
    元の点 (v_n, n) から区間 interval 内の傾きだけを残した多角形を作る。

    anchor_n, anchor_v は保持区間の傾きが空のときの始点（上端 hi での最小化点）。
    ceiling は精度の上限 n（= N_abs - 1）で、保持した辺がここに触れたら精度制限とみなす。
    """
    hull = lower_hull((Fraction(v), Fraction(n)) for v, n in points)
    segments = []
    # 凸包を x 降順（n 昇順）にたどる
    for right, left in zip(reversed(hull), list(reversed(hull))[1:]):
        dv, dn = left[0] - right[0], left[1] - right[1]
        s = dn / -dv
        if interval.contains(s):
            segments.append((s, int(dn), right, left))
    segments.sort(key=lambda seg: seg[0])
    limited = anchor_n >= ceiling
    if segments:
        start = segments[0][2]
        anchor = (start[0], int(start[1]))
        limited = limited or any(left[1] >= ceiling for _, _, _, left in segments)
    else:
        anchor = (anchor_v, anchor_n)
    merged: list[tuple[Fraction, int]] = []
    for s, m, _, _ in segments:
        if merged and merged[-1][0] == s:
            merged[-1] = (s, merged[-1][1] + m)
        else:
            merged.append((s, m))
    return NewtonPolygon(tuple(merged), anchor, interval, limited, "element")
