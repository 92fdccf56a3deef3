"""
selftest.py - 受け入れスイートの実行

各スイートは自分専用の InstanceGenerator（同じシード）を持ち、スレッドプールで並列に走る。
レポート上のスイートの順序は SUITES の定義順で固定。

設計方針:
  - 個々のインスタンスの失敗は WARN ログを出して数えるだけで、残りの処理は続ける
  - 1件でも失敗があれば結果に violation を付け、handler が終了コード 6 にする
  - --instances はランダムなスイートの件数を上書きする（固定例のスイートは常に1件）
"""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable

from slope_common.logger import log_warn

from robba.codec import context_from, rational_text
from robba.division_factor import div_rem
from robba.errors import RobbaError, Violation
from robba.instances import InstanceGenerator, standard_parameters
from robba.polygon import Interval, NewtonPolygon
from robba.sigma_mod import (degree, direct_sum, dual, filtration_check, polygon_lies_above, predicted_slopes,
                             pullback, pushforward, standard_module, standard_tensor_type, tensor, twist)
from robba.slope_engine import (SPECIAL_ABOVE, VIOLATION, compare_polygons, example_7_3_module,
                                generic_hn_polygon, good_model_turnover, solve_h1_rank1, h1_residual,
                                triangularize)
from robba.valuations import height, newton_polygon, weighted_valuation
from utils import overrides_of

SERVICE_NAME = "robba-slopes"

DIVREM_TARGET = 16
TRIANGULARIZE_TARGET = 12
GOOD_MODEL_TARGET = 12
H1_TARGET = 16


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise Violation(message)


# --- 各スイートの1インスタンス分の検査 ---

def check_example(gen: InstanceGenerator, k: int) -> None:
    report = compare_polygons(example_7_3_module(gen.ctx), seed=gen.seed)
    _expect(report.generic.multiset == [Fraction(0), Fraction(1)], f"generic slopes {report.generic.multiset}")
    _expect(report.special is not None and report.special.multiset == [Fraction(1, 2)] * 2,
            f"special slopes {report.special}")
    _expect(report.comparison == SPECIAL_ABOVE, f"comparison {report.comparison}")
    _expect(report.generic.endpoint == (2, Fraction(1)), f"endpoint {report.generic.endpoint}")


def check_multiplicativity(gen: InstanceGenerator, k: int) -> None:
    x, y = gen.element_pair()
    interval = Interval(Fraction(0), gen.ctx.r0)
    px, py, pxy = (newton_polygon(z, interval) for z in (x, y, x * y))
    _expect(not (px.precision_limited or py.precision_limited or pxy.precision_limited),
            "precision-limited hull")
    _expect(pxy.multiset == sorted(px.multiset + py.multiset),
            f"slopes {pxy.multiset} != {px.multiset} + {py.multiset}")
    for r in interval.samples():
        _expect(weighted_valuation(x * y, r) == weighted_valuation(x, r) + weighted_valuation(y, r),
                f"w_{r} is not additive")


def check_divrem(gen: InstanceGenerator, k: int) -> None:
    y, x = gen.integral_pair()
    r = Fraction(1, 2)
    z, q, cert = div_rem(y, x, r, DIVREM_TARGET)
    _expect(z.is_zero or height(z, r, check=False) < height(x, r, check=False), "remainder height")
    _expect(weighted_valuation(z, r) >= weighted_valuation(y, r), "w_r(z) < w_r(y)")
    _expect((y - z - q * x).valuation >= DIVREM_TARGET, "residual below target")
    _expect(cert.verify(), "certificate does not verify")


def _standard_pair(gen: InstanceGenerator, k: int) -> tuple[tuple[int, int], tuple[int, int]]:
    params = standard_parameters()
    return params[k % len(params)], gen.rng.choice(params)


def _same(module, expected, label: str, seed: int) -> None:
    got = generic_hn_polygon(module, seed=seed).multiset
    _expect(got == sorted(expected), f"{label}: slopes {got} != {sorted(expected)}")


def check_slope_arithmetic(gen: InstanceGenerator, k: int) -> None:
    (c, d), (c2, d2) = _standard_pair(gen, k)
    b = gen.rng.randint(-2, 2)
    M, N = standard_module(gen.ctx, c, d), standard_module(gen.ctx, c2, d2)
    seed = gen.seed
    sm = [Fraction(c, d)] * d
    sn = [Fraction(c2, d2)] * d2
    _same(M, sm, f"M_{c},{d}", seed)
    _same(twist(M, b), predicted_slopes("twist", sm, b), "twist", seed)
    _expect(degree(twist(M, b)) == degree(M) + b * d, "twist degree")
    _same(dual(M), predicted_slopes("dual", sm), "dual", seed)
    _expect(degree(dual(M)) == -degree(M), "dual degree")
    _same(tensor(M, N), predicted_slopes("tensor", sm, sn), "tensor", seed)
    _expect(degree(tensor(M, N)) == degree(M) * d2 + degree(N) * d, "tensor degree")
    cc, dd, copies = standard_tensor_type(c, d, c2, d2)
    _same(tensor(M, N), [Fraction(cc, dd)] * (dd * copies), "tensor type", seed)
    _same(direct_sum(M, N), predicted_slopes("direct_sum", sm, sn), "direct sum", seed)
    _expect(degree(direct_sum(M, N)) == degree(M) + degree(N), "direct sum degree")
    pushed = pushforward(M, 2)
    _same(pushed, predicted_slopes("pushforward", sm, 2), "pushforward", seed)
    _expect(degree(pushed) == 2 * degree(M), "pushforward degree")
    _same(pullback(pushed, 2), predicted_slopes("pullback", predicted_slopes("pushforward", sm, 2), 2),
          "pullback", seed)
    _expect(degree(pullback(pushed, 2)) == degree(pushed), "pullback degree")


def check_comparison(gen: InstanceGenerator, k: int) -> None:
    module = gen.comparison_module()
    report = compare_polygons(module, seed=gen.seed)
    _expect(report.comparison != VIOLATION, f"special below generic: {report.detail}")
    _expect(report.special is not None, f"special polygon not computed: {report.detail}")
    _expect(report.special.endpoint == report.generic.endpoint, "endpoints differ")


def check_triangularize(gen: InstanceGenerator, k: int) -> None:
    case = gen.triangularize_case()
    U, B, cert = triangularize(case.module, case.D, case.r, TRIANGULARIZE_TARGET)
    _expect(cert.verify(), f"failed entries {[e.label for e in cert.failures()]}")
    _expect(all(a < b for a, b in zip(cert.gains, cert.gains[1:])), f"gains {cert.gains} not increasing")


def check_good_model(gen: InstanceGenerator, k: int) -> None:
    case = gen.good_model_case()
    U, B, cert = good_model_turnover(case.A, case.D, case.r, GOOD_MODEL_TARGET)
    _expect(cert.verify(), f"failed entries {[e.label for e in cert.failures()]}")


def check_h1(gen: InstanceGenerator, k: int) -> None:
    n = k % 3 + 1
    x = gen.h1_input()
    y = solve_h1_rank1(n, x, H1_TARGET)
    residual = h1_residual(n, x, y)
    _expect(residual.valuation >= H1_TARGET, f"n={n}: residual valuation {residual.valuation}")


def check_filtration(gen: InstanceGenerator, k: int) -> None:
    if k == 0:
        whole = NewtonPolygon.from_slopes([Fraction(1, 2)] * 2)
        parts = [NewtonPolygon.from_slopes([0]), NewtonPolygon.from_slopes([1])]
        _expect(bool(filtration_check(whole, parts)), "filtration check of the rank-2 example")
        return
    base = gen.slope_multiset(gen.rng.randint(2, 6))
    lower = NewtonPolygon.from_slopes(base)
    middle = NewtonPolygon.from_slopes(_average_pair(gen, base))
    upper = NewtonPolygon.from_slopes(_average_pair(gen, middle.multiset))
    _expect(bool(polygon_lies_above(lower, lower)), "reflexivity")
    _expect(bool(polygon_lies_above(middle, lower)), "averaging raises the polygon")
    _expect(bool(polygon_lies_above(upper, middle)), "averaging raises the polygon")
    _expect(bool(polygon_lies_above(upper, lower)), "transitivity")
    if polygon_lies_above(lower, middle):
        _expect(lower.multiset == middle.multiset, "antisymmetry")


def _average_pair(gen: InstanceGenerator, slopes: list[Fraction]) -> list[Fraction]:
    """2つの傾きをその平均で置き換える（終点は変わらず、多角形は上がる）。"""
    out = list(slopes)
    i, j = gen.rng.sample(range(len(out)), 2)
    mean = (out[i] + out[j]) / 2
    out[i] = out[j] = mean
    return out


# (スイート名, 検査関数, 既定件数, --instances で上書きするか)
SUITES: list[tuple[str, Callable[[InstanceGenerator, int], None], int, bool]] = [
    ("example-7-3", check_example, 1, False),
    ("multiplicativity", check_multiplicativity, 200, True),
    ("divrem", check_divrem, 100, True),
    ("slope-arithmetic", check_slope_arithmetic, len(standard_parameters()), True),
    ("comparison", check_comparison, 50, True),
    ("triangularize", check_triangularize, 25, True),
    ("good-model", check_good_model, 25, True),
    ("h1", check_h1, 30, True),
    ("filtration", check_filtration, 20, True),
]


def _run_suite(name: str, check, count: int, ctx, seed: int, context, logger) -> dict:
    gen = InstanceGenerator(ctx, seed)
    failures = []
    for k in range(count):
        try:
            check(gen, k)
        except (RobbaError, ArithmeticError) as e:
            message = f"{name} instance {k}: {type(e).__name__} {e}"
            log_warn(logger, SERVICE_NAME, context.run_id, message)
            failures.append(message)
    logger.debug(f"suite {name}: {count - len(failures)}/{count} passed")
    return {"name": name, "instances": count, "passed": count - len(failures),
            "failed": len(failures), "failures": failures}


def execute(command: dict, context, logger) -> dict:
    ctx = context_from(overrides_of(command))
    seed = command["seed"]
    instances = command.get("instances")
    with ThreadPoolExecutor() as pool:
        futures = [
            pool.submit(_run_suite, name, check,
                        instances if scalable and instances is not None else default,
                        ctx, seed, context, logger)
            for name, check, default, scalable in SUITES
        ]
        suites = [f.result() for f in futures]
    failed = [s["name"] for s in suites if s["failed"]]
    result = {"seed": seed, "r0": rational_text(ctx.r0), "suites": suites, "passed": not failed}
    if failed:
        result["violation"] = f"failing suites: {', '.join(failed)}"
    return result
