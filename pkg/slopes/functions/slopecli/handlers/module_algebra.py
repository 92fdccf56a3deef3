"""
module_algebra.py - 加群の演算

--op で twist / dual / tensor / wedge / pushforward / pullback / direct-sum を選ぶ。
tensor と direct-sum は入力ファイルを2つ取る。twist・wedge・pushforward・pullback は --arg に整数を取る。

結果の加群の generic 多角形を、入力の傾きから予測される多重集合と突き合わせる。
"""
from robba.codec import rational_text, serialize_module, serialize_polygon
from robba.errors import InvariantViolation
from robba.sigma_mod import degree, direct_sum, dual, predicted_slopes, pullback, pushforward, tensor, twist, wedge
from robba.slope_engine import generic_hn_polygon
from utils import load_module_document, option

UNARY = {"twist": twist, "wedge": wedge, "pushforward": pushforward, "pullback": pullback}
BINARY = {"tensor": tensor, "direct-sum": direct_sum}
NEEDS_ARG = set(UNARY)


def execute(command: dict, context, logger) -> dict:
    op = option(command, "op")
    if op not in UNARY and op not in BINARY and op != "dual":
        raise InvariantViolation(f"unknown --op {op!r}")
    arity = 2 if op in BINARY else 1
    if len(command["inputs"]) != arity:
        raise InvariantViolation(f"--op {op} takes {arity} input file(s), got {len(command['inputs'])}")
    modules = [load_module_document(path, command)[0] for path in command["inputs"]]
    arg = option(command, "arg")
    if op in NEEDS_ARG and arg is None:
        raise InvariantViolation(f"--op {op} needs --arg")

    seed = command["seed"]
    source_slopes = generic_hn_polygon(modules[0], seed=seed).multiset
    if op == "dual":
        result = dual(modules[0])
        predicted = predicted_slopes("dual", source_slopes)
    elif op in UNARY:
        result = UNARY[op](modules[0], int(arg))
        predicted = predicted_slopes(op, source_slopes, int(arg))
    else:
        result = BINARY[op](*modules)
        other = generic_hn_polygon(modules[1], seed=seed).multiset
        predicted = predicted_slopes(op.replace("-", "_"), source_slopes, other)

    polygon = generic_hn_polygon(result, seed=seed)
    return {
        "op": op,
        "arg": arg,
        "module": serialize_module(result),
        "degree": degree(result),
        "polygon": serialize_polygon(polygon),
        "predicted": [rational_text(s) for s in predicted],
        "matches_prediction": polygon.multiset == predicted,
    }
