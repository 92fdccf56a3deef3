"""
goodmodel.py - 良いモデルへの回転

加群ファイルに "diagonal" と "r"（q^frob_power·r < r0）を書く。
B·D^{-1} - I の桁がすべて p 冪 >= 1 になる B と U を返す。
"""
from robba.codec import parse_rational, serialize_certificate, serialize_matrix
from robba.slope_engine import good_model_turnover, p_power_diagonal
from utils import diagonal_of, load_module_document, target_of

DEFAULT_TARGET = 12


def execute(command: dict, context, logger) -> dict:
    path = command["inputs"][0]
    module, raw = load_module_document(path, command)
    D = p_power_diagonal(module.ctx, diagonal_of(raw, path))
    r = parse_rational(raw.get("r", "1/10"), f"{path}: r")
    target = target_of(command, module.ctx, DEFAULT_TARGET)
    U, B, cert = good_model_turnover(module.matrix, D, r, target, module.frob_power, command.get("max_iter"))
    return {
        "r": str(r),
        "target": target,
        "U": serialize_matrix(U),
        "B": serialize_matrix(B),
        "certificate": serialize_certificate(cert),
    }
