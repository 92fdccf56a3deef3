"""
triangularize.py - 上三角化

加群ファイルに "diagonal"（D の対角の p 冪、非増加）と "r"（0 < r < r0）を書く。
B = U^{-1}·A·σ(U) と、パスごとの利得を含む証明書を返す。
"""
from robba.codec import parse_rational, serialize_certificate, serialize_matrix
from robba.slope_engine import p_power_diagonal, triangularize
from utils import diagonal_of, load_module_document, target_of

DEFAULT_TARGET = 12


def execute(command: dict, context, logger) -> dict:
    path = command["inputs"][0]
    module, raw = load_module_document(path, command)
    D = p_power_diagonal(module.ctx, diagonal_of(raw, path))
    r = parse_rational(raw.get("r", "1/2"), f"{path}: r")
    target = target_of(command, module.ctx, DEFAULT_TARGET)
    U, B, cert = triangularize(module, D, r, target, command.get("max_iter"))
    logger.debug(f"triangularize: {cert.iterations_used} passes")
    return {
        "r": str(r),
        "target": target,
        "U": serialize_matrix(U),
        "B": serialize_matrix(B),
        "certificate": serialize_certificate(cert),
    }
