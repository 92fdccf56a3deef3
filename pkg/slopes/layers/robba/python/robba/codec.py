"""
codec.py - JSON 入出力

有理数はすべて文字列 "a/b"（整数は数値のままでもよい）で表し、浮動小数点を使わない。

スキーマ:
  - ctx:     {"p": 5, "q": 5, "prec": 24, "window": "-64:256" | [-64, 256], "r0": "1"}
  - element: [[exponent, "coefficient"], ...]       例: [[0, "1"], [5, "1"]] = u^5 + 1
  - module:  {"ctx": ctx, "frob_power": 1, "matrix": [[element, ...], ...], "radius": "1"}
  - polygon: {"kind": "module", "slopes": ["0", "1"], "precision_limited": false}
  - 付値の +∞ は "inf"

ctx を省略した場合は既定の作業用環を使う。スキーマ違反は ParseError（location に
フィールドの位置、JSON 構文エラーなら行・列）を送出する。
"""
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Optional, Union

from slope_common.config import load_context_defaults, parse_window

from robba.division_factor import CertificateEntry, FactorizationCertificate
from robba.errors import InvariantViolation, ParseError
from robba.matrices import Matrix, as_matrix
from robba.padic_core import INF, LaurentElement, RingContext
from robba.polygon import Interval, NewtonPolygon
from robba.sigma_mod import SigmaModule
from robba.slope_engine import NOT_COMPUTED, SlopeReport

Valuation = Union[int, Fraction, float]


# --- 値の変換 ---

def rational_text(value: Union[int, Fraction]) -> str:
    return str(Fraction(value))


def valuation_text(value: Valuation) -> str:
    return "inf" if value == INF else rational_text(value)


def parse_rational(raw: Any, location: str) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise ParseError(f"expected an integer or a rational string, got {raw!r}", location)
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational {raw!r}: {e}", location) from None


def parse_int(raw: Any, location: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ParseError(f"expected an integer, got {raw!r}", location)
    return raw


def load_json(path: Union[str, Path]) -> Any:
    """ファイルを読み込む。構文エラーは行・列付きの ParseError にする。"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read input: {e.strerror}", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"{path}: line {e.lineno} column {e.colno}") from None


# --- 作業用環 ---

def context_from(overrides: Optional[Mapping] = None) -> RingContext:
    """環境変数の既定値に overrides（None の値は無視）を重ねた作業用環。"""
    values = dict(load_context_defaults())
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return RingContext.from_mapping(values)


def default_context() -> RingContext:
    return context_from()


def parse_context(raw: Any, location: str = "ctx",
                  overrides: Optional[Mapping] = None) -> RingContext:
    """優先順位は overrides（CLI フラグ）> ファイルの値 > 環境変数。"""
    if not isinstance(raw, Mapping):
        raise ParseError("expected an object with p, q, prec, window, r0", location)
    values = {}
    for key in ("p", "q", "prec"):
        if key in raw:
            values[key] = parse_int(raw[key], f"{location}.{key}")
    if "window" in raw:
        window = raw["window"]
        try:
            if isinstance(window, str):
                values["window"] = parse_window(window)
            elif isinstance(window, list) and len(window) == 2:
                values["window"] = (parse_int(window[0], f"{location}.window[0]"),
                                    parse_int(window[1], f"{location}.window[1]"))
            else:
                raise ValueError(f"expected \"LO:HI\" or [LO, HI], got {window!r}")
        except ValueError as e:
            raise ParseError(str(e), f"{location}.window") from None
    if "r0" in raw:
        values["r0"] = parse_rational(raw["r0"], f"{location}.r0")
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return context_from(values)


def serialize_context(ctx: RingContext) -> dict:
    return {"p": ctx.p, "q": ctx.q, "prec": ctx.prec,
            "window": f"{ctx.lo_cap}:{ctx.hi_cap}", "r0": rational_text(ctx.r0)}


# --- 元 ---

def parse_element(raw: Any, ctx: RingContext, location: str = "element") -> LaurentElement:
    if not isinstance(raw, list):
        raise ParseError("expected a list of [exponent, coefficient] pairs", location)
    terms: dict[int, Fraction] = {}
    for k, pair in enumerate(raw):
        where = f"{location}[{k}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"expected [exponent, coefficient], got {pair!r}", where)
        exponent = parse_int(pair[0], f"{where}[0]")
        if not ctx.lo_cap <= exponent <= ctx.hi_cap:
            raise ParseError(f"exponent {exponent} outside the window {ctx.window}", f"{where}[0]")
        terms[exponent] = terms.get(exponent, Fraction(0)) + parse_rational(pair[1], f"{where}[1]")
    return LaurentElement.from_terms(ctx, terms)


def _balanced(x: LaurentElement, mantissa: int, vexp: int) -> Fraction:
    """法 p^(N_abs - vexp) の剰余を絶対値最小の代表で返す（-1 を -1 と書くため）。"""
    modulus = x.ctx.p ** (x.ctx.prec - vexp)
    if mantissa > modulus // 2:
        mantissa -= modulus
    return mantissa * Fraction(x.ctx.p) ** vexp


def serialize_element(x: LaurentElement) -> list:
    return [[i, rational_text(_balanced(x, s.mantissa, s.vexp))] for i, s in x.terms.items()]


def parse_element_file(path: Union[str, Path], overrides: Optional[Mapping] = None) -> LaurentElement:
    """{"ctx": ..., "element": [...]} または要素のリストだけのファイルを読む。"""
    raw = load_json(path)
    if isinstance(raw, Mapping):
        ctx = (parse_context(raw["ctx"], f"{path}: ctx", overrides) if "ctx" in raw
               else context_from(overrides))
        if "element" not in raw:
            raise ParseError("missing field", f"{path}: element")
        return parse_element(raw["element"], ctx, f"{path}: element")
    return parse_element(raw, context_from(overrides), str(path))


# --- 行列と加群 ---

def parse_matrix(raw: Any, ctx: RingContext, location: str = "matrix") -> Matrix:
    if not isinstance(raw, list) or not raw:
        raise ParseError("expected a non-empty list of rows", location)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != len(raw):
            raise ParseError(f"row {i} must have {len(raw)} entries", f"{location}[{i}]")
        rows.append([parse_element(a, ctx, f"{location}[{i}][{j}]") for j, a in enumerate(row)])
    return as_matrix(rows)


def serialize_matrix(A: Matrix) -> list:
    return [[serialize_element(a) for a in row] for row in A]


def parse_module(raw: Any, location: str = "module", overrides: Optional[Mapping] = None) -> SigmaModule:
    if not isinstance(raw, Mapping):
        raise ParseError("expected an object with ctx, frob_power, matrix, radius", location)
    ctx = (parse_context(raw["ctx"], f"{location}.ctx", overrides) if "ctx" in raw
           else context_from(overrides))
    if "matrix" not in raw:
        raise ParseError("missing field", f"{location}.matrix")
    matrix = parse_matrix(raw["matrix"], ctx, f"{location}.matrix")
    frob_power = parse_int(raw.get("frob_power", 1), f"{location}.frob_power")
    radius = parse_rational(raw["radius"], f"{location}.radius") if "radius" in raw else None
    return SigmaModule(matrix, frob_power, radius)


def serialize_module(module: SigmaModule) -> dict:
    return {"ctx": serialize_context(module.ctx), "frob_power": module.frob_power,
            "matrix": serialize_matrix(module.matrix), "radius": rational_text(module.radius)}


def parse_module_file(path: Union[str, Path], overrides: Optional[Mapping] = None) -> SigmaModule:
    return parse_module(load_json(path), str(path), overrides)


# --- 多角形・証明書・レポート ---

def serialize_polygon(polygon: NewtonPolygon) -> dict:
    out = {"kind": polygon.kind,
           "slopes": [rational_text(s) for s in polygon.multiset],
           "precision_limited": polygon.precision_limited}
    if polygon.kind == "element":
        v, n = polygon.left_anchor
        out["left_anchor"] = [valuation_text(v), n]
        if polygon.interval is not None:
            out["interval"] = str(polygon.interval)
    return out


def parse_polygon(raw: Any, location: str = "polygon") -> NewtonPolygon:
    if isinstance(raw, list):
        raw = {"slopes": raw}
    if not isinstance(raw, Mapping) or "slopes" not in raw:
        raise ParseError("expected a list of slopes or an object with slopes", location)
    if not isinstance(raw["slopes"], list):
        raise ParseError("slopes must be a list", f"{location}.slopes")
    slopes = [parse_rational(s, f"{location}.slopes[{k}]") for k, s in enumerate(raw["slopes"])]
    return NewtonPolygon.from_slopes(slopes, bool(raw.get("precision_limited", False)))


def serialize_entry(entry: CertificateEntry) -> dict:
    return {"label": entry.label, "radius": rational_text(entry.radius),
            "bound": valuation_text(entry.bound), "achieved": valuation_text(entry.achieved),
            "strict": entry.strict, "satisfied": entry.satisfied}


def serialize_certificate(cert: FactorizationCertificate) -> dict:
    return {"residual_valuations": [serialize_entry(e) for e in cert.residual_valuations],
            "iterations_used": cert.iterations_used,
            "flags": sorted(cert.flags),
            "gains": [valuation_text(g) for g in cert.gains]}


def serialize_report(report: SlopeReport) -> dict:
    """SlopeReport を辞書にする。"""
    vector = report.cyclic_vector_used
    return {"generic": serialize_polygon(report.generic),
            "special": serialize_polygon(report.special) if report.special is not None else None,
            "comparison": report.comparison,
            "certificates": [serialize_certificate(c) for c in report.certificates],
            "cyclic_vector_used": [serialize_element(c) for c in vector] if vector is not None else None,
            "detail": report.detail}


def parse_valuation(raw: Any, location: str) -> Valuation:
    return INF if raw == "inf" else parse_rational(raw, location)


def parse_certificate(raw: Any, location: str = "certificate") -> FactorizationCertificate:
    """達成値をそのまま読み戻す（subject は持たない）。"""
    if not isinstance(raw, Mapping):
        raise ParseError("expected a certificate object", location)
    entries = []
    for k, e in enumerate(raw.get("residual_valuations", [])):
        where = f"{location}.residual_valuations[{k}]"
        if not isinstance(e, Mapping):
            raise ParseError("expected an entry object", where)
        entries.append(CertificateEntry(
            str(e.get("label", "")), parse_rational(e.get("radius", 0), f"{where}.radius"),
            parse_valuation(e.get("bound"), f"{where}.bound"),
            parse_valuation(e.get("achieved"), f"{where}.achieved"), bool(e.get("strict", False))))
    return FactorizationCertificate(
        entries, parse_int(raw.get("iterations_used", 0), f"{location}.iterations_used"),
        set(raw.get("flags", [])),
        [parse_valuation(g, f"{location}.gains[{k}]") for k, g in enumerate(raw.get("gains", []))])


def parse_report(raw: Any, ctx: RingContext, location: str = "report") -> SlopeReport:
    if not isinstance(raw, Mapping) or "generic" not in raw:
        raise ParseError("expected a report object with generic", location)
    vector = raw.get("cyclic_vector_used")
    return SlopeReport(
        parse_polygon(raw["generic"], f"{location}.generic"),
        parse_polygon(raw["special"], f"{location}.special") if raw.get("special") is not None else None,
        str(raw.get("comparison", NOT_COMPUTED)),
        [parse_certificate(c, f"{location}.certificates[{k}]")
         for k, c in enumerate(raw.get("certificates", []))],
        tuple(parse_element(c, ctx, f"{location}.cyclic_vector_used[{k}]")
              for k, c in enumerate(vector)) if vector is not None else None,
        str(raw.get("detail", "")))


def parse_interval(raw: Any, location: str = "interval") -> Interval:
    """[lo, hi] の閉区間。"""
    if not isinstance(raw, list) or len(raw) != 2:
        raise ParseError("expected [lo, hi]", location)
    lo, hi = (parse_rational(raw[k], f"{location}[{k}]") for k in range(2))
    try:
        return Interval.closed(lo, hi)
    except InvariantViolation as e:
        raise ParseError(str(e), location) from None


def dumps(document: Any) -> str:
    """決定的な JSON 文字列（キー順固定）。"""
    return json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2)
