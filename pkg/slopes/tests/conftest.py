import os
import pytest
import json
from pathlib import Path

# テスト時は既定の作業用環を固定する
os.environ["ROBBA_PRIME"] = "5"
os.environ["ROBBA_Q"] = "5"
os.environ["ROBBA_PREC"] = "24"
os.environ["ROBBA_WINDOW"] = "-64:256"
os.environ["ROBBA_R0"] = "1"
os.environ["ROBBA_MAX_ITER"] = "64"
os.environ["ROBBA_SEED"] = "42"
os.environ["ROBBA_LOG_LEVEL"] = "INFO"

ROOT = Path(__file__).resolve().parent.parent.parent
SAMPLES = ROOT / "samples"
MAPPINGS = Path(__file__).resolve().parent.parent / "functions" / "slopecli" / "mappings"


@pytest.fixture
def run_context():
    """RunContext の代わりのモック"""
    class Context:
        run_id = "test-run-id-12345"
    return Context()


@pytest.fixture
def ctx():
    """既定の作業用環（p = q = 5, N_abs = 24, 窓 [-64, 256], r0 = 1）"""
    from robba.padic_core import RingContext
    return RingContext(5, 5, 24, -64, 256)


@pytest.fixture
def narrow_ctx():
    """切り捨ての確認用の狭い窓"""
    from robba.padic_core import RingContext
    return RingContext(5, 5, 12, -8, 8)


@pytest.fixture
def example_module(ctx):
    """F v1 = v2, F v2 = p v1 + u v2"""
    from robba.slope_engine import example_7_3_module
    return example_7_3_module(ctx)


@pytest.fixture
def sample():
    """samples/ 配下のファイルパスを返す関数"""
    def path(name: str) -> str:
        return str(SAMPLES / name)
    return path


@pytest.fixture
def make_command():
    """parse_command() と同じ形のコマンド辞書を作る"""
    def build(verb: str, *inputs: str, target=None, instances=None, **options) -> dict:
        defaults = {"radius": None, "interval": None, "n": None, "op": None, "arg": None, "strict": False}
        defaults.update(options)
        return {
            "verb": verb,
            "inputs": list(inputs),
            "out": None,
            "prec": None,
            "window": None,
            "seed": 42,
            "instances": instances,
            "target": target,
            "max_iter": 64,
            "options": defaults,
        }
    return build


@pytest.fixture
def verbs():
    with open(MAPPINGS / "verbs.json", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture
def exit_codes():
    with open(MAPPINGS / "exit_codes.json", encoding="utf-8") as f:
        return json.load(f)
