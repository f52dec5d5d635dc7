import os
import sys
from pathlib import Path
from typing import Iterator

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent

if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from utils import rules  # noqa: E402
from utils.rewrite import RuleSet  # noqa: E402

ENV_KEYS = (
    "GLPQ_STEP_LIMIT",
    "GLPQ_OVERLAP_LENGTH",
    "GLPQ_ORACLE_SAMPLES",
    "GLPQ_ORACLE_SEED",
    "GLPQ_LOG_LEVEL",
    "GLPQ_KOSZUL",
)


# ---------------------------------------------------------------------------
# Rule set fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def rs_a() -> RuleSet:
    return rules.rs_a()


@pytest.fixture
def functions() -> RuleSet:
    """The presentation relations with a⁻¹ and d⁻¹ adjoined."""
    return rules.functions()


@pytest.fixture
def left_calculus() -> RuleSet:
    return rules.left_calculus()


@pytest.fixture
def plane_mixed() -> RuleSet:
    return rules.plane_mixed()


# ---------------------------------------------------------------------------
# Environment isolation
# ---------------------------------------------------------------------------

@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Iterator[Path]:
    """
    Run from an empty directory with no GLPQ_* variables set.

    The CLI writes verify.config.json into the working directory, so it
    lands inside tmp_path.
    """
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    saved = {k: os.environ.get(k) for k in ENV_KEYS}
    yield tmp_path
    for key, value in saved.items():
        if value is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = value
