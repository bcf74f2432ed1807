import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from curve.partial_sums import partial_sum_table  # noqa: E402
from utils.config import get_settings  # noqa: E402


@pytest.fixture
def table_4096():
    """S(0..4096) as an int64 array."""
    return partial_sum_table(4096)


@pytest.fixture
def env_settings(monkeypatch):
    """Set QH_* variables and get a fresh Settings; the cache is restored afterwards."""

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(key, str(value))
        get_settings.cache_clear()
        return get_settings()

    yield apply
    get_settings.cache_clear()
