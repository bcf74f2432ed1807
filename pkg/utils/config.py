"""Runtime settings read from the environment."""
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from utils.errors import InvalidInputError

# Constants
DEFAULT_THREADS = 1
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_WALSH_MAX_ORDER = 10
DEFAULT_GENFUN_MAX_DEPTH = 8
DEFAULT_FAST_INDEX_LIMIT = 4 ** 15
DEFAULT_DYADIC_BITS = 24
DEFAULT_SEED = 2005


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"Environment variable {name} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class Settings:
    """Process-wide knobs. Every field has an environment variable."""

    threads: int = DEFAULT_THREADS
    log_level: str = DEFAULT_LOG_LEVEL
    log_dir: Optional[str] = None
    walsh_max_order: int = DEFAULT_WALSH_MAX_ORDER
    genfun_max_depth: int = DEFAULT_GENFUN_MAX_DEPTH
    fast_index_limit: int = DEFAULT_FAST_INDEX_LIMIT
    dyadic_bits: int = DEFAULT_DYADIC_BITS
    seed: int = DEFAULT_SEED

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            threads=max(1, _int_env("QH_THREADS", DEFAULT_THREADS)),
            log_level=os.environ.get("QH_LOG_LEVEL", DEFAULT_LOG_LEVEL),
            log_dir=os.environ.get("QH_LOG_DIR") or None,
            walsh_max_order=_int_env("QH_WALSH_MAX_ORDER", DEFAULT_WALSH_MAX_ORDER),
            genfun_max_depth=_int_env("QH_GENFUN_MAX_DEPTH", DEFAULT_GENFUN_MAX_DEPTH),
            fast_index_limit=_int_env("QH_FAST_INDEX_LIMIT", DEFAULT_FAST_INDEX_LIMIT),
            dyadic_bits=_int_env("QH_DYADIC_BITS", DEFAULT_DYADIC_BITS),
            seed=_int_env("QH_SEED", DEFAULT_SEED),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
