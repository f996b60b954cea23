import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

MAX_ORDER: int = 128
MAX_COLORS: int = 256

DEFAULT_SEARCH_BUDGET: int = 50_000_000


@dataclass(frozen=True)
class Settings:
    node_budget: Optional[int]
    search_budget: int
    workers: int
    log_level: str


def _int_or_none(raw: str) -> Optional[int]:
    raw = raw.strip()
    return int(raw) if raw else None


def load_settings() -> Settings:
    """
    Read the library settings from the environment (and a `.env` file, if
    one is present).

    Returns:
        Settings: The solver node budget, the search work budget, the
            default number of worker processes and the CLI log level.

    Raises:
        ValueError: If a numeric setting is not an integer.
    """
    load_dotenv()
    return Settings(
        node_budget=_int_or_none(os.getenv("LATINDEF_NODE_BUDGET", "")),
        search_budget=int(
            os.getenv("LATINDEF_SEARCH_BUDGET", str(DEFAULT_SEARCH_BUDGET))
        ),
        workers=int(os.getenv("LATINDEF_WORKERS", "1")),
        log_level=os.getenv("LATINDEF_LOG_LEVEL", "WARNING").upper(),
    )
