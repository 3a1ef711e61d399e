"""Runtime configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import dotenv_values

ENV_PREFIX = "PONCELET_"


def _env(name: str, default: str) -> str:
    return os.getenv(f"{ENV_PREFIX}{name}", default)


@dataclass(frozen=True)
class Settings:
    """Defaults for every computation, overridable through the environment."""

    digits: int = 24
    baby_handoff: float = 0.1
    max_iter: int = 10_000_000
    max_partial_quotient: int = 1_000_000
    threshold_guard: int = 4
    ellipse_digits: int = 50
    ellipse_budget: int = 1_000_000
    nr_digits: int = 34
    nr_budget: int = 1_000_000
    nr_reanchor: int = 10_000
    cycle_tol: float = 1e-6
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> Settings:
        """Build settings from ``PONCELET_*`` environment variables."""
        return cls(
            digits=int(_env("DIGITS", "24")),
            baby_handoff=float(_env("BABY_HANDOFF", "0.1")),
            max_iter=int(_env("MAX_ITER", "10000000")),
            max_partial_quotient=int(_env("MAX_PARTIAL_QUOTIENT", "1000000")),
            threshold_guard=int(_env("THRESHOLD_GUARD", "4")),
            ellipse_digits=int(_env("ELLIPSE_DIGITS", "50")),
            ellipse_budget=int(_env("ELLIPSE_BUDGET", "1000000")),
            nr_digits=int(_env("NR_DIGITS", "34")),
            nr_budget=int(_env("NR_BUDGET", "1000000")),
            nr_reanchor=int(_env("NR_REANCHOR", "10000")),
            cycle_tol=float(_env("CYCLE_TOL", "1e-6")),
            log_level=_env("LOG_LEVEL", "WARNING").upper(),
        )


def load_command_defaults(path: str | Path) -> dict[str, str]:
    """Read a dotenv-format file of flag defaults.

    Keys are flag names in upper case with dashes as underscores
    (``COS_PSI1=0.185``); they are returned lower-cased for click's
    ``default_map``. Empty values are dropped.
    """
    values = dotenv_values(path)
    return {
        key.lower(): value for key, value in values.items() if value not in (None, "")
    }
