"""
Solver settings.

Defaults live in ``config/solver_settings.json``; ``MAHLERSOL_*`` environment
variables (read after ``load_dotenv()``) override them.
"""

import json
import logging
import os
import threading
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_PATH = Path(__file__).parent.parent / "config" / "solver_settings.json"

ENV_OVERRIDES = {
    "MAHLERSOL_MEMORY_BUDGET": "memory_budget",
    "MAHLERSOL_GREEDY_MAX_STEPS": "greedy_max_steps",
    "MAHLERSOL_CROSS_CHECK": "cross_check_maps",
    "MAHLERSOL_EPSILON_TRACE": "epsilon_trace",
    "MAHLERSOL_LOG_LEVEL": "log_level",
}


class SolverSettings(BaseModel):
    settings_name: str = "defaults"
    version: str = "1.0"
    memory_budget: int = Field(default=10_000_000, ge=1)
    greedy_max_steps: int = Field(default=100_000, ge=1)
    cross_check_maps: bool = False
    epsilon_trace: bool = False
    log_level: str = Field(default="WARNING", description="Name of a logging level")


_settings: Optional[SolverSettings] = None
_lock = threading.Lock()


def _read_settings_file(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise FileNotFoundError(f"Settings file not found: {path}")
    with open(path, "r") as f:
        return json.load(f)


def load_settings(path: Optional[str] = None) -> SolverSettings:
    """
    Build settings from the JSON file and the environment.

    Args:
        path: Explicit settings file. When omitted the bundled defaults are
            used if present, otherwise the model defaults.
    """
    load_dotenv()
    if path is not None:
        raw = _read_settings_file(Path(path))
    elif DEFAULT_SETTINGS_PATH.exists():
        raw = _read_settings_file(DEFAULT_SETTINGS_PATH)
    else:
        raw = {}

    for env_name, field_name in ENV_OVERRIDES.items():
        value = os.getenv(env_name)
        if value is not None:
            raw[field_name] = value

    settings = SolverSettings.model_validate(raw)
    logger.debug("Loaded settings %s v%s", settings.settings_name, settings.version)
    return settings


def get_settings() -> SolverSettings:
    """Process-wide settings, loaded once."""
    global _settings
    with _lock:
        if _settings is None:
            _settings = load_settings()
        return _settings


def reset_settings() -> None:
    """Forget cached settings (tests change the environment)."""
    global _settings
    with _lock:
        _settings = None
