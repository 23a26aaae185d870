# settings for state enumeration, batch runs and the result cache
from dataclasses import dataclass, replace
import os
from pathlib import Path
from typing import Optional

import yaml

from aajones.errors import ConfigError

DEFAULT_SETTINGS_FILE = "aajones.yaml"

_ENV_OVERRIDES = {
    "AAJONES_CAP": ("cap", int),
    "AAJONES_WORKERS": ("workers", int),
    "AAJONES_CHUNK_BITS": ("chunk_bits", int),
    "AAJONES_CACHE_DIR": ("cache_dir", str),
    "AAJONES_LOG_DIR": ("log_dir", str),
}


@dataclass
class Settings:
    cap: int = 24
    workers: int = 1
    chunk_bits: int = 16
    cache_dir: Optional[str] = None
    log_dir: Optional[str] = None
    progress: bool = True

    def validate(self) -> "Settings":
        if self.cap < 0:
            raise ConfigError(f"cap must be nonnegative, got {self.cap}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if not 1 <= self.chunk_bits <= 24:
            raise ConfigError(f"chunk_bits must be in 1..24, got {self.chunk_bits}")
        return self


def _coerce(name: str, value, kind):
    if value is None and kind is str:
        return None
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        try:
            return int(str(value))
        except ValueError:
            raise ConfigError(f"{name} must be an integer, got {value!r}")
    if kind is bool and not isinstance(value, bool):
        raise ConfigError(f"{name} must be true or false, got {value!r}")
    return kind(value)


def load_settings(path=None, environ=None) -> Settings:
    """
    Settings from an optional YAML file, then ``AAJONES_*`` environment overrides.

    Without an explicit path, ``aajones.yaml`` in the working directory is read
    when it exists.
    """
    environ = os.environ if environ is None else environ
    settings = Settings()
    types = {"cap": int, "workers": int, "chunk_bits": int, "cache_dir": str, "log_dir": str, "progress": bool}

    config_path = Path(path) if path else Path(DEFAULT_SETTINGS_FILE)
    if path or config_path.exists():
        try:
            with open(config_path) as f:
                data = yaml.safe_load(f) or {}
        except FileNotFoundError:
            raise ConfigError(f"File not found: {config_path}")
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in {config_path}: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"Expected a mapping in {config_path}")
        unknown = sorted(set(data) - set(types))
        if unknown:
            raise ConfigError(f"Unknown settings in {config_path}: {', '.join(unknown)}")
        settings = replace(
            settings, **{k: _coerce(k, v, types[k]) for k, v in data.items()}
        )

    for var, (name, kind) in _ENV_OVERRIDES.items():
        if environ.get(var):
            settings = replace(settings, **{name: _coerce(var, environ[var], kind)})
    return settings.validate()
