import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import dotenv_values
from pydantic import ValidationError

from app.config.settings import BaseAppSettings, Settings, TestingSettings
from app.exceptions import ConfigurationError, IoFailure
from app.schemas.run import RunConfig

logger = logging.getLogger(__name__)

# config-file / flag key -> RunConfig location
_KEY_ALIASES = {
    "high": "high",
    "low": "low",
    "answers": "answers",
    "embeddings": "embeddings",
    "stopwords": "stopwords",
    "stopwords_path": "stopwords",
    "sim_threshold": "similarity_threshold",
    "similarity_threshold": "similarity_threshold",
    "syn_threshold": "synonym_threshold",
    "synonym_threshold": "synonym_threshold",
    "link_threshold": "link_threshold",
    "method": "method",
    "normalizer": "normalizer",
    "min_token_length": "min_token_length",
    "sweep_step": "sweep_step",
    "workers": "workers",
    "matrix_block_size": "matrix_block_size",
    "float_format": "float_format",
    "out": "out",
}

_WORDSIM_KEYS = {"similarity_threshold", "synonym_threshold"}
_LINKER_KEYS = {"link_threshold", "method"}


@lru_cache()
def get_settings() -> BaseAppSettings:
    if os.getenv("ENVIRONMENT") == "test":
        return TestingSettings()
    return Settings()


def _normalize_key(key: str) -> str:
    return key.strip().lower().replace("-", "_")


def load_config_file(path: Path) -> Dict[str, Any]:
    """
    Read an experiment config file.

    `.yaml` / `.yml` files are parsed with PyYAML, anything else is treated as a
    key=value file. Keys are normalized and mapped onto RunConfig names.

    Raises:
        IoFailure: the file cannot be read.
        ConfigurationError: unknown keys or a non-mapping YAML document.
    """
    path = Path(path)
    try:
        if path.suffix.lower() in {".yaml", ".yml"}:
            with open(path, "r", encoding="utf-8") as f:
                raw = yaml.safe_load(f) or {}
            if not isinstance(raw, dict):
                raise ConfigurationError(f"{path}: expected a mapping at top level")
        else:
            if not path.is_file():
                raise FileNotFoundError(path)
            raw = dotenv_values(path, encoding="utf-8")
    except (OSError, UnicodeDecodeError) as error:
        raise IoFailure(f"Cannot read config file {path}: {error}", stage="config")
    except yaml.YAMLError as error:
        raise ConfigurationError(f"{path}: invalid YAML: {error}")

    values: Dict[str, Any] = {}
    unknown = []
    for key, value in raw.items():
        name = _KEY_ALIASES.get(_normalize_key(str(key)))
        if name is None:
            unknown.append(str(key))
            continue
        values[name] = value
    if unknown:
        raise ConfigurationError(
            f"{path}: unknown config keys {sorted(unknown)}"
        )
    logger.debug("Loaded %d config values from %s", len(values), path)
    return values


def _settings_values(settings: BaseAppSettings) -> Dict[str, Any]:
    return {
        "stopwords": settings.STOPWORDS_PATH,
        "similarity_threshold": settings.SIMILARITY_THRESHOLD,
        "synonym_threshold": settings.SYNONYM_THRESHOLD,
        "link_threshold": settings.LINK_THRESHOLD,
        "method": settings.METHOD,
        "normalizer": settings.NORMALIZER,
        "min_token_length": settings.MIN_TOKEN_LENGTH,
        "sweep_step": settings.SWEEP_STEP,
        "workers": settings.WORKERS,
        "matrix_block_size": settings.MATRIX_BLOCK_SIZE,
        "float_format": settings.FLOAT_FORMAT,
    }


def build_run_config(
    settings: BaseAppSettings,
    config_file: Optional[Path] = None,
    **flags: Any,
) -> RunConfig:
    """
    Merge defaults, environment, config file and flags into a RunConfig.

    Precedence: explicit flag > config file > environment/.env > default.
    Flags passed as None are treated as "not given".
    """
    values = _settings_values(settings)
    if config_file is not None:
        values.update(load_config_file(config_file))

    for key, value in flags.items():
        name = _KEY_ALIASES.get(_normalize_key(key))
        if name is None:
            raise ConfigurationError(f"Unknown option {key!r}")
        if value is not None:
            values[name] = value

    payload = {
        key: value
        for key, value in values.items()
        if key not in _WORDSIM_KEYS | _LINKER_KEYS
    }
    payload["wordsim"] = {key: values[key] for key in _WORDSIM_KEYS if key in values}
    payload["linker"] = {key: values[key] for key in _LINKER_KEYS if key in values}

    try:
        return RunConfig.model_validate(payload)
    except ValidationError as error:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in item['loc'])}: {item['msg']}"
            for item in error.errors()
        )
        raise ConfigurationError(f"Invalid run configuration: {problems}")
