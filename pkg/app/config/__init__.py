from .settings import BaseAppSettings, Settings, TestingSettings
from .dependencies import get_settings, load_config_file, build_run_config
from .logging_config import configure_logging

__all__ = [
    "BaseAppSettings",
    "Settings",
    "TestingSettings",
    "get_settings",
    "load_config_file",
    "build_run_config",
    "configure_logging",
]
