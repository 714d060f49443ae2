from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

from app.schemas.links import MethodEnum
from app.schemas.text import NormalizerEnum


class BaseAppSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="TRACE_", env_file=".env", extra="ignore"
    )

    BASE_DIR: Path = Path(__file__).parent.parent
    STOPWORDS_PATH: Path = BASE_DIR / "resources" / "stopwords_en.txt"

    # Preprocessing
    NORMALIZER: NormalizerEnum = NormalizerEnum.LEMMA
    MIN_TOKEN_LENGTH: int = 2

    # Word-similarity matrix
    SIMILARITY_THRESHOLD: float = 0.5
    SYNONYM_THRESHOLD: float = 1.0
    MATRIX_BLOCK_SIZE: int = 512

    # Linking
    LINK_THRESHOLD: float = 0.3
    METHOD: MethodEnum = MethodEnum.ENHANCED
    SWEEP_STEP: float = 0.01

    WORKERS: int = 4
    LOG_LEVEL: str = "INFO"
    FLOAT_FORMAT: str = "%.6f"


class Settings(BaseAppSettings):
    pass


class TestingSettings(BaseAppSettings):
    WORKERS: int = 2
    MATRIX_BLOCK_SIZE: int = 8
    LOG_LEVEL: str = "WARNING"
