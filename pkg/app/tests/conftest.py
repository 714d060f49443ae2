import logging
import os

os.environ["ENVIRONMENT"] = "test"

from pathlib import Path
from types import SimpleNamespace

import numpy as np
import pytest
from typer.testing import CliRunner

from app.config.dependencies import get_settings
from app.main import app
from app.schemas import LevelEnum, ProjectBundle, RequirementDoc
from app.services.vectorize import CorpusVectors

HIGH_TEXT = (
    "# high-level requirements\n"
    "H1\tThe system shall authenticate users with a password.\n"
    "H2\tThe crawler must store captured pages in compressed archives.\n"
    "H3\tAdministrators shall search archived pages by address.\n"
)

LOW_TEXT = (
    "L1\tLogin screen verifies the user password.\n"
    "L2\tCrawler writes each captured page to a compressed archive file.\n"
    "\n"
    "L3\tSearch index maps every address to stored pages.\n"
    "L4\tScheduler rotates log files nightly.\n"
)

ANSWERS_TEXT = "H1 L1\nH2 L2\nH3 L3\n"

EMBEDDINGS_TEXT = (
    "13 3\n"
    "authenticate 0.9 0.1 0.0\n"
    "login 0.85 0.2 0.0\n"
    "verify 0.7 0.3 0.1\n"
    "password 0.6 0.2 0.2\n"
    "user 0.5 0.1 0.4\n"
    "archive 0.0 0.9 0.2\n"
    "store 0.1 0.8 0.1\n"
    "crawler 0.1 0.6 0.5\n"
    "search 0.2 0.1 0.9\n"
    "index 0.25 0.15 0.85\n"
    "address 0.1 0.2 0.8\n"
    "nightly 0.0 0.0 0.0\n"
    "football 0.3 0.3 0.3\n"
)

# Gold pairs share no term, only synonyms from the pinned vectors in data/.
SYNONYM_HIGH_TEXT = (
    "H1\tUsers authenticate with a password.\n"
    "H2\tCrawler archives web pages.\n"
)
SYNONYM_LOW_TEXT = (
    "L1\tLogin screen checks credentials.\n"
    "L2\tSpider stores site snapshots.\n"
)
SYNONYM_ANSWERS_TEXT = "H1 L1\nH2 L2\n"
SYNONYM_VECTORS = Path(__file__).parent / "data" / "synonym_vectors.txt"

# Three documents without a shared term: use/authentication, add/login, play/football.
LOGIN_DOCS = [["use", "authentication"], ["add", "login"], ["play", "football"]]


def write_text(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


# ============================================================================
# PYTEST CONFIGURATION
# ============================================================================


@pytest.fixture(autouse=True)
def test_settings():
    """Fresh TestingSettings for every test"""
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()


@pytest.fixture(autouse=True)
def reset_logging():
    """Undo handlers the CLI callback installs so caplog sees app records"""
    yield
    logger = logging.getLogger("app")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for property tests"""
    return np.random.default_rng(20240517)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def cli(runner):
    """Invoke the CLI app with string arguments"""

    def invoke(*args):
        return runner.invoke(app, [str(arg) for arg in args])

    return invoke


# ============================================================================
# DATASETS
# ============================================================================


@pytest.fixture
def dataset(tmp_path) -> SimpleNamespace:
    """Small web-archive style project written to disk"""
    return SimpleNamespace(
        dir=tmp_path,
        high=write_text(tmp_path / "high.txt", HIGH_TEXT),
        low=write_text(tmp_path / "low.txt", LOW_TEXT),
        answers=write_text(tmp_path / "answers.txt", ANSWERS_TEXT),
        embeddings=write_text(tmp_path / "vectors.txt", EMBEDDINGS_TEXT),
    )


@pytest.fixture
def dataset_args(dataset) -> list:
    """Input flags for the on-disk dataset"""
    return [
        "--high",
        dataset.high,
        "--low",
        dataset.low,
        "--answers",
        dataset.answers,
        "--embeddings",
        dataset.embeddings,
    ]


@pytest.fixture
def synonym_args(tmp_path) -> list:
    """Input flags for a project that only embeddings can link"""
    return [
        "--high",
        write_text(tmp_path / "syn-high.txt", SYNONYM_HIGH_TEXT),
        "--low",
        write_text(tmp_path / "syn-low.txt", SYNONYM_LOW_TEXT),
        "--answers",
        write_text(tmp_path / "syn-answers.txt", SYNONYM_ANSWERS_TEXT),
        "--embeddings",
        SYNONYM_VECTORS,
    ]


@pytest.fixture
def login_bundle() -> ProjectBundle:
    """Login corpus: one HLR and two LLRs with no overlapping terms"""
    (doc1, doc2, doc3) = LOGIN_DOCS
    return ProjectBundle(
        high=[
            RequirementDoc(
                id="Doc1", level=LevelEnum.HIGH, text=" ".join(doc1), tokens=doc1
            )
        ],
        low=[
            RequirementDoc(
                id="Doc2", level=LevelEnum.LOW, text=" ".join(doc2), tokens=doc2
            ),
            RequirementDoc(
                id="Doc3", level=LevelEnum.LOW, text=" ".join(doc3), tokens=doc3
            ),
        ],
    )


@pytest.fixture
def login_vectors(login_bundle) -> CorpusVectors:
    return CorpusVectors(login_bundle)
