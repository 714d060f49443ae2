import logging
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from app.exceptions import (
    DuplicateIdError,
    EmptyInputError,
    IoFailure,
    MalformedLinkError,
    MalformedRecordError,
)
from app.schemas.requirements import AnswerSet, LevelEnum, ProjectBundle, RequirementDoc

logger = logging.getLogger(__name__)


def _content_lines(path: Path, stage: str = "corpus") -> Iterator[Tuple[int, str]]:
    """(line number, line) for every non-blank, non-comment line."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            # Only newlines end a record; form feeds and U+2028 stay in the text.
            lines = f.read().split("\n")
    except (OSError, UnicodeDecodeError) as error:
        raise IoFailure(f"Cannot read {path}: {error}", stage=stage)
    for line_no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield line_no, line


def load_requirements(path: Path, level: LevelEnum) -> List[RequirementDoc]:
    """
    Read `ID<TAB>text` lines into requirement documents, in file order.

    Raises:
        IoFailure: the file cannot be read as UTF-8.
        MalformedRecordError: a line has no tab separator, an empty id or empty text.
        DuplicateIdError: an id occurs twice.
        EmptyInputError: the file holds no records.
    """
    level = LevelEnum(level)
    docs: List[RequirementDoc] = []
    seen = set()
    for line_no, line in _content_lines(path):
        if "\t" not in line:
            raise MalformedRecordError(f"{path}:{line_no}: missing TAB separator")
        doc_id, text = line.split("\t", 1)
        doc_id = doc_id.strip()
        if not doc_id:
            raise MalformedRecordError(f"{path}:{line_no}: empty requirement id")
        if not text.strip():
            raise MalformedRecordError(f"{path}:{line_no}: requirement {doc_id!r} has no text")
        if doc_id in seen:
            raise DuplicateIdError(f"{path}:{line_no}: duplicate id {doc_id!r}")
        seen.add(doc_id)
        docs.append(RequirementDoc(id=doc_id, level=level, text=text))

    if not docs:
        raise EmptyInputError(f"{path}: no requirements found")
    logger.debug("Loaded %d %s-level requirements from %s", len(docs), level.value, path)
    return docs


def load_answer_set(path: Path) -> AnswerSet:
    """
    Read whitespace separated `HLR_ID LLR_ID` lines; duplicates collapse, extra
    columns are ignored.

    Raises:
        IoFailure: the file cannot be read.
        MalformedLinkError: a content line has fewer than two fields.
    """
    links = set()
    for line_no, line in _content_lines(path):
        fields = line.split()
        if len(fields) < 2:
            raise MalformedLinkError(f"{path}:{line_no}: expected 'HLR_ID LLR_ID'")
        links.add((fields[0], fields[1]))
    logger.debug("Loaded %d gold links from %s", len(links), path)
    return AnswerSet(links=frozenset(links))


def load_bundle(
    high: Path, low: Path, answers: Optional[Path] = None
) -> ProjectBundle:
    bundle = ProjectBundle(
        high=load_requirements(high, LevelEnum.HIGH),
        low=load_requirements(low, LevelEnum.LOW),
        answers=load_answer_set(answers) if answers is not None else None,
    )
    logger.info(
        "Loaded %d HLR, %d LLR%s",
        len(bundle.high),
        len(bundle.low),
        f", {len(bundle.answers)} gold links" if bundle.answers is not None else "",
    )
    return bundle


def dump_requirements(docs: List[RequirementDoc], path: Path) -> None:
    """Write documents in the canonical `ID<TAB>text` format."""
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for doc in docs:
                f.write(f"{doc.id}\t{doc.text}\n")
    except OSError as error:
        raise IoFailure(f"Cannot write {path}: {error}", stage="corpus")


def dump_answer_set(answers: AnswerSet, path: Path) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for hlr_id, llr_id in answers:
                f.write(f"{hlr_id} {llr_id}\n")
    except OSError as error:
        raise IoFailure(f"Cannot write {path}: {error}", stage="corpus")


def dump_bundle(bundle: ProjectBundle, directory: Path) -> Tuple[Path, Path, Optional[Path]]:
    """Write `high.txt`, `low.txt` and, when present, `answers.txt` into `directory`."""
    directory = Path(directory)
    high, low = directory / "high.txt", directory / "low.txt"
    dump_requirements(bundle.high, high)
    dump_requirements(bundle.low, low)
    answers = None
    if bundle.answers is not None:
        answers = directory / "answers.txt"
        dump_answer_set(bundle.answers, answers)
    return high, low, answers
