from typing import Iterable, Sequence, Tuple

from app.exceptions import EmptyAnswerSetError, UnresolvedLinkError
from app.schemas.links import CandidateLink
from app.schemas.reports import EvalReport, HayesBands, HayesLevelEnum, SweepRow
from app.schemas.requirements import AnswerSet, ProjectBundle


DEFAULT_HAYES_BANDS = HayesBands()


def _pairs(links: Iterable[CandidateLink | Tuple[str, str]]) -> set:
    return {
        link.pair if isinstance(link, CandidateLink) else tuple(link) for link in links
    }


def confusion(
    links: Iterable[CandidateLink | Tuple[str, str]], answers: AnswerSet
) -> Tuple[int, int, int]:
    """(TP, FP, FN) with set semantics on (hlr_id, llr_id) pairs."""
    retrieved = _pairs(links)
    gold = set(answers.links)
    return (
        len(retrieved & gold),
        len(retrieved - gold),
        len(gold - retrieved),
    )


def f_beta(precision: float, recall: float, beta: float) -> float:
    """Weighted harmonic mean; 0 when both inputs are 0."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    beta_sq = beta * beta
    denominator = beta_sq * precision + recall
    if denominator == 0:
        return 0.0
    return min(1.0, (1 + beta_sq) * precision * recall / denominator)


def hayes_level(
    recall: float, precision: float, bands: HayesBands = DEFAULT_HAYES_BANDS
) -> HayesLevelEnum:
    """Highest band whose recall and precision minima are both met."""
    for band in bands.bands:
        if recall >= band.min_recall and precision >= band.min_precision:
            return band.level
    return HayesLevelEnum.UNACCEPTABLE


def report_from_counts(
    tp: int, fp: int, fn: int, bands: HayesBands = DEFAULT_HAYES_BANDS
) -> EvalReport:
    if tp + fn == 0:
        raise EmptyAnswerSetError()
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn)
    return EvalReport(
        true_positives=tp,
        false_positives=fp,
        false_negatives=fn,
        precision=precision,
        recall=recall,
        f1=f_beta(precision, recall, 1.0),
        f2=f_beta(precision, recall, 2.0),
        hayes_level=hayes_level(recall, precision, bands),
    )


def evaluate(
    links: Iterable[CandidateLink | Tuple[str, str]],
    answers: AnswerSet,
    bands: HayesBands = DEFAULT_HAYES_BANDS,
) -> EvalReport:
    """
    Score retrieved links against the gold answer set.

    Precision is 0 when nothing is retrieved.

    Raises:
        EmptyAnswerSetError: the answer set has no links.
    """
    if not len(answers):
        raise EmptyAnswerSetError()
    tp, fp, fn = confusion(links, answers)
    return report_from_counts(tp, fp, fn, bands)


def check_answer_ids(answers: AnswerSet, bundle: ProjectBundle) -> None:
    """
    Every gold link must reference a loaded HLR and a loaded LLR.

    Raises:
        UnresolvedLinkError: listing up to ten offending pairs.
    """
    high = {doc.id for doc in bundle.high}
    low = {doc.id for doc in bundle.low}
    unresolved = [
        pair for pair in answers if pair[0] not in high or pair[1] not in low
    ]
    if unresolved:
        shown = ", ".join(f"{h}->{l}" for h, l in unresolved[:10])
        raise UnresolvedLinkError(
            f"{len(unresolved)} answer link(s) reference unknown ids: {shown}"
        )


def best_by_f2(rows: Sequence[SweepRow]) -> SweepRow:
    """Row with the highest F2; the earliest (lowest threshold) wins ties."""
    if not rows:
        raise ValueError("No rows to choose from")
    best = rows[0]
    for row in rows[1:]:
        if row.f2 > best.f2:
            best = row
    return best
