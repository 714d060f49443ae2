import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from app.datasets import load_bundle
from app.exceptions import ConfigurationError, EmptyAnswerSetError
from app.schemas.links import CandidateLink, LinkerConfig, MethodEnum, WordSimConfig
from app.schemas.reports import MethodSummary
from app.schemas.requirements import ProjectBundle
from app.schemas.run import RunConfig
from .embeddings import EmbeddingTable, load_embeddings, oov_rate
from .evalkit import best_by_f2, check_answer_ids
from .linker import default_grid, score_all, sweep
from .preprocess import TextPreprocessor, load_stopwords
from .vectorize import CorpusVectors
from .wordsim import WordSimilarityMatrix, build_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreparedCorpus:
    bundle: ProjectBundle
    vectors: CorpusVectors
    table: Optional[EmbeddingTable]

    @property
    def oov_rate(self) -> float:
        return oov_rate(self.vectors.vocab.terms, self.table)


class TracePipeline:
    """
    corpus -> preprocess -> vectorize -> embeddings -> wordsim -> linker.

    Stages that do not depend on the word-similarity hyper-parameters run once
    and are reused by every later `matrix` / `score` call.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self._prepared: Optional[PreparedCorpus] = None
        self._matrices: Dict[Tuple[float, float], WordSimilarityMatrix] = {}

    def prepare(self, require_embeddings: Optional[bool] = None) -> PreparedCorpus:
        if self._prepared is not None:
            return self._prepared

        cfg = self.config
        if cfg.high is None or cfg.low is None:
            raise ConfigurationError("Both --high and --low requirement files are required")
        if require_embeddings is None:
            require_embeddings = cfg.linker.method is MethodEnum.ENHANCED
        if require_embeddings and cfg.embeddings is None:
            raise ConfigurationError("--embeddings is required for the enhanced method")

        bundle = load_bundle(cfg.high, cfg.low, cfg.answers)
        bundle.require_traceable()
        if bundle.answers is not None:
            check_answer_ids(bundle.answers, bundle)

        preprocessor = TextPreprocessor(
            load_stopwords(cfg.stopwords),
            normalizer=cfg.normalizer,
            min_token_length=cfg.min_token_length,
            workers=cfg.workers,
        )
        bundle = preprocessor.preprocess_bundle(bundle)
        vectors = CorpusVectors(bundle)

        table = None
        if cfg.embeddings is not None:
            table = load_embeddings(cfg.embeddings, vocab_filter=vectors.vocab)

        self._prepared = PreparedCorpus(bundle=bundle, vectors=vectors, table=table)
        logger.info("OOV rate: %.1f%%", 100 * self._prepared.oov_rate)
        return self._prepared

    def matrix(self, wordsim: Optional[WordSimConfig] = None) -> WordSimilarityMatrix:
        wordsim = wordsim or self.config.wordsim
        key = (wordsim.similarity_threshold, wordsim.synonym_threshold)
        if key in self._matrices:
            return self._matrices[key]

        prepared = self.prepare(require_embeddings=True)
        if prepared.table is None:
            raise ConfigurationError("--embeddings is required to build a similarity matrix")
        matrix = build_matrix(
            prepared.vectors.vocab,
            prepared.table,
            wordsim,
            workers=self.config.workers,
            block_size=self.config.matrix_block_size,
        )
        self._matrices[key] = matrix
        return matrix

    def score(
        self,
        method: Optional[MethodEnum] = None,
        wordsim: Optional[WordSimConfig] = None,
    ) -> List[CandidateLink]:
        method = method or self.config.linker.method
        prepared = self.prepare(require_embeddings=method is MethodEnum.ENHANCED)
        matrix = self.matrix(wordsim) if method is MethodEnum.ENHANCED else None
        return score_all(
            prepared.bundle,
            prepared.vectors,
            matrix,
            LinkerConfig(
                link_threshold=self.config.linker.link_threshold, method=method
            ),
            workers=self.config.workers,
        )

    def summarize(
        self,
        method: MethodEnum,
        wordsim: Optional[WordSimConfig] = None,
        thresholds: Optional[Sequence[float]] = None,
    ) -> MethodSummary:
        """Sweep one configuration and keep its best-F2 operating point."""
        prepared = self.prepare(require_embeddings=method is MethodEnum.ENHANCED)
        if prepared.bundle.answers is None:
            raise EmptyAnswerSetError("An answer set (--answers) is required to sweep")
        wordsim = wordsim or self.config.wordsim
        scored = self.score(method, wordsim)
        curve = sweep(
            scored,
            prepared.bundle.answers,
            thresholds or default_grid(self.config.sweep_step),
        )
        enhanced = method is MethodEnum.ENHANCED
        return MethodSummary(
            method=method.value,
            similarity_threshold=wordsim.similarity_threshold if enhanced else None,
            synonym_threshold=wordsim.synonym_threshold if enhanced else None,
            best=best_by_f2(curve),
            curve=curve,
        )
