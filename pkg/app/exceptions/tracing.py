class TraceabilityError(Exception):
    """Base class for all trace-link pipeline errors."""

    stage = "pipeline"
    exit_code = 2

    def __init__(self, message=None):
        if message is None:
            message = "A traceability pipeline error occurred."
        super().__init__(message)


class DataError(TraceabilityError):
    """Raised when input data violates a format or invariant."""

    def __init__(self, message="Invalid input data."):
        super().__init__(message)


class IoFailure(TraceabilityError):
    """Raised when a file cannot be opened, read, decoded or written."""

    exit_code = 3

    def __init__(self, message="I/O failure.", stage: str = "io"):
        super().__init__(message)
        self.stage = stage


class ConfigurationError(TraceabilityError):
    """Raised when settings, a config file or flag values are invalid."""

    stage = "config"
    exit_code = 1

    def __init__(self, message="Invalid configuration."):
        super().__init__(message)


# ============================================================================
# CORPUS
# ============================================================================


class MalformedRecordError(DataError):
    """Raised when a requirement or embedding record cannot be parsed."""

    stage = "corpus"

    def __init__(self, message="Malformed record.", stage: str | None = None):
        super().__init__(message)
        if stage is not None:
            self.stage = stage


class DuplicateIdError(DataError):
    """Raised when two requirements of one level share an id."""

    stage = "corpus"

    def __init__(self, message="Duplicate requirement id."):
        super().__init__(message)


class EmptyInputError(DataError):
    """Raised when an input file holds no records."""

    stage = "corpus"

    def __init__(self, message="Input contains no records.", stage: str | None = None):
        super().__init__(message)
        if stage is not None:
            self.stage = stage


class MalformedLinkError(DataError):
    """Raised when an answer or links line has fewer than two fields."""

    stage = "corpus"

    def __init__(self, message="Malformed link line."):
        super().__init__(message)


# ============================================================================
# VECTOR SPACE / EMBEDDINGS / MATRIX
# ============================================================================


class EmptyCorpusError(DataError):
    """Raised when no document holds a single token."""

    stage = "vectorize"

    def __init__(self, message="Corpus has no tokens to build a vocabulary from."):
        super().__init__(message)


class DimensionMismatchError(DataError):
    """Raised when vector or matrix dimensions disagree."""

    stage = "embeddings"

    def __init__(self, message="Dimension mismatch.", stage: str | None = None):
        super().__init__(message)
        if stage is not None:
            self.stage = stage


class InvalidMatrixError(DataError):
    """Raised when a word-similarity matrix breaks its value range."""

    stage = "wordsim"

    def __init__(self, message="Invalid word-similarity matrix."):
        super().__init__(message)


class IndexOutOfRangeError(DataError, IndexError):
    """Raised when a matrix row index is outside the vocabulary."""

    stage = "wordsim"

    def __init__(self, message="Row index out of range."):
        super().__init__(message)


class UnknownTermError(DataError):
    """Raised when an inspected term is not in the vocabulary."""

    stage = "wordsim"

    def __init__(self, message="Term is not in the vocabulary."):
        super().__init__(message)


# ============================================================================
# LINKING / EVALUATION
# ============================================================================


class MissingVectorError(DataError):
    """Raised when a requirement has no vector at scoring time."""

    stage = "linker"

    def __init__(self, message="Requirement has no vector."):
        super().__init__(message)


class EmptyAnswerSetError(DataError):
    """Raised when an evaluation is requested against no gold links."""

    stage = "evalkit"

    def __init__(self, message="Answer set is empty."):
        super().__init__(message)


class UnresolvedLinkError(DataError):
    """Raised when a gold link references an id absent from the requirement sets."""

    stage = "evalkit"

    def __init__(self, message="Answer set references unknown requirement ids."):
        super().__init__(message)
