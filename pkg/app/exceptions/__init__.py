from .tracing import (
    TraceabilityError,
    DataError,
    IoFailure,
    ConfigurationError,
    MalformedRecordError,
    DuplicateIdError,
    EmptyInputError,
    MalformedLinkError,
    EmptyCorpusError,
    DimensionMismatchError,
    InvalidMatrixError,
    IndexOutOfRangeError,
    UnknownTermError,
    MissingVectorError,
    EmptyAnswerSetError,
    UnresolvedLinkError,
)

__all__ = [
    "TraceabilityError",
    "DataError",
    "IoFailure",
    "ConfigurationError",
    "MalformedRecordError",
    "DuplicateIdError",
    "EmptyInputError",
    "MalformedLinkError",
    "EmptyCorpusError",
    "DimensionMismatchError",
    "InvalidMatrixError",
    "IndexOutOfRangeError",
    "UnknownTermError",
    "MissingVectorError",
    "EmptyAnswerSetError",
    "UnresolvedLinkError",
]
