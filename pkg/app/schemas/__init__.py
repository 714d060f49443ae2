from .requirements import LevelEnum, RequirementDoc, AnswerSet, ProjectBundle
from .text import NormalizerEnum, StopwordList
from .vectors import Vocabulary, TfIdfVector, IdfTable
from .links import MethodEnum, CandidateLink, LinkerConfig, WordSimConfig
from .reports import (
    HayesLevelEnum,
    HayesBand,
    HayesBands,
    EvalReport,
    SweepRow,
    MethodSummary,
)
from .run import RunConfig

__all__ = [
    # Requirement schemas
    "LevelEnum",
    "RequirementDoc",
    "AnswerSet",
    "ProjectBundle",
    # Text schemas
    "NormalizerEnum",
    "StopwordList",
    # Vector space schemas
    "Vocabulary",
    "TfIdfVector",
    "IdfTable",
    # Linking schemas
    "MethodEnum",
    "CandidateLink",
    "LinkerConfig",
    "WordSimConfig",
    # Report schemas
    "HayesLevelEnum",
    "HayesBand",
    "HayesBands",
    "EvalReport",
    "SweepRow",
    "MethodSummary",
    # Run schemas
    "RunConfig",
]
