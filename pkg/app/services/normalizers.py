import re
from typing import Dict, Optional

from nltk.corpus import wordnet
from nltk.stem import PorterStemmer, WordNetLemmatizer

from app.exceptions import ConfigurationError
from app.schemas.text import NormalizerEnum
from .interfaces import TokenNormalizerInterface

_VOWEL = re.compile(r"[aeiouy]")

# Stems left by -ed / -ing that lost a final "e": stor(e), requir(e), archiv(e), ...
_SILENT_E = re.compile(
    r"(?:[^aeiou]at|bl|iz|yz|uir|dg|v|c|let|ag|ang|rg"
    r"|[^aeiou][ui]r|[^aeiou]ut|[^aeiou]in|[^aeiou][aiou]d|[^aeiou]ok"
    r"|[aeiou]{2}s|[nrpl]s)$"
)
# One vowel between consonants, as in stor, shar, tim, cod.
_SHORT_CVC = re.compile(r"^[^aeiouy]*[aeiouy][^aeiouywx]$")

# Irregular and protected forms. Every value is itself a fixed point of the rules.
_EXCEPTIONS: Dict[str, str] = {
    "being": "be",
    "doing": "do",
    "going": "go",
    "seeing": "see",
    "was": "be",
    "were": "be",
    "is": "be",
    "are": "be",
    "has": "have",
    "had": "have",
    "does": "do",
    "did": "do",
    "done": "do",
    "made": "make",
    "built": "build",
    "sent": "send",
    "kept": "keep",
    "ran": "run",
    "wrote": "write",
    "written": "write",
    "given": "give",
    "taken": "take",
    "chosen": "choose",
    "shown": "show",
    "children": "child",
    "people": "person",
    "criteria": "criterion",
    "indices": "index",
    "data": "data",
    "media": "media",
    "news": "news",
    "series": "series",
    "species": "species",
    "during": "during",
    "thing": "thing",
    "nothing": "nothing",
    "something": "something",
    "anything": "anything",
    "everything": "everything",
    "string": "string",
    "morning": "morning",
    "evening": "evening",
    "ceiling": "ceiling",
    "embed": "embed",
    "hundred": "hundred",
    "created": "create",
    "creating": "create",
    "guided": "guide",
    "guiding": "guide",
    "routed": "route",
    "routing": "route",
    "synced": "sync",
    "syncing": "sync",
    "caches": "cache",
    "cached": "cache",
    "caching": "cache",
}


class RuleLemmatizer(TokenNormalizerInterface):
    """
    Suffix lemmatizer: plural stripping and -ing / -ed reduction with an exception list.
    """

    name = NormalizerEnum.LEMMA.value

    def __init__(self, exceptions: Optional[Dict[str, str]] = None):
        self._exceptions = dict(_EXCEPTIONS if exceptions is None else exceptions)

    def step(self, token: str) -> str:
        if token in self._exceptions:
            return self._exceptions[token]
        if len(token) <= 3:
            return token

        if token.endswith(("ies", "ied")) and len(token) > 4:
            return token[:-3] + "y"
        if token.endswith(("sses", "xes", "zzes", "ches", "shes")):
            return token[:-2]
        if token.endswith("s") and not token.endswith(("ss", "us", "is", "ous")):
            return token[:-1]

        if token.endswith("eed"):
            return token
        if token.endswith("ing"):
            return self._restore(token[:-3], token)
        if token.endswith("ed"):
            return self._restore(token[:-2], token)
        return token

    @staticmethod
    def _restore(stem: str, token: str) -> str:
        if not _VOWEL.search(stem):
            return token
        # logged -> log, embedded -> embed, but installed -> install and added -> add
        if (
            len(stem) >= 4
            and stem[-1] == stem[-2]
            and stem[-1] not in "aeiouylsz"
        ):
            return stem[:-1]
        if len(stem) <= 2 or _SILENT_E.search(stem) or _SHORT_CVC.match(stem):
            return stem + "e"
        return stem


class PorterNormalizer(TokenNormalizerInterface):
    """Porter stemmer from NLTK, iterated to a fixed point."""

    name = NormalizerEnum.PORTER.value

    def __init__(self):
        self._stemmer = PorterStemmer()

    def step(self, token: str) -> str:
        return self._stemmer.stem(token)


class WordNetNormalizer(TokenNormalizerInterface):
    """
    NLTK WordNet lemmas, trying the verb reading before the noun reading.
    Words WordNet does not know go through the rule lemmatizer.
    """

    name = NormalizerEnum.WORDNET.value

    def __init__(self):
        try:
            # Load the lazy corpus before worker threads touch it.
            wordnet.synsets("requirement")
        except LookupError:
            raise ConfigurationError(
                "WordNet data is not installed; run `python -m nltk.downloader wordnet`"
            )
        self._lemmatizer = WordNetLemmatizer()
        self._fallback = RuleLemmatizer()

    def step(self, token: str) -> str:
        if token in _EXCEPTIONS:
            return _EXCEPTIONS[token]
        for pos in ("v", "n"):
            lemma = self._lemmatizer.lemmatize(token, pos)
            if lemma != token:
                return lemma
        if wordnet.synsets(token):
            return token
        return self._fallback.step(token)


def get_normalizer(kind: NormalizerEnum | str) -> TokenNormalizerInterface:
    kind = NormalizerEnum(kind)
    if kind is NormalizerEnum.PORTER:
        return PorterNormalizer()
    if kind is NormalizerEnum.WORDNET:
        return WordNetNormalizer()
    return RuleLemmatizer()
