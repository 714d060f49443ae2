import nltk
import pytest

from app.exceptions import ConfigurationError, IoFailure
from app.schemas import LevelEnum, NormalizerEnum, ProjectBundle, RequirementDoc
from app.services.normalizers import (
    PorterNormalizer,
    RuleLemmatizer,
    WordNetNormalizer,
    get_normalizer,
)
from app.services.preprocess import (
    TextPreprocessor,
    lemmatize,
    load_stopwords,
    remove_stopwords,
    tokenize,
)
from app.tests.conftest import write_text


def _has_wordnet() -> bool:
    try:
        nltk.data.find("corpora/wordnet")
    except LookupError:
        return False
    return True


requires_wordnet = pytest.mark.skipif(
    not _has_wordnet(), reason="NLTK WordNet data is not installed"
)

@pytest.fixture
def stopwords(test_settings):
    return load_stopwords(test_settings.STOPWORDS_PATH)


class TestTokenize:
    """Test tokenization"""

    def test_lowercase_letters_only(self):
        """Test digits, underscores and punctuation split tokens"""
        assert tokenize("Log-in_now 42x, OK?") == ["log", "in", "now", "ok"]

    def test_min_length(self):
        """Test tokens shorter than the minimum are dropped"""
        assert tokenize("a bb ccc", min_length=3) == ["ccc"]

    def test_unicode_letters(self):
        """Test non-ASCII letters stay inside tokens"""
        assert tokenize("Größe café") == ["größe", "café"]

    def test_empty_text(self):
        """Test text without letters yields nothing"""
        assert tokenize("1234 -- 5.6") == []


class TestStopwords:
    """Test stopword loading and removal"""

    def test_bundled_list(self, stopwords):
        """Test requirement modal verbs are in the bundled list"""
        for word in ("the", "shall", "must", "should"):
            assert word in stopwords

    def test_remove(self, stopwords):
        """Test removal keeps order of remaining tokens"""
        assert remove_stopwords(["the", "user", "shall", "login"], stopwords) == [
            "user",
            "login",
        ]

    def test_remove_idempotent(self, stopwords):
        """Test removing stopwords twice equals removing them once"""
        tokens = tokenize(
            "The system shall not store any of the pages it must archive, "
            "and it should be the crawler that does so"
        )
        once = remove_stopwords(tokens, stopwords)
        assert remove_stopwords(once, stopwords) == once
        assert not set(once) & stopwords.words

    def test_missing_file(self, tmp_path):
        """Test an unreadable stopword file is an I/O failure"""
        with pytest.raises(IoFailure):
            load_stopwords(tmp_path / "none.txt")

    def test_empty_file(self, tmp_path):
        """Test a stopword file without words is a configuration error"""
        path = write_text(tmp_path / "stop.txt", "# nothing\n")
        with pytest.raises(ConfigurationError):
            load_stopwords(path)


class TestLemmatizer:
    """Test the rule lemmatizer"""

    @pytest.mark.parametrize(
        "token, lemma",
        [
            ("users", "user"),
            ("libraries", "library"),
            ("boxes", "box"),
            ("logged", "log"),
            ("installed", "install"),
            ("added", "add"),
            ("running", "run"),
            ("created", "create"),
            ("status", "status"),
            ("was", "be"),
            ("children", "child"),
            ("agreed", "agreed"),
            ("stored", "store"),
            ("storing", "store"),
            ("required", "require"),
            ("captured", "capture"),
            ("archived", "archive"),
            ("saving", "save"),
            ("shared", "share"),
            ("embed", "embed"),
            ("embedded", "embed"),
            ("verified", "verify"),
            ("updated", "update"),
            ("provided", "provide"),
            ("computed", "compute"),
            ("defined", "define"),
            ("used", "use"),
            ("uses", "use"),
            ("deleted", "delete"),
            ("closed", "close"),
            ("managed", "manage"),
            ("timing", "time"),
            ("caching", "cache"),
            ("searched", "search"),
            ("compressed", "compress"),
            ("opened", "open"),
            ("edited", "edit"),
            ("loaded", "load"),
        ],
    )
    def test_lemma(self, token, lemma):
        """Test suffix rules and exceptions"""
        assert RuleLemmatizer().normalize(token) == lemma

    @pytest.mark.parametrize(
        "forms",
        [
            ["store", "stores", "stored", "storing"],
            ["require", "requires", "required", "requiring"],
            ["share", "shared", "sharing"],
            ["capture", "captures", "captured"],
            ["save", "saves", "saved", "saving"],
            ["embed", "embeds", "embedded", "embedding"],
            ["archive", "archives", "archived"],
        ],
    )
    def test_inflections_share_a_term(self, forms):
        """Test a verb and its inflections collapse to one vocabulary term"""
        lemmatizer = RuleLemmatizer()
        assert set(lemmatizer.normalize_all(forms)) == {forms[0]}

    def test_idempotent(self):
        """Test lemmatizing twice equals lemmatizing once"""
        lemmatizer = RuleLemmatizer()
        words = tokenize(
            "Administrators searched the archived pages while crawlers were storing "
            "compressed archives of libraries, boxes and addresses"
        )
        once = lemmatizer.normalize_all(words)
        assert lemmatizer.normalize_all(once) == once

    def test_default_normalizer(self):
        """Test lemmatize falls back to the rule lemmatizer"""
        assert lemmatize(["pages", "verifies"]) == ["page", "verify"]


class TestPorterNormalizer:
    """Test the Porter option"""

    def test_stem(self):
        """Test Porter stemming through the normalizer interface"""
        assert PorterNormalizer().normalize("running") == "run"

    def test_idempotent(self):
        """Test Porter output is a fixed point"""
        porter = get_normalizer(NormalizerEnum.PORTER)
        once = porter.normalize_all(["generalizations", "authentication", "archives"])
        assert porter.normalize_all(once) == once


class TestWordNetNormalizer:
    """Test the WordNet option"""

    @requires_wordnet
    @pytest.mark.parametrize(
        "token, lemma",
        [
            ("stored", "store"),
            ("required", "require"),
            ("embed", "embed"),
            ("embedded", "embed"),
            ("running", "run"),
            ("users", "user"),
            ("children", "child"),
            ("was", "be"),
        ],
    )
    def test_lemma(self, token, lemma):
        """Test WordNet lemmas for verbs and nouns"""
        assert get_normalizer("wordnet").normalize(token) == lemma

    @requires_wordnet
    def test_unknown_word_uses_rules(self):
        """Test a word WordNet lacks goes through the suffix rules"""
        assert WordNetNormalizer().normalize("geocrawlers") == "geocrawler"

    @requires_wordnet
    def test_idempotent(self):
        """Test WordNet output is a fixed point"""
        normalizer = WordNetNormalizer()
        once = normalizer.normalize_all(
            tokenize("Crawlers stored captured pages in embedded archives")
        )
        assert normalizer.normalize_all(once) == once

    def test_missing_data(self, mocker):
        """Test absent WordNet data is a configuration error"""
        wordnet = mocker.patch("app.services.normalizers.wordnet")
        wordnet.synsets.side_effect = LookupError("Resource wordnet not found.")
        with pytest.raises(ConfigurationError) as error:
            get_normalizer(NormalizerEnum.WORDNET)
        assert "nltk.downloader wordnet" in str(error.value)


class TestTextPreprocessor:
    """Test the full preprocessing chain"""

    def test_preprocess(self, stopwords):
        """Test tokenize, stopword removal and lemmatization in order"""
        preprocessor = TextPreprocessor(stopwords)
        assert preprocessor.preprocess("The users shall login with 2 passwords.") == [
            "user",
            "login",
            "password",
        ]

    def test_bundle_keeps_order_and_flags_empty_docs(self, stopwords, caplog):
        """Test bundle preprocessing with an all-stopword requirement"""
        bundle = ProjectBundle(
            high=[
                RequirementDoc(id="H1", level=LevelEnum.HIGH, text="Users log in."),
                RequirementDoc(id="H2", level=LevelEnum.HIGH, text="It shall be so."),
            ],
            low=[RequirementDoc(id="L1", level=LevelEnum.LOW, text="Login pages")],
        )
        with caplog.at_level("WARNING", logger="app"):
            processed = TextPreprocessor(stopwords, workers=3).preprocess_bundle(bundle)

        assert [doc.id for doc in processed.high] == ["H1", "H2"]
        assert processed.high[0].tokens == ["user", "log"]
        assert processed.high[1].tokens == []
        assert processed.low[0].tokens == ["login", "page"]
        assert bundle.high[0].tokens == []
        assert "H2" in caplog.text
