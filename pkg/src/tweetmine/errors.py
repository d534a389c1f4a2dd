"""Exception types shared across the pipeline.

``DataError`` marks data/validation failures; the CLI maps it to exit
code 2. Usage and I/O problems (``UsageError``, ``OSError``) map to 1.
"""


class TweetmineError(Exception):
    """Base class for all package-specific errors."""


class UsageError(TweetmineError):
    """Bad command-line usage or unresolvable configuration."""


class DataError(TweetmineError):
    """Invalid or inconsistent input data."""


class CorpusFormatError(DataError):
    """A corpus file violates its documented format contract."""


class DuplicateTweetIdError(CorpusFormatError):
    """Two records in one corpus file share an id."""


class EmptyCorpusError(DataError):
    """An operation that needs tweets received none."""


class EmptyVocabularyError(DataError):
    """Vocabulary pruning removed every term."""


class LexiconFormatError(DataError):
    """An emotion lexicon file violates the 3-column format."""


class DegenerateNmiError(DataError):
    """NMI requested for two single-cluster partitions (0/0)."""
