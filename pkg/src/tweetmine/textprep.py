"""Tweet text normalization and tokenization.

Stage order is fixed: emoticon mapping runs first (before punctuation
stripping destroys the emoticons), then lowercasing, URL/mention/hashtag
removal, repeated-letter collapsing, punctuation/digit removal,
stopword removal, and Porter stemming. Every stage is a pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DataError
from .porter import porter_stem

POSITIVE_SENTINEL = "positive_emoticon"
NEGATIVE_SENTINEL = "negative_emoticon"
_SENTINELS = (POSITIVE_SENTINEL, NEGATIVE_SENTINEL)

_URL_RE = re.compile(r"(?:https?://|www\.)\S*")
_MENTION_RE = re.compile(r"@\w+")
_HASHTAG_RE = re.compile(r"#(\w+)")
_REPEAT_RE = re.compile(r"([a-zA-Z])\1{2,}")


@dataclass(frozen=True)
class PipelineConfig:
    """Independent on/off switches for each preprocessing stage."""

    strip_urls: bool = True
    strip_mentions: bool = True
    strip_hashtags: bool = True
    keep_hashtag_word: bool = False  # '#tag' -> 'tag' instead of dropping it
    collapse_repeats: bool = True
    map_emoticons: bool = True
    remove_stopwords: bool = True
    stem: bool = True
    lowercase: bool = True


def load_emoticon_table(path: str | Path) -> dict[str, str]:
    """Read a tab-separated emoticon table; values must be the two sentinels."""
    table: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataError(f"{path}: line {lineno}: expected 'emoticon<TAB>sentinel'")
        emoticon, sentinel = parts
        if sentinel not in _SENTINELS:
            raise DataError(f"{path}: line {lineno}: unknown sentinel {sentinel!r}")
        table[emoticon] = sentinel
    return table


def load_stoplist(path: str | Path) -> frozenset[str]:
    """Read a stopword list, one lowercase term per line."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if word and not word.startswith("#"):
            words.add(word.lower())
    return frozenset(words)


def default_emoticon_table() -> dict[str, str]:
    with resources.as_file(resources.files("tweetmine").joinpath("data/emoticons.txt")) as p:
        return load_emoticon_table(p)


def default_stoplist() -> frozenset[str]:
    with resources.as_file(resources.files("tweetmine").joinpath("data/stopwords_en.txt")) as p:
        return load_stoplist(p)


def map_emoticons(text: str, table: dict[str, str]) -> str:
    """Replace whitespace-delimited tokens that exactly match a table key."""
    return " ".join(table.get(tok, tok) for tok in text.split())


def normalize(text: str, cfg: PipelineConfig = PipelineConfig()) -> str:
    """Apply the character-level cleanup stages in their fixed order."""
    if cfg.lowercase:
        text = text.lower()
    if cfg.strip_urls:
        text = _URL_RE.sub(" ", text)
    if cfg.strip_mentions:
        text = _MENTION_RE.sub(" ", text)
    if cfg.strip_hashtags:
        text = _HASHTAG_RE.sub(r"\1" if cfg.keep_hashtag_word else " ", text)
    if cfg.collapse_repeats:
        text = _REPEAT_RE.sub(r"\1\1", text)
    # drop punctuation, symbols and digits; underscore survives so the
    # emoticon sentinels stay intact
    keep = "a-z_" if cfg.lowercase else "A-Za-z_"
    text = re.sub(f"[^{keep}]+", " ", text)
    return " ".join(text.split())


def tokenize(text: str) -> list[str]:
    """Whitespace split with empty tokens dropped."""
    return text.split()


def remove_stopwords(tokens: list[str], stoplist: frozenset[str]) -> list[str]:
    return [tok for tok in tokens if tok not in stoplist]


def stem_tokens(tokens: list[str]) -> list[str]:
    """Porter-stem plain alphabetic tokens; sentinel tokens pass through."""
    out = []
    for tok in tokens:
        stemmed = tok if "_" in tok else porter_stem(tok)
        if stemmed:
            out.append(stemmed)
    return out


def preprocess(
    text: str,
    cfg: PipelineConfig = PipelineConfig(),
    emoticon_table: dict[str, str] | None = None,
    stoplist: frozenset[str] | None = None,
) -> list[str]:
    """Run the full pipeline on one tweet text, honoring the config flags."""
    if cfg.map_emoticons:
        table = default_emoticon_table() if emoticon_table is None else emoticon_table
        text = map_emoticons(text, table)
    text = normalize(text, cfg)
    tokens = tokenize(text)
    if cfg.remove_stopwords:
        words = default_stoplist() if stoplist is None else stoplist
        tokens = remove_stopwords(tokens, words)
    if cfg.stem:
        tokens = stem_tokens(tokens)
    return tokens
