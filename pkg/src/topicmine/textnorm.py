"""Text normalization: tokenize, strip stop words, filter, optionally stem.

The stage order is fixed: tokenize, stop-word removal, length/numeric
filters, then stemming when enabled.
"""

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable

from topicmine import porter

# Maximal runs of Unicode letters/digits (underscore excluded), with
# word-internal apostrophes allowed so "don't" stays one token.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’][^\W_]+)*")
_APOSTROPHES = str.maketrans("", "", "'’")


@lru_cache(maxsize=1)
def default_stoplist() -> frozenset[str]:
    """The stoplist shipped with the package."""
    text = resources.files("topicmine").joinpath("data/stoplist_en.txt").read_text("utf-8")
    return _parse_stoplist(text.splitlines())


def _parse_stoplist(lines: Iterable[str]) -> frozenset[str]:
    terms = set()
    for line in lines:
        term = line.strip()
        if term and not term.startswith("#"):
            terms.add(term.lower())
    return frozenset(terms)


def load_stoplist(path) -> frozenset[str]:
    """Read a stoplist file: one term per line, ``#`` comments ignored,
    terms lowercased on load."""
    with open(path, encoding="utf-8") as fh:
        return _parse_stoplist(fh)


@dataclass(frozen=True)
class NormConfig:
    stoplist: frozenset[str] = field(default_factory=default_stoplist)
    stemming_enabled: bool = False
    min_token_len: int = 2
    max_token_len: int = 30
    drop_numeric: bool = True

    def __post_init__(self):
        if self.min_token_len < 1:
            raise ValueError("min_token_len must be >= 1")
        if self.min_token_len > self.max_token_len:
            raise ValueError("min_token_len must not exceed max_token_len")
        object.__setattr__(self, "stoplist", frozenset(self.stoplist))
        for term in self.stoplist:
            if term != term.lower():
                raise ValueError(f"stoplist entry {term!r} is not lowercase")


def tokenize(text: str) -> list[str]:
    """Lowercased runs of letters/digits; word-internal apostrophes are
    dropped and the word rejoined, all other punctuation splits."""
    return [m.group().translate(_APOSTROPHES)
            for m in _TOKEN_RE.finditer(text.lower())]


def remove_stopwords(tokens: list[str], stoplist) -> list[str]:
    """Drop stoplist members, preserving order."""
    return [t for t in tokens if t not in stoplist]


def stem(token: str) -> str:
    """Porter-stem a lowercase token (non-ASCII passes through)."""
    return porter.stem(token)


def normalize(text: str, config: NormConfig) -> list[str]:
    """Run the full pipeline on one comment's text."""
    tokens = remove_stopwords(tokenize(text), config.stoplist)
    tokens = [t for t in tokens
              if config.min_token_len <= len(t) <= config.max_token_len
              and not (config.drop_numeric and t.isdigit())]
    if config.stemming_enabled:
        tokens = [porter.stem(t) for t in tokens]
    return tokens
