"""Term/id vocabulary built from normalized token streams, and encoding
of comments into word-id Documents."""

from collections import Counter
from dataclasses import dataclass
from datetime import datetime
from typing import Optional, Sequence

from topicmine.corpus import Comment


class EmptyVocabulary(ValueError):
    """No term survived the document-frequency filters."""


class EmptyDocument(ValueError):
    """Every token of a comment fell outside the vocabulary."""


@dataclass(frozen=True)
class Vocabulary:
    """Terms ordered by descending document frequency (index = word id)."""

    terms: tuple[str, ...]
    doc_freq: tuple[int, ...]

    def __post_init__(self):
        if len(self.terms) != len(self.doc_freq):
            raise ValueError("terms and doc_freq length mismatch")
        if len(set(self.terms)) != len(self.terms):
            raise ValueError("vocabulary terms must be distinct")
        object.__setattr__(self, "_term_to_id",
                           {t: i for i, t in enumerate(self.terms)})

    @property
    def size(self) -> int:
        return len(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def id_of(self, term: str) -> Optional[int]:
        return self._term_to_id.get(term)

    def __contains__(self, term: str) -> bool:
        return term in self._term_to_id


@dataclass(frozen=True)
class Document:
    """A preprocessed comment as a sequence of vocabulary word ids."""

    comment_id: str
    word_ids: tuple[int, ...]
    timestamp: Optional[datetime] = None

    def __post_init__(self):
        if len(self.word_ids) < 1:
            raise ValueError("a Document must contain at least one token")
        object.__setattr__(self, "word_ids", tuple(int(w) for w in self.word_ids))

    def __len__(self) -> int:
        return len(self.word_ids)


def build_vocabulary(token_streams: Sequence[Sequence[str]],
                     min_df: int = 5,
                     max_df_ratio: float = 0.5) -> Vocabulary:
    """Keep terms whose document frequency is >= min_df and
    <= max_df_ratio * D; ids are assigned in descending doc-frequency
    order, ties broken lexicographically."""
    if min_df < 1:
        raise ValueError("min_df must be >= 1")
    if not 0 < max_df_ratio <= 1:
        raise ValueError("max_df_ratio must be in (0, 1]")
    df = Counter()
    n_docs = 0
    for tokens in token_streams:
        n_docs += 1
        df.update(set(tokens))
    ceiling = max_df_ratio * n_docs
    kept = [(term, freq) for term, freq in df.items()
            if min_df <= freq <= ceiling]
    if not kept:
        raise EmptyVocabulary(
            f"no term passed min_df={min_df}, max_df_ratio={max_df_ratio} "
            f"over {n_docs} documents")
    kept.sort(key=lambda item: (-item[1], item[0]))
    return Vocabulary(terms=tuple(t for t, _ in kept),
                      doc_freq=tuple(f for _, f in kept))


def encode(tokens: Sequence[str], vocabulary: Vocabulary,
           comment: Comment) -> Document:
    """Map tokens to word ids, dropping out-of-vocabulary tokens.

    Raises EmptyDocument when nothing remains; the caller drops the
    comment and counts it.
    """
    ids = [vocabulary.id_of(t) for t in tokens]
    word_ids = tuple(i for i in ids if i is not None)
    if not word_ids:
        raise EmptyDocument(f"comment {comment.id!r} has no in-vocabulary tokens")
    return Document(comment_id=comment.id, word_ids=word_ids,
                    timestamp=comment.timestamp)


def decode(document: Document, vocabulary: Vocabulary) -> list[str]:
    """Inverse of encode for in-vocabulary tokens."""
    return [vocabulary.terms[w] for w in document.word_ids]


def save_vocabulary(vocabulary: Vocabulary, path) -> None:
    """Write the audit export: ``id<TAB>term<TAB>doc_freq`` per line."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for i, (term, freq) in enumerate(zip(vocabulary.terms, vocabulary.doc_freq)):
            fh.write(f"{i}\t{term}\t{freq}\n")


def load_vocabulary(path) -> Vocabulary:
    terms, freqs = [], []
    with open(path, encoding="utf-8") as fh:
        for expected, line in enumerate(fh):
            word_id, term, freq = line.rstrip("\n").split("\t")
            if int(word_id) != expected:
                raise ValueError(f"{path}: non-dense word id {word_id}")
            terms.append(term)
            freqs.append(int(freq))
    return Vocabulary(terms=tuple(terms), doc_freq=tuple(freqs))
