"""Corpus-to-documents preparation shared by the CLI: normalize every
comment, build the vocabulary, and encode, dropping emptied comments."""

from dataclasses import dataclass
from typing import Sequence

from topicmine.corpus import Comment
from topicmine.textnorm import NormConfig, normalize
from topicmine.vocab import (Document, EmptyDocument, Vocabulary,
                             build_vocabulary, encode)


@dataclass(frozen=True)
class PreparedCorpus:
    documents: tuple[Document, ...]
    vocabulary: Vocabulary
    dropped_empty: int  # comments with no in-vocabulary tokens left


def prepare_documents(comments: Sequence[Comment], norm_config: NormConfig,
                      min_df: int = 5,
                      max_df_ratio: float = 0.5) -> PreparedCorpus:
    streams = [normalize(c.text, norm_config) for c in comments]
    vocabulary = build_vocabulary(streams, min_df=min_df,
                                  max_df_ratio=max_df_ratio)
    documents = []
    dropped = 0
    for comment, tokens in zip(comments, streams):
        try:
            documents.append(encode(tokens, vocabulary, comment))
        except EmptyDocument:
            dropped += 1
    return PreparedCorpus(documents=tuple(documents), vocabulary=vocabulary,
                          dropped_empty=dropped)
