import json
from datetime import datetime, timezone

import numpy as np
import pytest

from topicmine import evaluation, lda
from topicmine.lda import LdaConfig
from topicmine.vocab import Document


def utc(year, month, day, hour=0):
    return datetime(year, month, day, hour, tzinfo=timezone.utc)


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")
    return path


def make_documents(seed=0, n_docs=6, n_vocab=7, min_len=3, max_len=10,
                   timestamps=None):
    """Small random corpus for sampler tests."""
    rng = np.random.default_rng(seed)
    docs = []
    for d in range(n_docs):
        length = int(rng.integers(min_len, max_len + 1))
        ids = tuple(int(w) for w in rng.integers(0, n_vocab, length))
        ts = timestamps[d] if timestamps else None
        docs.append(Document(comment_id=f"doc-{d}", word_ids=ids, timestamp=ts))
    return docs


@pytest.fixture(scope="session")
def toy_model():
    """A deterministic 3-topic model on a small synthetic corpus."""
    spec = evaluation.SyntheticSpec(n_topics=3, n_vocab=30, n_docs=40,
                                    doc_length_mean=20, seed=11)
    documents, _, _ = evaluation.generate_synthetic_corpus(spec)
    stamps = [utc(2018, 1 + d % 3, 1 + d % 25) for d in range(len(documents))]
    documents = [Document(comment_id=doc.comment_id, word_ids=doc.word_ids,
                          timestamp=stamps[d])
                 for d, doc in enumerate(documents)]
    vocabulary = evaluation.vocabulary_for(documents, spec.n_vocab)
    config = LdaConfig(n_topics=3, alpha=0.1, beta=0.05, iterations=30, seed=5)
    model = lda.train(documents, config, vocabulary)
    return model, documents
