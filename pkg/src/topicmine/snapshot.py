"""Versioned JSON model snapshots.

A snapshot is self-contained: config, vocabulary, encoded documents
with timestamps, final counts, assignments, and the likelihood trace.
Writing is deterministic (sorted keys, fixed separators), so identical
runs produce byte-identical files; theta/phi are recomputed from the
integer counts on load and therefore reproduce exactly.
"""

import json
import os
from typing import Sequence

import numpy as np

from topicmine.corpus import parse_timestamp
from topicmine.lda import LdaConfig, LdaModel, estimate_phi, estimate_theta
from topicmine.vocab import Document, Vocabulary

SNAPSHOT_FORMAT = "topicmine-snapshot"
SNAPSHOT_VERSION = 1


def save_snapshot(path, model: LdaModel, documents: Sequence[Document]) -> None:
    if len(documents) != model.n_docs:
        raise ValueError("documents do not match the model")
    offsets = np.cumsum([0] + [len(d) for d in documents])
    z = np.asarray(model.assignments)
    payload = {
        "format": SNAPSHOT_FORMAT,
        "version": SNAPSHOT_VERSION,
        "config": {
            "n_topics": model.config.n_topics,
            "alpha": model.config.alpha,
            "beta": model.config.beta,
            "iterations": model.config.iterations,
            "seed": model.config.seed,
        },
        "dims": {"n_docs": model.n_docs, "n_topics": model.n_topics,
                 "n_vocab": model.n_vocab},
        "vocabulary": {
            "terms": list(model.vocabulary.terms),
            "doc_freq": list(model.vocabulary.doc_freq),
        },
        "documents": [
            {"id": doc.comment_id,
             "word_ids": [int(w) for w in doc.word_ids],
             "timestamp": doc.timestamp.isoformat() if doc.timestamp else None}
            for doc in documents
        ],
        "assignments": [
            [int(k) for k in z[offsets[d]:offsets[d + 1]]]
            for d in range(len(documents))
        ],
        "counts": {
            "n_dk": model.n_dk.tolist(),
            "n_kw": model.n_kw.tolist(),
            "n_k": model.n_k.tolist(),
        },
        "log_likelihood": list(model.log_likelihood_trace),
    }
    tmp = os.fspath(path) + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")
    os.replace(tmp, path)


def load_snapshot(path) -> tuple[LdaModel, list[Document]]:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("format") != SNAPSHOT_FORMAT:
        raise ValueError(f"{path}: not a {SNAPSHOT_FORMAT} file")
    if payload.get("version") != SNAPSHOT_VERSION:
        raise ValueError(f"{path}: unsupported snapshot version "
                         f"{payload.get('version')}")

    cfg = payload["config"]
    config = LdaConfig(n_topics=cfg["n_topics"], alpha=cfg["alpha"],
                       beta=cfg["beta"], iterations=cfg["iterations"],
                       seed=cfg["seed"])
    vocabulary = Vocabulary(terms=tuple(payload["vocabulary"]["terms"]),
                            doc_freq=tuple(payload["vocabulary"]["doc_freq"]))
    documents = [
        Document(comment_id=doc["id"], word_ids=tuple(doc["word_ids"]),
                 timestamp=parse_timestamp(doc["timestamp"])
                 if doc.get("timestamp") else None)
        for doc in payload["documents"]
    ]

    n_dk = np.array(payload["counts"]["n_dk"], dtype=np.int32)
    n_kw = np.array(payload["counts"]["n_kw"], dtype=np.int32)
    n_k = np.array(payload["counts"]["n_k"], dtype=np.int32)
    n_d = np.array([len(d) for d in documents], dtype=np.int32)
    dims = payload["dims"]
    if n_dk.shape != (dims["n_docs"], dims["n_topics"]) \
            or n_kw.shape != (dims["n_topics"], dims["n_vocab"]):
        raise ValueError(f"{path}: count matrices do not match dims")
    if int(n_k.sum()) != int(n_d.sum()):
        raise ValueError(f"{path}: inconsistent token totals")

    assignments = np.fromiter(
        (k for doc in payload["assignments"] for k in doc),
        dtype=np.int32, count=int(n_d.sum()))
    model = LdaModel(
        config=config, vocabulary=vocabulary,
        theta=estimate_theta(n_dk, n_d, config.alpha),
        phi=estimate_phi(n_kw, n_k, config.beta),
        n_dk=n_dk, n_kw=n_kw, n_k=n_k,
        log_likelihood_trace=tuple(payload["log_likelihood"]),
        assignments=assignments)
    return model, documents
