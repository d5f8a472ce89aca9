"""Reporting artifacts: top terms per topic, PTW, word-cloud weights,
and the human labeling workflow (label store, majority labels,
inter-annotator agreement)."""

import csv
import json
import logging
import os
import threading
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from typing import Optional, Sequence

import numpy as np

from topicmine.lda import LdaModel

logger = logging.getLogger(__name__)

DEFAULT_N_TERMS = 20


class UnknownTopic(KeyError):
    """Topic id outside 0..K-1."""


class InsufficientAnnotators(ValueError):
    """Agreement needs at least two annotators per evaluated topic."""


@dataclass(frozen=True)
class TopicSummary:
    topic_id: int
    ptw: float
    top_terms: tuple[tuple[str, float], ...]
    label: Optional[str] = None
    label_annotations: dict = field(default_factory=dict)
    label_conflict: bool = False


def _check_topic(model: LdaModel, topic_id: int) -> None:
    if not 0 <= topic_id < model.n_topics:
        raise UnknownTopic(f"topic {topic_id} (model has {model.n_topics} topics)")


def top_terms(model: LdaModel, topic_id: int, n: int = DEFAULT_N_TERMS):
    """The n highest-phi terms of a topic with their weights; ties break
    by ascending word id."""
    _check_topic(model, topic_id)
    if n < 1:
        raise ValueError("n must be >= 1")
    row = model.phi[topic_id]
    n = min(n, model.n_vocab)
    order = np.argsort(-row, kind="stable")[:n]
    return [(model.vocabulary.terms[w], float(row[w])) for w in order]


def ptw_all(model: LdaModel) -> np.ndarray:
    """Prior Topic Weight of every topic: its percentage share of
    assigned corpus tokens."""
    totals = model.n_k.astype(np.float64)
    return 100.0 * totals / totals.sum()


def ptw(model: LdaModel, topic_id: int) -> float:
    _check_topic(model, topic_id)
    return float(ptw_all(model)[topic_id])


def rank_by_ptw(pairs) -> list[tuple[int, float]]:
    """Sort (topic_id, ptw) pairs by descending PTW, ties by ascending id."""
    return sorted(((int(t), float(p)) for t, p in pairs),
                  key=lambda item: (-item[1], item[0]))


def wordcloud_weights(model: LdaModel, topic_id: int,
                      n: int = DEFAULT_N_TERMS) -> dict[str, float]:
    """top_terms rescaled to max weight 1.0 for renderer consumption."""
    terms = top_terms(model, topic_id, n)
    peak = terms[0][1]
    return {term: weight / peak for term, weight in terms}


class LabelStore:
    """Append-preserving store of topic-label annotations.

    File format: a JSON list of ``{topic_id, annotator_id, label,
    timestamp}``.  The full history is kept; the latest annotation per
    (topic, annotator) is the annotator's current label.  Writes are
    serialized and durable (fsync before returning).
    """

    def __init__(self, path=None):
        self.path = os.fspath(path) if path is not None else None
        self._lock = threading.Lock()
        self._annotations: list[dict] = []
        if self.path is not None and os.path.exists(self.path):
            with open(self.path, encoding="utf-8") as fh:
                raw = json.load(fh)
            if not isinstance(raw, list):
                raise ValueError(f"{self.path}: expected a JSON list")
            for entry in raw:
                self._annotations.append(self._validated(entry))

    @staticmethod
    def _validated(entry: dict) -> dict:
        try:
            topic_id = int(entry["topic_id"])
            annotator = str(entry["annotator_id"])
            label = str(entry["label"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed annotation {entry!r}") from exc
        if not label.strip():
            raise ValueError("empty label")
        return {"topic_id": topic_id, "annotator_id": annotator,
                "label": label, "timestamp": entry.get("timestamp")}

    def append(self, topic_id: int, annotator_id: str, label: str) -> dict:
        """Record an annotation and persist it before returning."""
        if not label.strip():
            raise ValueError("empty label")
        entry = {"topic_id": int(topic_id), "annotator_id": str(annotator_id),
                 "label": label.strip(),
                 "timestamp": datetime.now(timezone.utc).isoformat()}
        with self._lock:
            self._annotations.append(entry)
            self._persist()
        return entry

    def extend(self, entries: Sequence[dict]) -> int:
        """Merge externally produced annotations (e.g. a labels import)."""
        validated = [self._validated(e) for e in entries]
        with self._lock:
            self._annotations.extend(validated)
            self._persist()
        return len(validated)

    def _persist(self) -> None:
        if self.path is None:
            return
        tmp = self.path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(self._annotations, fh, indent=1)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, self.path)

    @property
    def annotations(self) -> list[dict]:
        with self._lock:
            return list(self._annotations)

    def topic_ids(self) -> list[int]:
        return sorted({a["topic_id"] for a in self.annotations})

    def current_labels(self, topic_id: int) -> dict[str, str]:
        """Latest label per annotator for one topic."""
        current = {}
        for entry in self.annotations:
            if entry["topic_id"] == topic_id:
                current[entry["annotator_id"]] = entry["label"]
        return current


def majority_label(labels: dict[str, str]) -> tuple[Optional[str], bool]:
    """Majority label among annotators (case-insensitive, trimmed).

    Returns (label, conflict); no annotations gives (None, False), a
    tie or no strict majority gives (None, True).
    """
    if not labels:
        return None, False
    groups: dict[str, list[str]] = {}
    for label in labels.values():
        groups.setdefault(label.strip().casefold(), []).append(label.strip())
    best = max(groups.values(), key=len)
    if len(best) * 2 > len(labels):
        return best[0], False
    return None, True


def summarize_topics(model: LdaModel, n_terms: int = DEFAULT_N_TERMS,
                     label_store: Optional[LabelStore] = None) -> list[TopicSummary]:
    """All topics as summaries, ranked by descending PTW."""
    ranked = rank_by_ptw(enumerate(ptw_all(model)))
    summaries = [TopicSummary(topic_id=k, ptw=p,
                              top_terms=tuple(top_terms(model, k, n_terms)))
                 for k, p in ranked]
    if label_store is not None:
        summaries = apply_labels(summaries, label_store)
    return summaries


def apply_labels(summaries: Sequence[TopicSummary],
                 label_store: LabelStore) -> list[TopicSummary]:
    """Attach majority labels and annotation metadata; term/weight data
    is never touched."""
    known = {s.topic_id for s in summaries}
    for orphan in set(label_store.topic_ids()) - known:
        logger.warning("label store references unknown topic %d; skipped", orphan)
    out = []
    for summary in summaries:
        labels = label_store.current_labels(summary.topic_id)
        label, conflict = majority_label(labels)
        out.append(replace(summary, label=label, label_annotations=labels,
                           label_conflict=conflict))
    return out


def agreement(label_store: LabelStore,
              topics: Sequence[int]) -> tuple[dict[int, float], float]:
    """Pairwise exact-match agreement (case-insensitive, trimmed) per
    topic, and the mean over topics."""
    topics = sorted(set(int(t) for t in topics))
    if not topics:
        raise InsufficientAnnotators("no topics to evaluate")
    per_topic = {}
    for topic_id in topics:
        labels = [lab.strip().casefold()
                  for lab in label_store.current_labels(topic_id).values()]
        n = len(labels)
        if n < 2:
            raise InsufficientAnnotators(
                f"topic {topic_id} has {n} annotator(s); need at least 2")
        matches = sum(1 for i in range(n) for j in range(i + 1, n)
                      if labels[i] == labels[j])
        per_topic[topic_id] = matches / (n * (n - 1) / 2)
    overall = sum(per_topic.values()) / len(per_topic)
    return per_topic, overall


def export_topics_csv(model: LdaModel, path, n_terms: int = DEFAULT_N_TERMS,
                      n_topics: Optional[int] = None,
                      label_store: Optional[LabelStore] = None) -> None:
    """Ranked topic table: ``rank,topic_id,ptw,label,term_1..term_n``."""
    summaries = summarize_topics(model, n_terms, label_store)
    if n_topics is not None:
        summaries = summaries[:n_topics]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["rank", "topic_id", "ptw", "label"]
                        + [f"term_{i}" for i in range(1, n_terms + 1)])
        for rank, s in enumerate(summaries, start=1):
            terms = [t for t, _ in s.top_terms]
            terms += [""] * (n_terms - len(terms))
            writer.writerow([rank, s.topic_id, repr(s.ptw), s.label or ""] + terms)


def export_wordcloud_json(model: LdaModel, topic_id: int, path,
                          n_terms: int = DEFAULT_N_TERMS) -> None:
    """Word-cloud export: ``{topic_id, terms: [{term, weight}]}``."""
    weights = wordcloud_weights(model, topic_id, n_terms)
    payload = {"topic_id": topic_id,
               "terms": [{"term": t, "weight": w} for t, w in weights.items()]}
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")
