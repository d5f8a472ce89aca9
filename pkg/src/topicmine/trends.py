"""Per-topic time series from document timestamps and theta."""

import csv
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, Optional, Sequence

from topicmine import report
from topicmine.lda import LdaModel
from topicmine.report import LabelStore, UnknownTopic
from topicmine.vocab import Document

GRANULARITIES = ("day", "month", "year")


class NoTimestampedDocuments(ValueError):
    """Trend analysis requires at least one timestamped document."""


@dataclass(frozen=True)
class TrendSeries:
    topic_id: int
    granularity: str
    points: tuple[tuple[datetime, float], ...]

    def __post_init__(self):
        buckets = [b for b, _ in self.points]
        if buckets != sorted(set(buckets)):
            raise ValueError("points must be strictly ascending by bucket")
        if any(mass < 0 for _, mass in self.points):
            raise ValueError("negative mass")


def bucket_start(ts: datetime, granularity: str) -> datetime:
    """Start of the UTC calendar bucket containing ts."""
    ts = ts.astimezone(timezone.utc)
    if granularity == "day":
        return ts.replace(hour=0, minute=0, second=0, microsecond=0)
    if granularity == "month":
        return ts.replace(day=1, hour=0, minute=0, second=0, microsecond=0)
    if granularity == "year":
        return ts.replace(month=1, day=1, hour=0, minute=0, second=0,
                          microsecond=0)
    raise ValueError(f"unknown granularity {granularity!r} "
                     f"(expected one of {GRANULARITIES})")


def bucket_documents(documents: Sequence[Document], granularity: str
                     ) -> tuple[dict[datetime, list[int]], int]:
    """Group document indices into UTC calendar buckets.

    Returns (buckets, skipped) where skipped counts untimestamped
    documents; raises NoTimestampedDocuments when a non-empty corpus has
    no timestamps at all.
    """
    buckets: dict[datetime, list[int]] = {}
    skipped = 0
    for d, doc in enumerate(documents):
        if doc.timestamp is None:
            skipped += 1
            continue
        buckets.setdefault(bucket_start(doc.timestamp, granularity), []).append(d)
    if documents and not buckets:
        raise NoTimestampedDocuments(
            f"none of the {len(documents)} documents carry a timestamp")
    return buckets, skipped


def topic_trend(model: LdaModel, documents: Sequence[Document],
                granularity: str, topics: Optional[Iterable[int]] = None,
                hard_counts: bool = False) -> dict[int, TrendSeries]:
    """Per-topic mass over time buckets.

    Default mass is the sum of theta over the bucket's documents
    (expected token-mass share); ``hard_counts`` switches to counting
    documents whose argmax topic is k.  Buckets with no documents are
    omitted, never zero-filled.
    """
    if len(documents) != model.n_docs:
        raise ValueError("documents are not the model's training documents")
    if topics is None:
        topic_ids = list(range(model.n_topics))
    else:
        topic_ids = sorted(set(int(t) for t in topics))
        for t in topic_ids:
            if not 0 <= t < model.n_topics:
                raise UnknownTopic(f"topic {t} (model has {model.n_topics} topics)")
    buckets, _ = bucket_documents(documents, granularity)
    argmax = model.theta.argmax(axis=1) if hard_counts else None

    series = {}
    for k in topic_ids:
        points = []
        for bucket in sorted(buckets):
            doc_ids = buckets[bucket]
            if hard_counts:
                mass = float(sum(1 for d in doc_ids if argmax[d] == k))
            else:
                mass = float(model.theta[doc_ids, k].sum())
            points.append((bucket, mass))
        series[k] = TrendSeries(topic_id=k, granularity=granularity,
                                points=tuple(points))
    return series


def top_topics_by_ptw(model: LdaModel, n: int) -> list[tuple[int, float]]:
    """The n highest-PTW topics as (topic_id, ptw), ties by ascending id;
    n is clamped to the topic count."""
    ranked = report.rank_by_ptw(enumerate(report.ptw_all(model)))
    return ranked[:max(0, n)]


def export_trends_csv(series_by_topic: dict[int, TrendSeries], path,
                      label_store: Optional[LabelStore] = None) -> None:
    """Trend export: ``topic_id,label,bucket_start,mass`` sorted by
    (topic_id, bucket)."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["topic_id", "label", "bucket_start", "mass"])
        for topic_id in sorted(series_by_topic):
            label = ""
            if label_store is not None:
                label = report.majority_label(
                    label_store.current_labels(topic_id))[0] or ""
            for bucket, mass in series_by_topic[topic_id].points:
                writer.writerow([topic_id, label, bucket.isoformat(), repr(mass)])
