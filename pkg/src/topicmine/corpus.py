"""Load, validate, and deduplicate timestamped comment records.

Input formats: JSONL (one object per line) and CSV with an
``id,user_id,timestamp,text`` header.  Deduplication is by exact text
after Unicode NFC normalization, first occurrence wins.
"""

import csv
import io
import json
import unicodedata
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional

CSV_COLUMNS = ("id", "user_id", "timestamp", "text")
FORMATS = ("jsonl", "csv")


class InvalidRecord(ValueError):
    """A single record that cannot become a Comment; carries the reason."""


@dataclass(frozen=True)
class Comment:
    """One raw forum post."""

    id: str
    user_id: str
    text: str
    timestamp: Optional[datetime] = None


@dataclass(frozen=True)
class CorpusStats:
    total_records: int
    unique_comments: int
    dropped_duplicates: int
    dropped_invalid: int
    time_range: Optional[tuple[datetime, datetime]] = None

    def __post_init__(self):
        parts = self.unique_comments + self.dropped_duplicates + self.dropped_invalid
        if self.total_records != parts:
            raise ValueError(
                f"inconsistent stats: {self.total_records} records != "
                f"{parts} accounted for")


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 timestamp and normalize it to UTC.

    Naive timestamps are taken as already-UTC.  Raises InvalidRecord on
    anything ``datetime.fromisoformat`` cannot handle.
    """
    s = value.strip()
    if s.endswith(("Z", "z")):  # 3.10 fromisoformat rejects the Z suffix
        s = s[:-1] + "+00:00"
    try:
        dt = datetime.fromisoformat(s)
    except ValueError as exc:
        raise InvalidRecord(f"malformed timestamp {value!r}") from exc
    if dt.tzinfo is None:
        return dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def _make_comment(rec_id, user_id, timestamp, text) -> Comment:
    if not isinstance(rec_id, str) or not rec_id:
        raise InvalidRecord("missing id")
    if not isinstance(user_id, str) or not user_id:
        raise InvalidRecord("missing user_id")
    if not isinstance(text, str):
        raise InvalidRecord("missing text")
    if not text.strip():
        raise InvalidRecord("empty text")
    ts = None
    if timestamp is not None and timestamp != "":
        if not isinstance(timestamp, str):
            raise InvalidRecord("malformed timestamp: expected ISO-8601 string")
        ts = parse_timestamp(timestamp)
    return Comment(id=rec_id, user_id=user_id, text=text, timestamp=ts)


def parse_comment_record(line: str, format: str = "jsonl") -> Comment:
    """Parse one serialized record into a Comment.

    ``jsonl``: a JSON object with ``id``, ``user_id``, ``text`` and an
    optional ISO-8601 ``timestamp``.  ``csv``: one data row in
    ``id,user_id,timestamp,text`` column order.  Raises InvalidRecord
    with a reason; the caller counts failures instead of aborting.
    """
    if format == "jsonl":
        try:
            obj = json.loads(line)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise InvalidRecord(f"malformed JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise InvalidRecord("record is not a JSON object")
        return _make_comment(obj.get("id"), obj.get("user_id"),
                             obj.get("timestamp"), obj.get("text"))
    if format == "csv":
        try:
            fields = next(csv.reader(io.StringIO(line)))
        except (csv.Error, StopIteration) as exc:
            raise InvalidRecord(f"malformed CSV row: {exc}") from exc
        if len(fields) != len(CSV_COLUMNS):
            raise InvalidRecord(
                f"expected {len(CSV_COLUMNS)} CSV fields, got {len(fields)}")
        rec_id, user_id, timestamp, text = fields
        return _make_comment(rec_id, user_id, timestamp, text)
    raise ValueError(f"unknown format {format!r} (expected one of {FORMATS})")


def dedup_key(text: str) -> str:
    """Deduplication key: the exact text after Unicode NFC normalization."""
    return unicodedata.normalize("NFC", text)


def load_corpus(path, format: str = "jsonl") -> tuple[list[Comment], CorpusStats]:
    """Read a corpus file, returning deduplicated comments in file order.

    Per-record failures are counted in ``dropped_invalid``; I/O errors
    propagate.  A repeated comment id (with different text) is treated
    as invalid to keep ids unique.
    """
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r} (expected one of {FORMATS})")
    comments: list[Comment] = []
    seen_texts: set[str] = set()
    seen_ids: set[str] = set()
    total = dupes = invalid = 0

    with open(path, encoding="utf-8", newline="") as fh:
        if format == "jsonl":
            records = ((line, None) for line in fh if line.strip())
        else:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or [h.strip() for h in header] != list(CSV_COLUMNS):
                raise ValueError(
                    f"{path}: expected CSV header {','.join(CSV_COLUMNS)}")
            records = ((None, row) for row in reader if row)

        for line, row in records:
            total += 1
            try:
                if format == "jsonl":
                    comment = parse_comment_record(line, "jsonl")
                else:
                    if len(row) != len(CSV_COLUMNS):
                        raise InvalidRecord(
                            f"expected {len(CSV_COLUMNS)} CSV fields, got {len(row)}")
                    comment = _make_comment(*row)
            except InvalidRecord:
                invalid += 1
                continue
            key = dedup_key(comment.text)
            if key in seen_texts:
                dupes += 1
                continue
            if comment.id in seen_ids:  # distinct text, reused id
                invalid += 1
                continue
            seen_texts.add(key)
            seen_ids.add(comment.id)
            comments.append(comment)

    stamps = [c.timestamp for c in comments if c.timestamp is not None]
    time_range = (min(stamps), max(stamps)) if stamps else None
    stats = CorpusStats(total_records=total, unique_comments=len(comments),
                        dropped_duplicates=dupes, dropped_invalid=invalid,
                        time_range=time_range)
    return comments, stats
