"""HTTP facade over a trained snapshot and the label store.

A local analyst tool: JSON over HTTP, no authentication, loopback by
default.  The model is immutable; only the label store changes, and its
writes are durable before the response is sent.
"""

from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from topicmine import report, trends
from topicmine.lda import LdaModel
from topicmine.report import LabelStore
from topicmine.snapshot import load_snapshot
from topicmine.vocab import Document


@dataclass
class ServeState:
    model: Optional[LdaModel] = None
    documents: Optional[list[Document]] = None
    label_store: LabelStore = field(default_factory=LabelStore)
    read_only: bool = False


class LabelSubmission(BaseModel):
    annotator_id: str
    label: str


def _topic_payload(state: ServeState, summary: report.TopicSummary,
                   rank: int) -> dict:
    labels = summary.label_annotations
    agreement = None
    if len(labels) >= 2:
        per_topic, _ = report.agreement(state.label_store, [summary.topic_id])
        agreement = per_topic[summary.topic_id]
    return {
        "rank": rank,
        "topic_id": summary.topic_id,
        "ptw": summary.ptw,
        "terms": [{"term": t, "weight": w} for t, w in summary.top_terms],
        "label": summary.label,
        "label_annotations": labels,
        "label_conflict": summary.label_conflict,
        "agreement": agreement,
    }


def create_app(state: ServeState, cors_origins=("*",)) -> FastAPI:
    app = FastAPI(title="topicmine", docs_url=None, redoc_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=list(cors_origins),
                       allow_methods=["*"], allow_headers=["*"])
    app.state.serve_state = state

    def _model() -> LdaModel:
        if state.model is None:
            raise HTTPException(status_code=503, detail="snapshot not loaded")
        return state.model

    def _check_topic(topic_id: int) -> None:
        model = _model()
        if not 0 <= topic_id < model.n_topics:
            raise HTTPException(status_code=404,
                                detail=f"unknown topic {topic_id}")

    @app.get("/api/health")
    def health():
        return {"status": "ok", "model_loaded": state.model is not None,
                "read_only": state.read_only}

    @app.get("/api/topics")
    def topics(n_terms: int = Query(default=report.DEFAULT_N_TERMS, ge=1),
               limit: Optional[int] = Query(default=None, ge=0)):
        model = _model()
        summaries = report.summarize_topics(model, n_terms=n_terms,
                                            label_store=state.label_store)
        if limit is not None:
            summaries = summaries[:limit]
        return {"topics": [_topic_payload(state, s, rank)
                           for rank, s in enumerate(summaries, start=1)]}

    @app.get("/api/topics/{topic_id}/trend")
    def topic_trend(topic_id: int, granularity: str = "month"):
        _check_topic(topic_id)
        if granularity not in trends.GRANULARITIES:
            raise HTTPException(status_code=422,
                                detail=f"unknown granularity {granularity!r}")
        try:
            series = trends.topic_trend(state.model, state.documents,
                                        granularity, topics=[topic_id])
        except trends.NoTimestampedDocuments as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        points = series[topic_id].points
        return {"topic_id": topic_id, "granularity": granularity,
                "points": [{"bucket_start": bucket.isoformat(), "mass": mass}
                           for bucket, mass in points]}

    @app.get("/api/topics/{topic_id}/cloud")
    def topic_cloud(topic_id: int,
                    n_terms: int = Query(default=report.DEFAULT_N_TERMS, ge=1)):
        _check_topic(topic_id)
        weights = report.wordcloud_weights(state.model, topic_id, n_terms)
        return {"topic_id": topic_id,
                "terms": [{"term": t, "weight": w} for t, w in weights.items()]}

    @app.post("/api/topics/{topic_id}/labels")
    def submit_label(topic_id: int, submission: LabelSubmission):
        _check_topic(topic_id)
        if state.read_only:
            raise HTTPException(status_code=403, detail="server is read-only")
        if not submission.annotator_id.strip():
            raise HTTPException(status_code=422, detail="empty annotator_id")
        if not submission.label.strip():
            raise HTTPException(status_code=422, detail="empty label")
        entry = state.label_store.append(topic_id,
                                         submission.annotator_id.strip(),
                                         submission.label)
        return {"stored": entry}

    @app.get("/api/agreement")
    def agreement_view():
        _model()
        evaluable = [t for t in state.label_store.topic_ids()
                     if len(state.label_store.current_labels(t)) >= 2]
        if not evaluable:
            return {"per_topic": {}, "overall": None}
        per_topic, overall = report.agreement(state.label_store, evaluable)
        return {"per_topic": {str(t): score for t, score in per_topic.items()},
                "overall": overall}

    return app


def build_app(snapshot_path, labels_path=None, read_only: bool = False,
              ui_dir=None, cors_origins=("*",)) -> FastAPI:
    """Load the snapshot (before the listener opens) and assemble the app."""
    model, documents = load_snapshot(snapshot_path)
    state = ServeState(model=model, documents=documents,
                       label_store=LabelStore(labels_path),
                       read_only=read_only)
    app = create_app(state, cors_origins=cors_origins)
    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    return app
