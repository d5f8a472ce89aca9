"""Command-line entry point: train, topics, trends, cloud, labels,
eval, serve.

All flags can be overridden through TOPICMINE_* environment variables.
"""

import json
import logging
import time

import click

from topicmine import evaluation, report, snapshot, textnorm, trends
from topicmine.corpus import load_corpus
from topicmine.lda import LdaConfig, train as train_model
from topicmine.manifest import build_manifest, write_manifest
from topicmine.pipeline import prepare_documents
from topicmine.report import DEFAULT_N_TERMS, LabelStore
from topicmine.textnorm import NormConfig
from topicmine.vocab import save_vocabulary

CONTEXT = {"auto_envvar_prefix": "TOPICMINE", "help_option_names": ["-h", "--help"]}


def _sibling(out: str, suffix: str) -> str:
    base = out[:-5] if out.endswith(".json") else out
    return base + suffix


@click.group(context_settings=CONTEXT)
@click.version_option()
def main():
    """Corpus topic mining: LDA by collapsed Gibbs sampling."""
    logging.basicConfig(level=logging.INFO, format="%(message)s")


@main.command("train")
@click.argument("corpus_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "corpus_format", type=click.Choice(["jsonl", "csv"]),
              default="jsonl", show_default=True, help="Corpus file format.")
@click.option("--out", default="model.json", show_default=True,
              help="Snapshot path; vocabulary and manifest are written beside it.")
@click.option("--stoplist", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Stoplist file (default: shipped English list).")
@click.option("--stem/--no-stem", default=False, show_default=True,
              help="Porter-stem tokens.")
@click.option("--min-token-len", default=2, show_default=True)
@click.option("--max-token-len", default=30, show_default=True)
@click.option("--keep-numeric", is_flag=True, help="Keep all-digit tokens.")
@click.option("--min-df", default=5, show_default=True,
              help="Minimum document frequency for vocabulary terms.")
@click.option("--max-df-ratio", default=0.5, show_default=True,
              help="Maximum document-frequency share for vocabulary terms.")
@click.option("--topics", "n_topics", default=100, show_default=True)
@click.option("--alpha", default=0.05, show_default=True)
@click.option("--beta", default=0.01, show_default=True)
@click.option("--iterations", default=1000, show_default=True)
@click.option("--seed", default=0, show_default=True)
def cmd_train(corpus_path, corpus_format, out, stoplist, stem, min_token_len,
              max_token_len, keep_numeric, min_df, max_df_ratio, n_topics,
              alpha, beta, iterations, seed):
    """Ingest a corpus, train the model, write snapshot + vocabulary + manifest."""
    stages = {}
    t0 = time.perf_counter()
    comments, stats = load_corpus(corpus_path, corpus_format)
    stages["load"] = time.perf_counter() - t0
    click.echo(f"corpus: {stats.total_records} records, "
               f"{stats.unique_comments} unique comments "
               f"({stats.dropped_duplicates} duplicates, "
               f"{stats.dropped_invalid} invalid)")
    if not comments:
        raise click.ClickException("no valid comments in corpus")

    words = frozenset(textnorm.load_stoplist(stoplist)) if stoplist \
        else textnorm.default_stoplist()
    norm_config = NormConfig(stoplist=words, stemming_enabled=stem,
                             min_token_len=min_token_len,
                             max_token_len=max_token_len,
                             drop_numeric=not keep_numeric)
    t0 = time.perf_counter()
    try:
        prepared = prepare_documents(comments, norm_config,
                                     min_df=min_df, max_df_ratio=max_df_ratio)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    stages["prepare"] = time.perf_counter() - t0
    click.echo(f"vocabulary: {prepared.vocabulary.size} terms; "
               f"documents: {len(prepared.documents)} "
               f"({prepared.dropped_empty} emptied by preprocessing)")
    if not prepared.documents:
        raise click.ClickException("preprocessing emptied every document")

    config = LdaConfig(n_topics=n_topics, alpha=alpha, beta=beta,
                       iterations=iterations, seed=seed)
    t0 = time.perf_counter()
    model = train_model(list(prepared.documents), config, prepared.vocabulary)
    stages["train"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    vocab_path = _sibling(out, ".vocab.tsv")
    manifest_path = _sibling(out, ".manifest.json")
    snapshot.save_snapshot(out, model, prepared.documents)
    save_vocabulary(prepared.vocabulary, vocab_path)
    stages["export"] = time.perf_counter() - t0

    manifest = build_manifest(
        corpus_path=corpus_path, corpus_format=corpus_format,
        norm_config={"stoplist_size": len(words), "stemming_enabled": stem,
                     "min_token_len": min_token_len,
                     "max_token_len": max_token_len,
                     "drop_numeric": not keep_numeric},
        vocab_config={"min_df": min_df, "max_df_ratio": max_df_ratio},
        lda_config={"n_topics": n_topics, "alpha": alpha, "beta": beta,
                    "iterations": iterations, "seed": seed},
        terms_per_topic=DEFAULT_N_TERMS,
        outputs={"snapshot": out, "vocabulary": vocab_path,
                 "manifest": manifest_path},
        corpus_stats={"total_records": stats.total_records,
                      "unique_comments": stats.unique_comments,
                      "dropped_duplicates": stats.dropped_duplicates,
                      "dropped_invalid": stats.dropped_invalid},
        dropped_empty=prepared.dropped_empty,
        stage_seconds={k: round(v, 3) for k, v in stages.items()})
    write_manifest(manifest_path, manifest)

    click.echo(f"final log-likelihood: {model.log_likelihood_trace[-1]:.2f}")
    click.echo(f"wrote {out}, {vocab_path}, {manifest_path}")


@main.command("topics")
@click.argument("snapshot_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--n-terms", default=DEFAULT_N_TERMS, show_default=True)
@click.option("--n-topics", default=20, show_default=True,
              help="How many top-ranked topics to export.")
@click.option("--labels", "labels_path", type=click.Path(), default=None,
              help="Label store to source topic labels from.")
@click.option("--out", default="topics.csv", show_default=True)
def cmd_topics(snapshot_path, n_terms, n_topics, labels_path, out):
    """Export the ranked topic table (rank, topic, PTW, label, terms)."""
    model, _ = snapshot.load_snapshot(snapshot_path)
    store = LabelStore(labels_path) if labels_path else None
    report.export_topics_csv(model, out, n_terms=n_terms, n_topics=n_topics,
                             label_store=store)
    click.echo(f"wrote {out}")


@main.command("trends")
@click.argument("snapshot_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--granularity", type=click.Choice(trends.GRANULARITIES),
              default="month", show_default=True)
@click.option("--topic", "topic_ids", type=int, multiple=True,
              help="Topic id to include (repeatable; default: all).")
@click.option("--hard-counts", is_flag=True,
              help="Count argmax-topic documents instead of theta mass.")
@click.option("--labels", "labels_path", type=click.Path(), default=None)
@click.option("--out", default="trends.csv", show_default=True)
def cmd_trends(snapshot_path, granularity, topic_ids, hard_counts,
               labels_path, out):
    """Export per-topic time series as CSV."""
    model, documents = snapshot.load_snapshot(snapshot_path)
    store = LabelStore(labels_path) if labels_path else None
    try:
        series = trends.topic_trend(model, documents, granularity,
                                    topics=topic_ids or None,
                                    hard_counts=hard_counts)
    except (trends.NoTimestampedDocuments, report.UnknownTopic) as exc:
        raise click.UsageError(str(exc))
    trends.export_trends_csv(series, out, label_store=store)
    click.echo(f"wrote {out}")


@main.command("cloud")
@click.argument("snapshot_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--topic", "topic_id", type=int, required=True)
@click.option("--n-terms", default=DEFAULT_N_TERMS, show_default=True)
@click.option("--out", default="cloud.json", show_default=True)
def cmd_cloud(snapshot_path, topic_id, n_terms, out):
    """Export word-cloud weights (max weight 1.0) for one topic."""
    model, _ = snapshot.load_snapshot(snapshot_path)
    try:
        report.export_wordcloud_json(model, topic_id, out, n_terms=n_terms)
    except report.UnknownTopic as exc:
        raise click.UsageError(str(exc))
    click.echo(f"wrote {out}")


@main.group("labels")
def cmd_labels():
    """Inspect or move topic-label annotations."""


@cmd_labels.command("import")
@click.argument("store_path", type=click.Path())
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
def cmd_labels_import(store_path, source):
    """Merge annotations from SOURCE (JSON list) into the store."""
    with open(source, encoding="utf-8") as fh:
        entries = json.load(fh)
    store = LabelStore(store_path)
    try:
        n = store.extend(entries)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"imported {n} annotations into {store_path}")


@cmd_labels.command("export")
@click.argument("store_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("dest", type=click.Path())
def cmd_labels_export(store_path, dest):
    """Write the full annotation history to DEST as a JSON list."""
    store = LabelStore(store_path)
    with open(dest, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(store.annotations, fh, indent=1)
        fh.write("\n")
    click.echo(f"wrote {dest}")


@cmd_labels.command("agreement")
@click.argument("store_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--topic", "topic_ids", type=int, multiple=True,
              help="Topic to evaluate (repeatable; default: all annotated).")
def cmd_labels_agreement(store_path, topic_ids):
    """Print pairwise exact-match agreement per topic and overall."""
    store = LabelStore(store_path)
    topics = list(topic_ids) or store.topic_ids()
    try:
        per_topic, overall = report.agreement(store, topics)
    except report.InsufficientAnnotators as exc:
        raise click.ClickException(str(exc))
    for topic_id, score in per_topic.items():
        click.echo(f"topic {topic_id}: {score:.4f}")
    click.echo(f"overall: {overall:.4f}")


@main.command("eval")
@click.option("--topics-true", default=5, show_default=True)
@click.option("--vocab", "n_vocab", default=200, show_default=True)
@click.option("--docs", "n_docs", default=1000, show_default=True)
@click.option("--doc-length", default=50.0, show_default=True)
@click.option("--fixed-length", is_flag=True,
              help="Fixed document length instead of Poisson.")
@click.option("--alpha-gen", default=0.1, show_default=True)
@click.option("--block-mass", default=0.8, show_default=True)
@click.option("--sweeps", default=500, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--seeds", "n_seeds", default=1, show_default=True,
              help="Number of consecutive seeds to run.")
@click.option("--threshold", default=0.85, show_default=True,
              help="Fail (exit non-zero) if mean matched cosine drops below this.")
@click.option("--out", default="eval.json", show_default=True)
def cmd_eval(topics_true, n_vocab, n_docs, doc_length, fixed_length,
             alpha_gen, block_mass, sweeps, seed, n_seeds, threshold, out):
    """Planted-topic recovery check: generate, train, match, score."""
    runs = []
    for s in range(seed, seed + n_seeds):
        spec = evaluation.SyntheticSpec(
            n_topics=topics_true, n_vocab=n_vocab, n_docs=n_docs,
            doc_length_mean=doc_length,
            doc_length_dist="fixed" if fixed_length else "poisson",
            alpha_gen=alpha_gen, block_mass=block_mass, seed=s)
        result = evaluation.run_planted_recovery(spec, train_iterations=sweeps)
        click.echo(f"seed {s}: mean matched cosine {result['mean_cosine']:.4f}, "
                   f"perplexity {result['perplexity']:.2f}")
        runs.append(result)
    mean_cosine = sum(r["mean_cosine"] for r in runs) / len(runs)
    payload = {"runs": runs, "mean_cosine": mean_cosine,
               "threshold": threshold, "passed": mean_cosine >= threshold}
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")
    click.echo(f"mean matched cosine over {len(runs)} seed(s): {mean_cosine:.4f} "
               f"(threshold {threshold})")
    click.echo(f"wrote {out}")
    if mean_cosine < threshold:
        raise click.exceptions.Exit(1)


@main.command("serve")
@click.argument("snapshot_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--labels", "labels_path", default="labels.json",
              show_default=True, help="Label store file (created if missing).")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8642, show_default=True)
@click.option("--read-only", is_flag=True, help="Reject label writes.")
@click.option("--ui-dir", type=click.Path(exists=True, file_okay=False),
              default=None, help="Static UI bundle to serve at /.")
def cmd_serve(snapshot_path, labels_path, host, port, read_only, ui_dir):
    """Serve the labeling API (and optionally the UI) over HTTP."""
    import uvicorn

    from topicmine.serve import build_app

    app = build_app(snapshot_path=snapshot_path, labels_path=labels_path,
                    read_only=read_only, ui_dir=ui_dir)
    click.echo(f"serving {snapshot_path} on http://{host}:{port}")
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
