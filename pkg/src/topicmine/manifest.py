"""Run manifests: enough recorded detail to reproduce a training run."""

import hashlib
import json
import os

MANIFEST_VERSION = 1


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def config_hash(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def build_manifest(*, corpus_path, corpus_format, norm_config: dict,
                   vocab_config: dict, lda_config: dict,
                   terms_per_topic: int, outputs: dict,
                   corpus_stats: dict, dropped_empty: int,
                   stage_seconds: dict) -> dict:
    configs = {"norm": norm_config, "vocab": vocab_config, "lda": lda_config,
               "report": {"terms_per_topic": terms_per_topic}}
    return {
        "version": MANIFEST_VERSION,
        "seed": lda_config["seed"],
        "inputs": {
            "corpus": {
                "path": os.fspath(corpus_path),
                "format": corpus_format,
                "sha256": file_digest(corpus_path),
            }
        },
        "configs": configs,
        "config_hashes": {name: config_hash(cfg)
                          for name, cfg in configs.items()},
        "outputs": {name: os.fspath(p) for name, p in outputs.items()},
        "corpus_stats": corpus_stats,
        "dropped_empty_documents": dropped_empty,
        "stage_seconds": stage_seconds,
    }


def write_manifest(path, manifest: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")
