import json

import numpy as np
import pytest

from topicmine.snapshot import load_snapshot, save_snapshot


def test_roundtrip_exact(tmp_path, toy_model):
    model, documents = toy_model
    path = tmp_path / "model.json"
    save_snapshot(path, model, documents)
    loaded, loaded_docs = load_snapshot(path)

    assert loaded.theta.tobytes() == model.theta.tobytes()
    assert loaded.phi.tobytes() == model.phi.tobytes()
    assert (loaded.n_dk == model.n_dk).all()
    assert (loaded.n_kw == model.n_kw).all()
    assert (loaded.assignments == model.assignments).all()
    assert loaded.log_likelihood_trace == model.log_likelihood_trace
    assert loaded.config == model.config
    assert loaded.vocabulary == model.vocabulary
    assert loaded_docs == list(documents)


def test_timestamps_preserved(tmp_path, toy_model):
    model, documents = toy_model
    path = tmp_path / "model.json"
    save_snapshot(path, model, documents)
    _, loaded_docs = load_snapshot(path)
    assert all(a.timestamp == b.timestamp
               for a, b in zip(loaded_docs, documents))


def test_write_is_deterministic(tmp_path, toy_model):
    model, documents = toy_model
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    save_snapshot(a, model, documents)
    save_snapshot(b, model, documents)
    assert a.read_bytes() == b.read_bytes()


def test_rejects_wrong_format(tmp_path):
    path = tmp_path / "bogus.json"
    path.write_text(json.dumps({"format": "something-else", "version": 1}))
    with pytest.raises(ValueError, match="not a topicmine-snapshot"):
        load_snapshot(path)


def test_rejects_unknown_version(tmp_path, toy_model):
    model, documents = toy_model
    path = tmp_path / "model.json"
    save_snapshot(path, model, documents)
    payload = json.loads(path.read_text())
    payload["version"] = 999
    path.write_text(json.dumps(payload))
    with pytest.raises(ValueError, match="version"):
        load_snapshot(path)


def test_rejects_inconsistent_counts(tmp_path, toy_model):
    model, documents = toy_model
    path = tmp_path / "model.json"
    save_snapshot(path, model, documents)
    payload = json.loads(path.read_text())
    payload["counts"]["n_k"][0] += 1
    path.write_text(json.dumps(payload))
    with pytest.raises(ValueError, match="token totals"):
        load_snapshot(path)
