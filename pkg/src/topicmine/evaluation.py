"""Verification machinery: planted-topic synthetic corpora, topic
matching under label switching, and perplexity."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from topicmine import lda
from topicmine.lda import LdaConfig, LdaModel
from topicmine.vocab import Document, Vocabulary


class DimensionMismatch(ValueError):
    """Topic matrices must share the vocabulary dimension."""


@dataclass(frozen=True)
class SyntheticSpec:
    """Planted-topic corpus generator parameters.

    Each planted topic puts ``block_mass`` of its probability uniformly
    on its own block of ~V/K words and the rest uniformly elsewhere,
    which keeps topics well separated.
    """

    n_topics: int = 5
    n_vocab: int = 200
    n_docs: int = 1000
    doc_length_mean: float = 50.0
    doc_length_dist: str = "poisson"  # or "fixed"
    alpha_gen: float = 0.1
    block_mass: float = 0.8
    seed: int = 0

    def __post_init__(self):
        if min(self.n_topics, self.n_vocab, self.n_docs) < 1:
            raise ValueError("n_topics, n_vocab and n_docs must be >= 1")
        if self.doc_length_mean <= 0 or self.alpha_gen <= 0:
            raise ValueError("doc_length_mean and alpha_gen must be positive")
        if not 0 < self.block_mass <= 1:
            raise ValueError("block_mass must be in (0, 1]")
        if self.doc_length_dist not in ("poisson", "fixed"):
            raise ValueError("doc_length_dist must be 'poisson' or 'fixed'")
        if self.n_vocab < self.n_topics:
            raise ValueError("need at least one vocabulary word per topic")


def planted_phi(spec: SyntheticSpec) -> np.ndarray:
    """Block-structured topic-word distributions; rows sum to 1."""
    k, v = spec.n_topics, spec.n_vocab
    phi = np.zeros((k, v))
    blocks = np.array_split(np.arange(v), k)
    for topic, block in enumerate(blocks):
        rest = v - block.size
        if rest == 0:
            phi[topic] = 1.0 / v
            continue
        phi[topic, :] = (1.0 - spec.block_mass) / rest
        phi[topic, block] = spec.block_mass / block.size
    return phi


def generate_synthetic_corpus(spec: SyntheticSpec
                              ) -> tuple[list[Document], np.ndarray, np.ndarray]:
    """Draw documents from the generative story: theta ~ Dirichlet,
    z ~ theta per token, w ~ phi_z.  Returns (documents, theta, phi)."""
    rng = np.random.default_rng(spec.seed)
    phi = planted_phi(spec)
    k = spec.n_topics
    theta = rng.dirichlet(np.full(k, spec.alpha_gen), size=spec.n_docs)
    if spec.doc_length_dist == "fixed":
        lengths = np.full(spec.n_docs, int(round(spec.doc_length_mean)))
    else:
        lengths = rng.poisson(spec.doc_length_mean, size=spec.n_docs)
    lengths = np.maximum(lengths, 1)  # a Document may not be empty

    documents = []
    for d in range(spec.n_docs):
        length = int(lengths[d])
        z = rng.choice(k, size=length, p=theta[d])
        words = np.empty(length, dtype=np.int64)
        for topic in range(k):
            mask = z == topic
            if mask.any():
                words[mask] = rng.choice(spec.n_vocab, size=int(mask.sum()),
                                         p=phi[topic])
        documents.append(Document(comment_id=f"synth-{d:06d}",
                                  word_ids=tuple(int(w) for w in words)))
    return documents, theta, phi


def vocabulary_for(documents: Sequence[Document], n_vocab: int) -> Vocabulary:
    """Synthetic vocabulary (w0000-style terms) with true doc frequencies."""
    df = np.zeros(n_vocab, dtype=np.int64)
    for doc in documents:
        df[list(set(doc.word_ids))] += 1
    width = len(str(n_vocab - 1))
    terms = tuple(f"w{i:0{width}d}" for i in range(n_vocab))
    return Vocabulary(terms=terms, doc_freq=tuple(int(f) for f in df))


@dataclass(frozen=True)
class TopicMatching:
    pairs: tuple[tuple[int, int, float], ...]  # (recovered, true, cosine)
    unmatched_recovered: tuple[int, ...]
    unmatched_true: tuple[int, ...]

    @property
    def mean_cosine(self) -> float:
        return float(np.mean([c for _, _, c in self.pairs]))


def match_topics(recovered_phi: np.ndarray, true_phi: np.ndarray) -> TopicMatching:
    """Greedy maximum-cosine matching without replacement, handling LDA
    label switching; unmatched topics are reported when K differs."""
    recovered_phi = np.asarray(recovered_phi, dtype=np.float64)
    true_phi = np.asarray(true_phi, dtype=np.float64)
    if recovered_phi.shape[1] != true_phi.shape[1]:
        raise DimensionMismatch(
            f"vocabulary dimension {recovered_phi.shape[1]} != {true_phi.shape[1]}")
    rec_norm = recovered_phi / np.linalg.norm(recovered_phi, axis=1, keepdims=True)
    true_norm = true_phi / np.linalg.norm(true_phi, axis=1, keepdims=True)
    cosine = rec_norm @ true_norm.T

    available = cosine.copy()
    pairs = []
    for _ in range(min(cosine.shape)):
        r, t = np.unravel_index(np.argmax(available), available.shape)
        pairs.append((int(r), int(t), float(cosine[r, t])))
        available[r, :] = -np.inf
        available[:, t] = -np.inf
    matched_r = {r for r, _, _ in pairs}
    matched_t = {t for _, t, _ in pairs}
    return TopicMatching(
        pairs=tuple(sorted(pairs)),
        unmatched_recovered=tuple(r for r in range(cosine.shape[0])
                                  if r not in matched_r),
        unmatched_true=tuple(t for t in range(cosine.shape[1])
                             if t not in matched_t))


def perplexity(model: LdaModel, documents: Sequence[Document]) -> float:
    """exp of the negative mean per-token log-likelihood under the
    model's point estimates; documents must be the training documents."""
    if len(documents) != model.n_docs:
        raise ValueError("documents are not the model's training documents")
    total_log = 0.0
    total_tokens = 0
    for d, doc in enumerate(documents):
        ids = np.asarray(doc.word_ids)
        if ids.max() >= model.n_vocab or ids.min() < 0:
            raise ValueError(
                f"document {doc.comment_id!r} has out-of-vocabulary word ids")
        token_probs = model.theta[d] @ model.phi[:, ids]
        total_log += float(np.log(token_probs).sum())
        total_tokens += len(ids)
    return float(np.exp(-total_log / total_tokens))


def run_planted_recovery(spec: SyntheticSpec, train_iterations: int = 500,
                         train_alpha: float | None = None,
                         train_beta: float = 0.01,
                         train_seed: int | None = None) -> dict:
    """Generate a planted corpus, train at K = K_true, and score the
    recovered topics against the planted ones.

    Training alpha defaults to the generator's alpha so the model family
    matches the data; the sampler seed defaults to the corpus seed.
    """
    documents, _, true_phi = generate_synthetic_corpus(spec)
    vocabulary = vocabulary_for(documents, spec.n_vocab)
    config = LdaConfig(
        n_topics=spec.n_topics,
        alpha=spec.alpha_gen if train_alpha is None else train_alpha,
        beta=train_beta, iterations=train_iterations,
        seed=spec.seed if train_seed is None else train_seed)
    model = lda.train(documents, config, vocabulary)
    matching = match_topics(model.phi, true_phi)
    return {
        "spec": {
            "n_topics": spec.n_topics, "n_vocab": spec.n_vocab,
            "n_docs": spec.n_docs, "doc_length_mean": spec.doc_length_mean,
            "doc_length_dist": spec.doc_length_dist,
            "alpha_gen": spec.alpha_gen, "block_mass": spec.block_mass,
            "seed": spec.seed,
        },
        "train": {"alpha": config.alpha, "beta": config.beta,
                  "iterations": config.iterations, "seed": config.seed},
        "matched_cosines": [c for _, _, c in matching.pairs],
        "mean_cosine": matching.mean_cosine,
        "perplexity": perplexity(model, documents),
        "log_likelihood_trace": {
            "first": model.log_likelihood_trace[0],
            "last": model.log_likelihood_trace[-1],
            "sweeps": len(model.log_likelihood_trace),
        },
    }
