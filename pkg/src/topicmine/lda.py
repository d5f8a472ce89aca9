"""LDA trained by collapsed Gibbs sampling.

Topic assignments are resampled token by token from

    p(z = k | z_-i, w)  ∝  (n_dk + alpha) * (n_kw + beta) / (n_k + V*beta)

where the counts exclude the token being resampled.  theta and phi are
point estimates from the final sweep's counts.
"""

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.special import gammaln

from topicmine import kernels
from topicmine.vocab import Document, Vocabulary

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 50


@dataclass(frozen=True)
class LdaConfig:
    n_topics: int = 100
    alpha: float = 0.05
    beta: float = 0.01
    iterations: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.n_topics < 1:
            raise ValueError("n_topics must be >= 1")
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")


@dataclass
class SamplerState:
    """Token-topic assignments plus the count matrices they induce.

    Flattened layout: token t of the corpus belongs to document
    ``doc_of_token[t]`` and word ``word_of_token[t]``; document d owns
    tokens ``doc_offsets[d]:doc_offsets[d+1]``.  Mutated by exactly one
    thread.
    """

    n_topics: int
    n_vocab: int
    alpha: float
    beta: float
    z: np.ndarray
    doc_of_token: np.ndarray
    word_of_token: np.ndarray
    doc_offsets: np.ndarray
    n_dk: np.ndarray
    n_kw: np.ndarray
    n_k: np.ndarray
    n_d: np.ndarray
    rng: np.random.Generator

    @property
    def n_docs(self) -> int:
        return self.n_dk.shape[0]

    @property
    def total_tokens(self) -> int:
        return self.z.shape[0]

    def doc_assignments(self, d: int) -> np.ndarray:
        """Topic assignments of document d's tokens, in token order."""
        return self.z[self.doc_offsets[d]:self.doc_offsets[d + 1]]


@dataclass(frozen=True)
class LdaModel:
    """Immutable trained model: point estimates, final counts, and the
    final token-topic assignments in (document, position) order."""

    config: LdaConfig
    vocabulary: Vocabulary
    theta: np.ndarray
    phi: np.ndarray
    n_dk: np.ndarray
    n_kw: np.ndarray
    n_k: np.ndarray
    assignments: np.ndarray
    log_likelihood_trace: tuple[float, ...] = field(default=())

    @property
    def n_docs(self) -> int:
        return self.theta.shape[0]

    @property
    def n_topics(self) -> int:
        return self.theta.shape[1]

    @property
    def n_vocab(self) -> int:
        return self.phi.shape[1]


def _flatten(documents: Sequence[Document], n_vocab: int):
    lengths = np.array([len(d) for d in documents], dtype=np.int32)
    offsets = np.zeros(len(documents) + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])
    total = int(offsets[-1])
    doc_of_token = np.repeat(np.arange(len(documents), dtype=np.int32), lengths)
    word_of_token = np.fromiter(
        (w for d in documents for w in d.word_ids), dtype=np.int32, count=total)
    if total and word_of_token.max() >= n_vocab:
        raise ValueError("document contains a word id outside the vocabulary")
    if total and word_of_token.min() < 0:
        raise ValueError("negative word id")
    return doc_of_token, word_of_token, offsets, lengths


def init_assignments(documents: Sequence[Document], config: LdaConfig,
                     n_vocab: int,
                     rng: np.random.Generator | None = None) -> SamplerState:
    """Assign every token a uniformly drawn topic and build the counts."""
    if not documents:
        raise ValueError("cannot initialize on an empty corpus")
    if rng is None:
        rng = np.random.default_rng(config.seed)
    doc_of_token, word_of_token, offsets, lengths = _flatten(documents, n_vocab)
    k = config.n_topics
    z = rng.integers(0, k, size=doc_of_token.shape[0], dtype=np.int32)

    n_docs = len(documents)
    n_dk = np.zeros((n_docs, k), dtype=np.int32)
    n_kw = np.zeros((k, n_vocab), dtype=np.int32)
    n_k = np.zeros(k, dtype=np.int32)
    np.add.at(n_dk, (doc_of_token, z), 1)
    np.add.at(n_kw, (z, word_of_token), 1)
    np.add.at(n_k, z, 1)

    return SamplerState(
        n_topics=k, n_vocab=n_vocab, alpha=config.alpha, beta=config.beta,
        z=z, doc_of_token=doc_of_token, word_of_token=word_of_token,
        doc_offsets=offsets, n_dk=n_dk, n_kw=n_kw, n_k=n_k,
        n_d=lengths.copy(), rng=rng)


def full_conditional(state: SamplerState, d: int, i: int) -> np.ndarray:
    """Normalized topic distribution for token i of document d, with the
    token's own count excluded."""
    t = int(state.doc_offsets[d]) + i
    if not state.doc_offsets[d] <= t < state.doc_offsets[d + 1]:
        raise IndexError(f"document {d} has no token {i}")
    w = state.word_of_token[t]
    k_old = state.z[t]

    ndk = state.n_dk[d].astype(np.float64)
    nkw = state.n_kw[:, w].astype(np.float64)
    nk = state.n_k.astype(np.float64)
    ndk[k_old] -= 1
    nkw[k_old] -= 1
    nk[k_old] -= 1

    weights = (ndk + state.alpha) * (nkw + state.beta) \
        / (nk + state.n_vocab * state.beta)
    return weights / weights.sum()


def sweep(state: SamplerState, n_sweeps: int = 1) -> SamplerState:
    """Resample every token n_sweeps times in (document, position) order."""
    kernels.run_sweeps(state.z, state.doc_of_token, state.word_of_token,
                       state.n_dk, state.n_kw, state.n_k,
                       state.alpha, state.beta,
                       state.rng.bit_generator, n_sweeps)
    return state


def check_count_invariants(state: SamplerState) -> None:
    """Raise ValueError unless all four count invariants hold exactly."""
    if not (state.n_dk.sum(axis=1) == state.n_d).all():
        raise ValueError("per-document topic counts do not sum to N_d")
    if not (state.n_kw.sum(axis=1) == state.n_k).all():
        raise ValueError("topic-word counts do not sum to n_k")
    if state.n_k.sum() != state.total_tokens:
        raise ValueError("topic totals do not sum to the corpus token count")
    if (state.n_dk < 0).any() or (state.n_kw < 0).any() or (state.n_k < 0).any():
        raise ValueError("negative count")


def log_likelihood(state: SamplerState) -> float:
    """Collapsed log p(w, z | alpha, beta) via the Dirichlet-multinomial
    closed form over the current counts."""
    k, v = state.n_topics, state.n_vocab
    alpha, beta = state.alpha, state.beta
    n_docs = state.n_dk.shape[0]

    doc_part = (n_docs * (gammaln(k * alpha) - k * gammaln(alpha))
                + gammaln(state.n_dk + alpha).sum()
                - gammaln(state.n_d + k * alpha).sum())
    topic_part = (k * (gammaln(v * beta) - v * gammaln(beta))
                  + gammaln(state.n_kw + beta).sum()
                  - gammaln(state.n_k + v * beta).sum())
    return float(doc_part + topic_part)


def estimate_theta(n_dk: np.ndarray, n_d: np.ndarray, alpha: float) -> np.ndarray:
    k = n_dk.shape[1]
    return (n_dk + alpha) / (n_d[:, None] + k * alpha)


def estimate_phi(n_kw: np.ndarray, n_k: np.ndarray, beta: float) -> np.ndarray:
    v = n_kw.shape[1]
    return (n_kw + beta) / (n_k[:, None] + v * beta)


def train(documents: Sequence[Document], config: LdaConfig,
          vocabulary: Vocabulary) -> LdaModel:
    """Run ``config.iterations`` Gibbs sweeps and return point estimates
    from the final state, with a per-sweep log-likelihood trace."""
    if not documents:
        raise ValueError("cannot train on an empty corpus")
    state = init_assignments(documents, config, vocabulary.size)
    trace = []
    for it in range(1, config.iterations + 1):
        sweep(state)
        trace.append(log_likelihood(state))
        if it % PROGRESS_EVERY == 0 or it == config.iterations:
            logger.info("sweep %d/%d log-likelihood %.2f",
                        it, config.iterations, trace[-1])
    theta = estimate_theta(state.n_dk, state.n_d, config.alpha)
    phi = estimate_phi(state.n_kw, state.n_k, config.beta)
    return LdaModel(config=config, vocabulary=vocabulary, theta=theta,
                    phi=phi, n_dk=state.n_dk, n_kw=state.n_kw, n_k=state.n_k,
                    assignments=state.z, log_likelihood_trace=tuple(trace))
