"""Corpus topic mining: comment ingestion, normalization, LDA by
collapsed Gibbs sampling, topic ranking and trends, and a labeling
workflow."""

__version__ = "0.1.0"

from topicmine.corpus import Comment, CorpusStats, load_corpus, parse_comment_record
from topicmine.kernels import BACKEND as KERNEL_BACKEND
from topicmine.lda import LdaConfig, LdaModel, SamplerState, train
from topicmine.textnorm import NormConfig, normalize, tokenize
from topicmine.vocab import Document, Vocabulary, build_vocabulary, encode

__all__ = [
    "Comment", "CorpusStats", "load_corpus", "parse_comment_record",
    "KERNEL_BACKEND", "LdaConfig", "LdaModel", "SamplerState", "train",
    "NormConfig", "normalize", "tokenize",
    "Document", "Vocabulary", "build_vocabulary", "encode",
    "__version__",
]
