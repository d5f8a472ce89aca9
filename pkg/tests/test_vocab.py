import pytest
from hypothesis import given, strategies as st

from topicmine.corpus import Comment
from topicmine.vocab import (Document, EmptyDocument, EmptyVocabulary,
                             Vocabulary, build_vocabulary, decode, encode,
                             load_vocabulary, save_vocabulary)


def comment(cid="c0"):
    return Comment(id=cid, user_id="u", text="placeholder")


def test_build_min_df_two():
    vocab = build_vocabulary([["a", "b"], ["a", "c"]], min_df=2,
                             max_df_ratio=1.0)
    assert vocab.terms == ("a",)
    assert vocab.doc_freq == (2,)


def test_build_min_df_one_orders_by_df_then_term():
    vocab = build_vocabulary([["a", "b"], ["a", "c"]], min_df=1,
                             max_df_ratio=1.0)
    assert vocab.terms == ("a", "b", "c")  # a first (df 2), then lexicographic
    assert vocab.id_of("a") == 0


def test_build_max_df_boundary():
    with pytest.raises(EmptyVocabulary):
        build_vocabulary([["a"], ["a"]], min_df=1, max_df_ratio=0.49)


def test_build_max_df_exact_boundary_inclusive():
    vocab = build_vocabulary([["a"], ["a"], ["b"], ["b"]], min_df=1,
                             max_df_ratio=0.5)
    assert set(vocab.terms) == {"a", "b"}


def test_build_df_counts_documents_not_tokens():
    vocab = build_vocabulary([["a", "a", "a"], ["b"]], min_df=1,
                             max_df_ratio=1.0)
    assert vocab.doc_freq[vocab.id_of("a")] == 1


def test_build_rejects_bad_thresholds():
    with pytest.raises(ValueError):
        build_vocabulary([["a"]], min_df=0)
    with pytest.raises(ValueError):
        build_vocabulary([["a"]], min_df=1, max_df_ratio=0.0)


def test_build_deterministic():
    streams = [["pear", "apple"], ["apple", "quince"], ["pear", "fig"]]
    a = build_vocabulary(streams, min_df=1, max_df_ratio=1.0)
    b = build_vocabulary(streams, min_df=1, max_df_ratio=1.0)
    assert a.terms == b.terms and a.doc_freq == b.doc_freq


def test_encode_drops_oov():
    vocab = Vocabulary(terms=("a", "b"), doc_freq=(2, 1))
    doc = encode(["a", "x", "b"], vocab, comment())
    assert doc.word_ids == (0, 1)
    assert doc.comment_id == "c0"


def test_encode_empty_document():
    vocab = Vocabulary(terms=("a", "b"), doc_freq=(2, 1))
    with pytest.raises(EmptyDocument):
        encode(["x"], vocab, comment())


def test_encode_preserves_multiplicity():
    vocab = Vocabulary(terms=("a",), doc_freq=(2,))
    doc = encode(["a", "a"], vocab, comment())
    assert doc.word_ids == (0, 0)
    assert len(doc) == 2


def test_document_requires_tokens():
    with pytest.raises(ValueError):
        Document(comment_id="x", word_ids=())


def test_vocabulary_rejects_duplicates():
    with pytest.raises(ValueError):
        Vocabulary(terms=("a", "a"), doc_freq=(1, 1))


def test_roundtrip_file(tmp_path):
    vocab = build_vocabulary([["a", "b"], ["a", "c"], ["b", "a"]],
                             min_df=1, max_df_ratio=1.0)
    path = tmp_path / "vocab.tsv"
    save_vocabulary(vocab, path)
    loaded = load_vocabulary(path)
    assert loaded == vocab
    first = path.read_text().splitlines()[0].split("\t")
    assert first == ["0", "a", "3"]


token_lists = st.lists(
    st.lists(st.sampled_from(["a", "b", "c", "d", "e"]), min_size=0, max_size=8),
    min_size=1, max_size=10)


@given(token_lists)
def test_encode_decode_roundtrip(streams):
    try:
        vocab = build_vocabulary(streams, min_df=1, max_df_ratio=1.0)
    except EmptyVocabulary:
        assert all(not s for s in streams)
        return
    for i, tokens in enumerate(streams):
        in_vocab = [t for t in tokens if t in vocab]
        if not in_vocab:
            continue
        doc = encode(tokens, vocab, comment(f"c{i}"))
        assert decode(doc, vocab) == in_vocab


@given(token_lists)
def test_ids_dense_and_df_ordered(streams):
    try:
        vocab = build_vocabulary(streams, min_df=1, max_df_ratio=1.0)
    except EmptyVocabulary:
        return
    assert len(set(vocab.terms)) == vocab.size
    freqs = list(vocab.doc_freq)
    assert freqs == sorted(freqs, reverse=True)
    docs = [set(s) for s in streams]
    for term, freq in zip(vocab.terms, vocab.doc_freq):
        assert freq == sum(term in d for d in docs)
