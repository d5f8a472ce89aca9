import pytest
from hypothesis import given, strategies as st

from topicmine import porter
from topicmine.textnorm import (NormConfig, default_stoplist, load_stoplist,
                                normalize, remove_stopwords, tokenize)

# Hand-derived outputs of the published Porter algorithm (full run, all
# steps), frozen as the stemmer oracle.
PORTER_TABLE = {
    "caresses": "caress", "ponies": "poni", "ties": "ti", "caress": "caress",
    "cats": "cat", "flies": "fli",
    "feed": "feed", "agreed": "agre", "plastered": "plaster", "bled": "bled",
    "motoring": "motor", "sing": "sing",
    "conflated": "conflat", "troubled": "troubl", "sized": "size",
    "hopping": "hop", "tanned": "tan", "falling": "fall", "hissing": "hiss",
    "fizzed": "fizz", "failing": "fail", "filing": "file", "running": "run",
    "happy": "happi", "sky": "sky", "dying": "dy",
    "relational": "relat", "conditional": "condit", "rational": "ration",
    "valenci": "valenc", "hesitanci": "hesit", "digitizer": "digit",
    "conformabli": "conform", "radicalli": "radic", "differentli": "differ",
    "vileli": "vile", "analogousli": "analog", "vietnamization": "vietnam",
    "predication": "predic", "operator": "oper", "feudalism": "feudal",
    "decisiveness": "decis", "hopefulness": "hope", "callousness": "callous",
    "formaliti": "formal", "sensitiviti": "sensit", "sensibiliti": "sensibl",
    "triplicate": "triplic", "formative": "form", "formalize": "formal",
    "electriciti": "electr", "electrical": "electr", "hopeful": "hope",
    "goodness": "good", "generalization": "gener",
    "revival": "reviv", "allowance": "allow", "inference": "infer",
    "airliner": "airlin", "gyroscopic": "gyroscop", "adjustable": "adjust",
    "defensible": "defens", "irritant": "irrit", "replacement": "replac",
    "adjustment": "adjust", "dependent": "depend", "adoption": "adopt",
    "homologou": "homolog", "homologous": "homolog", "communism": "commun",
    "activate": "activ", "angulariti": "angular", "effective": "effect",
    "bowdlerize": "bowdler",
    "probate": "probat", "rate": "rate", "cease": "ceas",
    "controll": "control", "roll": "roll",
    "walking": "walk", "die": "die", "women": "women", "argument": "argument",
    "misogynist": "misogynist", "attractive": "attract",
}


@pytest.mark.parametrize("word,expected", sorted(PORTER_TABLE.items()))
def test_porter_frozen_table(word, expected):
    assert porter.stem(word) == expected


def test_porter_passthrough():
    assert porter.stem("ab") == "ab"  # length <= 2 untouched
    assert porter.stem("cafés") == "cafés"  # non-ASCII untouched
    assert porter.stem("x86") == "x86"  # non-alphabetic untouched


def test_tokenize_table_fragment():
    assert tokenize("I need to die.") == ["i", "need", "to", "die"]


def test_tokenize_strips_comma():
    assert tokenize("misogynist, sexist") == ["misogynist", "sexist"]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_internal_apostrophe():
    assert tokenize("Don't do that") == ["dont", "do", "that"]
    assert tokenize("rock'n'roll") == ["rocknroll"]
    assert tokenize("it’s fine") == ["its", "fine"]


def test_tokenize_leading_apostrophe_splits():
    assert tokenize("'ello there'") == ["ello", "there"]


def test_tokenize_punctuation_noise():
    assert tokenize("wow!!! so... good?!") == ["wow", "so", "good"]


def test_tokenize_keeps_digits_and_order():
    assert tokenize("year 2018, month 03") == ["year", "2018", "month", "03"]


def test_remove_stopwords():
    assert remove_stopwords(["i", "need", "to", "die"], {"i", "to"}) == \
        ["need", "die"]


def test_remove_stopwords_annihilation():
    assert remove_stopwords(["a", "b"], {"a", "b"}) == []


def test_remove_stopwords_empty_stoplist():
    tokens = ["keep", "every", "token"]
    assert remove_stopwords(tokens, frozenset()) == tokens


def test_default_stoplist_contents():
    words = default_stoplist()
    assert {"i", "need", "to", "the"} <= words
    assert all(w == w.lower() for w in words)
    assert {"women", "ugly", "hate"}.isdisjoint(words)  # content words survive
    assert len(words) >= 250


def test_normalize_table_fragment():
    # tokenize -> ["i","need","to","die"]; the shipped stoplist holds
    # i/need/to, leaving only "die"
    config = NormConfig()
    assert normalize("I need to die.", config) == ["die"]


def test_normalize_drops_numeric_and_short():
    config = NormConfig()
    assert normalize("2018 !!", config) == []
    assert normalize("a 12 xx", NormConfig(stoplist=frozenset())) == ["xx"]


def test_normalize_stage_order_filters_after_stopwords():
    config = NormConfig(stoplist=frozenset({"zz"}), min_token_len=3)
    assert normalize("zz abc de", config) == ["abc"]


def test_normalize_stemming_flag():
    config = NormConfig(stoplist=frozenset(), stemming_enabled=True)
    assert normalize("walking caresses", config) == ["walk", "caress"]


def test_normalize_idempotent_without_stemming():
    config = NormConfig()
    text = "The walls are closing in... 2019!"
    once = normalize(text, config)
    assert normalize(" ".join(once), config) == once


def test_normalize_max_token_len():
    config = NormConfig(stoplist=frozenset(), max_token_len=5)
    assert normalize("short loooooooong ok", config) == ["short", "ok"]


def test_config_validation():
    with pytest.raises(ValueError):
        NormConfig(min_token_len=0)
    with pytest.raises(ValueError):
        NormConfig(min_token_len=9, max_token_len=3)
    with pytest.raises(ValueError, match="lowercase"):
        NormConfig(stoplist=frozenset({"Mixed"}))


def test_load_stoplist(tmp_path):
    path = tmp_path / "stop.txt"
    path.write_text("# comment line\nThe\n\n  and \n", encoding="utf-8")
    assert load_stoplist(path) == {"the", "and"}


@given(st.text(max_size=200))
def test_normalize_invariants(text):
    config = NormConfig()
    out = normalize(text, config)
    assert all(t not in config.stoplist for t in out)
    assert all(config.min_token_len <= len(t) <= config.max_token_len
               for t in out)
    assert all(not t.isdigit() for t in out)
    assert len(out) <= len(tokenize(text))


@given(st.text(max_size=200))
def test_output_tokens_derive_from_input(text):
    # with stemming off, every output token appears in the lowercased,
    # apostrophe-stripped input
    flattened = text.lower().replace("'", "").replace("’", "")
    for token in normalize(text, NormConfig(stoplist=frozenset())):
        assert token in flattened


@given(st.lists(st.sampled_from(["the", "need", "wolf", "die", "2018", "xy"]),
                max_size=30))
def test_stopword_removal_is_subsequence(tokens):
    out = remove_stopwords(tokens, default_stoplist())
    it = iter(tokens)
    assert all(any(t == u for u in it) for t in out)
