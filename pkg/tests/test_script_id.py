import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from textspot._script_table import RANGES, UNICODE_VERSION
from textspot.errors import EmptyWord
from textspot.script_id import (
    ScriptClass,
    classify_char,
    image_cooccurrence,
    script_confusion,
    word_cooccurrence,
    word_script,
)
from textspot.synthgen import DEFAULT_WORDLISTS
from toy_corpus import CJK, DIG, HANG, HIR, LAT, SYM, TOY, expected_image_counts, expected_word_counts, words

S = ScriptClass


@pytest.mark.parametrize("ch,cls", [
    ("A", S.LATIN), ("7", S.DIGIT), ("漢", S.CJK), ("あ", S.HIRAGANA), ("カ", S.KATAKANA),
    ("\u2014", S.SYMBOL), ("ع", S.ARABIC), ("ব", S.BENGALI), ("한", S.HANGUL), ("٣", S.DIGIT),
    ("৩", S.DIGIT), (" ", S.SYMBOL), ("é", S.LATIN), ("ー", S.SYMBOL), ("Ω", S.SYMBOL),
])
def test_classify_char(ch, cls):
    assert classify_char(ch) is cls
    assert classify_char(ord(ch)) is cls


def test_table_is_sorted_and_disjoint():
    assert UNICODE_VERSION.count(".") == 2
    for (a0, a1, _), (b0, _, _) in zip(RANGES, RANGES[1:]):
        assert a0 <= a1 < b0
    assert all(name in S.__members__ for *_, name in RANGES)


def test_table_matches_regex_script_property():
    regex = pytest.importorskip("regex")
    pat = regex.compile(
        r"(\p{Nd})|(\p{Script=Latin})|(\p{Script=Arabic})|(\p{Script=Bengali})|(\p{Script=Hangul})"
        r"|(\p{Script=Han})|(\p{Script=Hiragana})|(\p{Script=Katakana})|(\p{Cn})"
    )
    order = [S.DIGIT, S.LATIN, S.ARABIC, S.BENGALI, S.HANGUL, S.CJK, S.HIRAGANA, S.KATAKANA, None]
    mismatches = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        m = pat.match(chr(cp))
        expected = S.SYMBOL if m is None else order[m.lastindex - 1]
        if expected is not None and classify_char(cp) is not expected:
            mismatches.append(hex(cp))
    assert mismatches == []


@pytest.mark.parametrize("word,cls", [
    ("Hello", S.LATIN), ("365원", S.HANGUL), ("90008", S.DIGIT), ("5,50", S.DIGIT),
    ("--", S.SYMBOL), ("ab漢字", S.LATIN), ("a漢", S.LATIN), ("漢a字", S.CJK), ("1-", S.DIGIT),
])
def test_word_script(word, cls):
    assert word_script(word) is cls


def test_empty_word():
    with pytest.raises(EmptyWord):
        word_script("")


chars = st.sampled_from(list("Hiسلاম한글漢字あカ7٣-!é"))


@given(st.lists(chars, min_size=1, max_size=8), st.randoms())
def test_word_script_permutation_invariant(cs, rnd):
    shuffled = cs[:]
    rnd.shuffle(shuffled)
    assert word_script("".join(cs)) is word_script("".join(shuffled))


@given(st.sampled_from(sorted(DEFAULT_WORDLISTS)), st.integers(1, 6))
def test_uniform_word_takes_char_class(script, n):
    w = DEFAULT_WORDLISTS[script][0][:n]
    if len({classify_char(c) for c in w}) == 1:
        assert word_script(w) is classify_char(w[0])


def test_image_cooccurrence_examples():
    m = image_cooccurrence([words("Hi")])
    assert m[LAT, LAT] == 1 and m.sum() == 1
    m = image_cooccurrence([words("Hi", "7")])
    assert m[LAT, DIG] == m[DIG, LAT] == m[LAT, LAT] == m[DIG, DIG] == 1
    assert m.sum() == 4


def test_toy_corpus_image_counts():
    assert np.array_equal(image_cooccurrence(TOY), expected_image_counts())


def test_toy_corpus_word_counts():
    assert np.array_equal(word_cooccurrence(TOY), expected_word_counts())


def test_dont_care_flag():
    corpus = [words("###")]
    assert not word_cooccurrence(corpus).any()
    assert not image_cooccurrence(corpus).any()
    assert image_cooccurrence(corpus, include_dont_care=True)[SYM, SYM] == 1


def test_word_row_examples():
    m = word_cooccurrence([words("ab1")])
    assert m[0, LAT] == 2 and m[0, DIG] == 1 and m.sum() == 3


def test_script_confusion():
    same = ["Hello", "안녕", "漢字"]
    m = script_confusion(same, same)
    assert np.array_equal(m, np.diag(np.diag(m))) and m.sum() == 3
    m = script_confusion(["Hello"], ["안녕"])
    assert m[LAT, HANG] == 1 and m.sum() == 1
    m = script_confusion(["Hello", "Hello", "漢字", "365원", "سلام"], ["Hello", "안녕", "かな", "365", ""])
    expected = np.zeros((9, 9), dtype=int)
    expected[LAT, LAT] = expected[LAT, HANG] = expected[CJK, HIR] = expected[HANG, DIG] = 1
    assert np.array_equal(m, expected)
    m = script_confusion(["Hello", "漢字"], ["字"], pairing=[(1, 0)])
    assert m[CJK, CJK] == 1 and m.sum() == 1


def random_corpus(rng):
    pool = [w for ws in DEFAULT_WORDLISTS.values() for w in ws] + ["7", "12", "A-1", "365원", "###", "!"]
    return [words(*[pool[int(i)] for i in rng.integers(0, len(pool), int(rng.integers(0, 6)))])
            for _ in range(int(rng.integers(1, 8)))]


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1))
def test_corpus_invariants(seed):
    corpus = random_corpus(np.random.default_rng(seed))
    m = image_cooccurrence(corpus)
    assert np.array_equal(m, m.T)
    d = np.diag(m)
    assert np.all(m <= np.minimum.outer(d, d))
    w = word_cooccurrence(corpus)
    row_chars = np.zeros(5, dtype=int)
    group = {S.LATIN: 0, S.ARABIC: 1, S.BENGALI: 2, S.HANGUL: 3, S.CJK: 4, S.HIRAGANA: 4, S.KATAKANA: 4}
    for image in corpus:
        for a in image:
            if not a.dont_care and word_script(a.transcription) in group:
                row_chars[group[word_script(a.transcription)]] += len(a.transcription)
    assert np.array_equal(w.sum(axis=1), row_chars)
