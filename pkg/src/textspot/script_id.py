"""Unicode script classification and corpus script statistics.

Characters are classified from a vendored codepoint-range table (see
``_script_table.UNICODE_VERSION``) so results do not depend on the Python
build. Words are scripted by majority vote over their characters.
"""
from __future__ import annotations

import bisect
import enum
from collections import Counter
from typing import Iterable, Sequence

import numpy as np

from ._script_table import RANGES, UNICODE_VERSION
from .errors import EmptyWord


class ScriptClass(enum.IntEnum):
    # value order doubles as the majority-vote tie-break order
    LATIN = 0
    ARABIC = 1
    BENGALI = 2
    HANGUL = 3
    CJK = 4
    HIRAGANA = 5
    KATAKANA = 6
    DIGIT = 7
    SYMBOL = 8

    @property
    def abbrev(self) -> str:
        return _ABBREV[self]


_ABBREV = {
    ScriptClass.LATIN: "LAT",
    ScriptClass.ARABIC: "ARA",
    ScriptClass.BENGALI: "BENG",
    ScriptClass.HANGUL: "HANG",
    ScriptClass.CJK: "CJK",
    ScriptClass.HIRAGANA: "HIR",
    ScriptClass.KATAKANA: "KAT",
    ScriptClass.DIGIT: "DIG",
    ScriptClass.SYMBOL: "SYM",
}

FULL_SCRIPTS = tuple(c for c in ScriptClass if c not in (ScriptClass.DIGIT, ScriptClass.SYMBOL))
CKH = frozenset({ScriptClass.CJK, ScriptClass.HIRAGANA, ScriptClass.KATAKANA})

# rows of the word-level co-occurrence table
WORD_ROWS = ("LAT", "ARA", "BENG", "HANG", "CKH")
_WORD_ROW = {
    ScriptClass.LATIN: 0,
    ScriptClass.ARABIC: 1,
    ScriptClass.BENGALI: 2,
    ScriptClass.HANGUL: 3,
    ScriptClass.CJK: 4,
    ScriptClass.HIRAGANA: 4,
    ScriptClass.KATAKANA: 4,
}

_STARTS = [r[0] for r in RANGES]
_CLASSES = [ScriptClass[r[2]] for r in RANGES]

__all__ = [
    "CKH",
    "ScriptClass",
    "UNICODE_VERSION",
    "classify_char",
    "image_cooccurrence",
    "script_confusion",
    "word_cooccurrence",
    "word_script",
]


def classify_char(c: str | int) -> ScriptClass:
    cp = c if isinstance(c, int) else ord(c)
    i = bisect.bisect_right(_STARTS, cp) - 1
    if i >= 0 and cp <= RANGES[i][1]:
        return _CLASSES[i]
    return ScriptClass.SYMBOL


def word_script(s: str) -> ScriptClass:
    """Majority script of a word; digits and symbols only vote when no full script is present."""
    if not s:
        raise EmptyWord("cannot assign a script to an empty word")
    counts = Counter(classify_char(c) for c in s)
    full = {k: v for k, v in counts.items() if k in FULL_SCRIPTS}
    pool = full or counts
    return min(pool, key=lambda k: (-pool[k], k))


def _care_words(words, include_dont_care):
    for w in words:
        if w.dont_care and not include_dont_care:
            continue
        yield w.transcription


def image_cooccurrence(corpus: Iterable[Sequence], include_dont_care: bool = False) -> np.ndarray:
    """9x9 counts of script pairs present together in an image (diagonal: images with that script)."""
    m = np.zeros((9, 9), dtype=np.int64)
    for words in corpus:
        present = sorted({classify_char(c) for t in _care_words(words, include_dont_care) for c in t})
        for a in present:
            for b in present:
                m[a, b] += 1
    return m


def word_cooccurrence(corpus: Iterable[Sequence], include_dont_care: bool = False) -> np.ndarray:
    """5x9 counts: row is the word's script group, column each character's script."""
    m = np.zeros((len(WORD_ROWS), 9), dtype=np.int64)
    for words in corpus:
        for t in _care_words(words, include_dont_care):
            if not t:
                continue
            row = _WORD_ROW.get(word_script(t))
            if row is None:
                continue
            for c in t:
                m[row, classify_char(c)] += 1
    return m


def script_confusion(gt: Sequence[str], rec: Sequence[str], pairing=None) -> np.ndarray:
    """9x9 confusion of word scripts, GT in rows.

    ``pairing`` is a sequence of (gt index, rec index); by default words are
    paired by position. Pairs with an empty side are skipped.
    """
    if pairing is None:
        if len(gt) != len(rec):
            raise ValueError("gt and rec differ in length and no pairing was given")
        pairing = [(i, i) for i in range(len(gt))]
    m = np.zeros((9, 9), dtype=np.int64)
    for i, j in pairing:
        if gt[i] and rec[j]:
            m[word_script(gt[i]), word_script(rec[j])] += 1
    return m


def format_matrix(m: np.ndarray, rows: Sequence[str], cols: Sequence[str]) -> str:
    lines = ["\t" + "\t".join(cols)]
    for name, r in zip(rows, m):
        lines.append(name + "\t" + "\t".join(str(int(v)) for v in r))
    return "\n".join(lines) + "\n"


CLASS_ABBREVS = tuple(c.abbrev for c in ScriptClass)
