"""Desk-scale synthetic scenes with known word geometry.

Words are placed on a flat canvas by rejection sampling and drawn as one
flat-intensity cell per character along the reading direction. Every draw
comes from ``random.Random(seed).random()`` (Mersenne Twister), whose output
is fixed across platforms and Python versions.
"""
from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import PlacementFailure, UnknownCharacter, ValidationError
from .geometry import DEFAULT_SCALE, DEFAULT_SHRINK, GeometryMap, encode_box, intersection_area
from .model_io import Alphabet, WordAnnotation
from .script_id import ScriptClass

MAX_ATTEMPTS = 1000
BACKGROUND = 0.0

DEFAULT_WORDLISTS = {
    ScriptClass.LATIN: ("Hello", "Street", "Cafe", "OPEN", "Taxi", "Hotel"),
    ScriptClass.ARABIC: ("سلام", "مرحبا", "شارع", "مطعم"),
    ScriptClass.BENGALI: ("বাংলা", "ঢাকা", "দোকান"),
    ScriptClass.HANGUL: ("안녕", "서울", "식당", "약국"),
    ScriptClass.CJK: ("漢字", "中文", "出口", "银行"),
    ScriptClass.HIRAGANA: ("ひらがな", "すし", "ようこそ"),
    ScriptClass.KATAKANA: ("カタカナ", "ホテル", "タクシ"),
}


@dataclass(frozen=True)
class SceneSpec:
    width: int = 256
    height: int = 256
    words: int = 5
    wordlists: dict = field(default_factory=lambda: dict(DEFAULT_WORDLISTS))
    angle_range: tuple[float, float] = (-math.pi / 4, math.pi / 4)
    angles: tuple[float, ...] | None = None  # if set, draw from this set instead of the range
    vertical_probability: float = 0.0
    seed: int = 0
    char_height: tuple[float, float] = (16.0, 28.0)
    char_aspect: float = 0.8
    scale: float = DEFAULT_SCALE
    shrink: float = DEFAULT_SHRINK

    def __post_init__(self):
        if self.words < 0:
            raise ValidationError("word count must be >= 0")
        if not 0.0 <= self.vertical_probability <= 1.0:
            raise ValidationError("vertical_probability must be in [0, 1]")
        if self.words and not self.wordlists:
            raise ValidationError("at least one wordlist is required")
        for script, words in self.wordlists.items():
            if not words:
                raise ValidationError(f"wordlist for {script} is empty")
        lo, hi = self.angle_range
        if not -math.pi <= lo <= hi <= math.pi:
            raise ValidationError(f"bad angle range {self.angle_range}")


@dataclass
class Scene:
    image: np.ndarray  # [1, H, W]
    annotations: list
    geomap: GeometryMap
    scripts_used: set
    placement_failures: int = 0


def char_level(ch: str) -> float:
    """Fixed stand-in intensity for a character, in [0.25, 1)."""
    return 0.25 + 0.75 * (((ord(ch) * 2654435761) % 2**32) / 2**32)


def word_quad(cx: float, cy: float, length: float, thickness: float, theta: float) -> tuple:
    s, c = math.sin(theta), math.cos(theta)
    hl, ht = length / 2.0, thickness / 2.0
    return tuple(
        (cx + c * u - s * v, cy + s * u + c * v)
        for u, v in ((-hl, -ht), (hl, -ht), (hl, ht), (-hl, ht))
    )


def char_quads(quad, n: int) -> tuple:
    """Split a word quad into ``n`` equal cells along TL->TR."""
    tl, tr, br, bl = (np.asarray(p, dtype=np.float64) for p in quad)
    cells = []
    for k in range(n):
        a, b = k / n, (k + 1) / n
        pts = (tl + a * (tr - tl), tl + b * (tr - tl), bl + b * (br - bl), bl + a * (br - bl))
        cells.append(tuple((float(p[0]), float(p[1])) for p in pts))
    return tuple(cells)


def render_words(image: np.ndarray, annotations) -> np.ndarray:
    """Paint each word's character cells into ``image`` ([C, H, W]) in place.

    A pixel is painted when its centre lies inside the word parallelogram;
    the cell is chosen from the centre's position along TL->TR.
    """
    _, H, W = image.shape
    for ann in annotations:
        text = ann.transcription
        if ann.dont_care or not text:
            continue
        tl, tr, _, bl = (np.asarray(p, dtype=np.float64) for p in ann.quad)
        eu, ev = tr - tl, bl - tl
        q = np.asarray(ann.quad)
        x0 = max(0, int(math.floor(q[:, 0].min())))
        x1 = min(W, int(math.ceil(q[:, 0].max())) + 1)
        y0 = max(0, int(math.floor(q[:, 1].min())))
        y1 = min(H, int(math.ceil(q[:, 1].max())) + 1)
        if x0 >= x1 or y0 >= y1:
            continue
        yy, xx = np.mgrid[y0:y1, x0:x1]
        px = xx + 0.5 - tl[0]
        py = yy + 0.5 - tl[1]
        u = (px * eu[0] + py * eu[1]) / float(eu @ eu)
        v = (px * ev[0] + py * ev[1]) / float(ev @ ev)
        inside = (u >= 0) & (u < 1) & (v >= 0) & (v < 1)
        cell = np.minimum((u * len(text)).astype(np.int64), len(text) - 1)
        levels = np.array([char_level(c) for c in text])
        image[:, yy[inside], xx[inside]] = levels[cell[inside]]
    return image


class _Draw:
    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self._rng.random()

    def index(self, n: int) -> int:
        return min(int(self._rng.random() * n), n - 1)

    def chance(self, p: float) -> bool:
        return self._rng.random() < p


def _inside_canvas(quad, width, height) -> bool:
    return all(0.0 <= x <= width and 0.0 <= y <= height for x, y in quad)


def generate_scene(spec: SceneSpec) -> Scene:
    draw = _Draw(spec.seed)
    scripts = sorted(spec.wordlists)
    accepted: list[WordAnnotation] = []
    used = set()
    failures = 0
    for _ in range(spec.words):
        script = scripts[draw.index(len(scripts))]
        words = spec.wordlists[script]
        text = words[draw.index(len(words))]
        placed = None
        for _attempt in range(MAX_ATTEMPTS):
            thickness = draw.uniform(*spec.char_height)
            length = spec.char_aspect * thickness * len(text)
            if draw.chance(spec.vertical_probability):
                theta = math.pi / 2
            elif spec.angles:
                theta = spec.angles[draw.index(len(spec.angles))]
            else:
                theta = draw.uniform(*spec.angle_range)
            cx = draw.uniform(0.0, spec.width)
            cy = draw.uniform(0.0, spec.height)
            quad = word_quad(cx, cy, length, thickness, theta)
            if not _inside_canvas(quad, spec.width, spec.height):
                continue
            if any(intersection_area(quad, a.quad) > 0.0 for a in accepted):
                continue
            placed = quad
            break
        if placed is None:
            failures += 1
            continue
        accepted.append(WordAnnotation.make(placed, text, script, char_quads(placed, len(text))))
        used.add(script)
    if failures:
        warnings.warn(PlacementFailure(f"seed {spec.seed}: {failures} word(s) could not be placed"),
                      stacklevel=2)

    image = np.full((1, spec.height, spec.width), BACKGROUND)
    render_words(image, accepted)
    gmap = GeometryMap.zeros(int(spec.height // spec.scale), int(spec.width // spec.scale))
    for ann in accepted:
        encode_box(gmap, ann.quad, spec.scale, spec.shrink)
    return Scene(image, accepted, gmap, used, failures)


def wordlist_alphabet(wordlists=None) -> Alphabet:
    chars = sorted({c for words in (wordlists or DEFAULT_WORDLISTS).values() for w in words for c in w})
    return Alphabet.from_symbols(chars)


def forced_logits(s: str, alphabet: Alphabet, frames_per_char: int = 2,
                  magnitude: float = 1e3) -> np.ndarray:
    """Logits whose per-frame argmax spells ``s``.

    Each character holds ``frames_per_char - 1`` frames followed by one blank
    frame, so repeated characters survive the CTC collapse. Target entries are
    ``+magnitude``, all others ``-magnitude``.
    """
    if frames_per_char < 2:
        raise ValueError("frames_per_char must be >= 2")
    missing = [c for c in s if c not in alphabet]
    if missing:
        raise UnknownCharacter(f"characters not in alphabet: {''.join(missing)!r}")
    targets = []
    for c in s:
        targets += [alphabet.index(c)] * (frames_per_char - 1) + [0]
    if not targets:
        targets = [0] * frames_per_char
    out = np.full((len(targets), len(alphabet)), -float(magnitude))
    out[np.arange(len(targets)), targets] = magnitude
    return out
