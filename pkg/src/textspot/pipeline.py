"""Post-network spotting pipeline: decode, NMS, crop, recognize, script ID."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .ctc import greedy_decode
from .errors import TextSpotError
from .evaluation import MatchConfig
from .geometry import DEFAULT_SCALE, DEFAULT_THRESHOLD, GeometryMap, OrientedBox, region_iou, threshold_and_decode
from .losses import LossWeights
from .model_io import Alphabet, WordAnnotation, read_tensor
from .nms import NmsConfig, run_nms
from .roi import OCR_HEIGHT, roi_dims, sample_quad
from .script_id import word_script
from .synthgen import forced_logits

# (detection index, detection, crop [C, H', W̄]) -> logits (T, K)
LogitsProvider = Callable[[int, OrientedBox, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class PipelineConfig:
    threshold: float = DEFAULT_THRESHOLD
    nms: NmsConfig = field(default_factory=NmsConfig)
    height: int = OCR_HEIGHT
    scale: float = DEFAULT_SCALE
    match: MatchConfig = field(default_factory=MatchConfig)
    weights: LossWeights = field(default_factory=LossWeights)

    def __post_init__(self):
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must be in [0, 1], got {self.threshold}")


class DirectoryLogits:
    """Reads ``roi_0000.e2et``, ``roi_0001.e2et``, ... exported by an external recognizer."""

    def __init__(self, directory):
        self.directory = Path(directory)

    def path_for(self, index: int) -> Path:
        return self.directory / f"roi_{index:04d}.e2et"

    def __call__(self, index, box, crop):
        return read_tensor(self.path_for(index))


class OracleLogits:
    """Test-mode recognizer: forced-alignment logits of the best-overlapping GT word."""

    def __init__(self, gts: Sequence[WordAnnotation], alphabet: Alphabet,
                 iou_min: float = 0.5, frames_per_char: int = 2, magnitude: float = 1e3):
        self.gts = list(gts)
        self.alphabet = alphabet
        self.iou_min = iou_min
        self.frames_per_char = frames_per_char
        self.magnitude = magnitude

    def __call__(self, index, box, crop):
        best, text = self.iou_min, ""
        for g in self.gts:
            if g.dont_care:
                continue
            iou = region_iou(g.quad, box.quad)
            if iou > best:
                best, text = iou, g.transcription
        return forced_logits(text, self.alphabet, self.frames_per_char, self.magnitude)


def detect(gmap: GeometryMap, cfg: PipelineConfig | None = None) -> list[OrientedBox]:
    cfg = cfg or PipelineConfig()
    return run_nms(threshold_and_decode(gmap, cfg.threshold, cfg.scale), cfg.nms)


def spot(image, gmap: GeometryMap, provider: LogitsProvider, alphabet: Alphabet,
         cfg: PipelineConfig | None = None) -> list[WordAnnotation]:
    """Detections with transcriptions and majority-vote scripts.

    Detections whose recognized text is empty are dropped as no-text.
    """
    cfg = cfg or PipelineConfig()
    img = np.asarray(image, dtype=np.float64)
    if img.ndim == 2:
        img = img[None]
    out = []
    for k, box in enumerate(detect(gmap, cfg)):
        try:
            width, _ = roi_dims(box.quad, cfg.height)
            crop = sample_quad(img, box.quad, cfg.height, width)
            text = greedy_decode(provider(k, box, crop), alphabet)
        except TextSpotError as exc:
            exc.args = (f"detection {k}: {exc}",)
            raise
        if text:
            out.append(WordAnnotation.make(box.quad, text, word_script(text)))
    return out
