"""Aspect-preserving rotated word crops for the recognizer.

The crop is a bilinear warp of the unit square onto the quad (TL->TR along
the reading direction) sampled at half-pixel centres, with bilinear
interpolation of the source. Source pixel ``(i, j)`` covers ``[j, j+1] x
[i, i+1]`` and is sampled at its centre; reads outside the image are 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateQuad
from .geometry import quad_iou

OCR_HEIGHT = 40
FRAME_STRIDE = 4
DEFAULT_SELECT_IOU = 0.9


@dataclass(frozen=True)
class RoiSpec:
    quad: tuple
    height: int
    width: int
    ctc_frames: int


def _edge(a, b) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def quad_extent(quad) -> tuple[float, float]:
    """(w, h): mean of top/bottom edge lengths, mean of left/right edge lengths."""
    tl, tr, br, bl = quad
    w = 0.5 * (_edge(tl, tr) + _edge(bl, br))
    h = 0.5 * (_edge(tl, bl) + _edge(tr, br))
    return w, h


def roi_dims(quad, height: int = OCR_HEIGHT) -> tuple[int, int]:
    """Output width for a crop of fixed ``height`` and the CTC frame count (width / 4)."""
    if height < 1:
        raise ValueError("height must be >= 1")
    w, h = quad_extent(quad)
    if not h > 0:
        raise DegenerateQuad(f"quad {quad} has no height")
    width = max(1, math.floor(w * height / h + 0.5))
    return width, max(1, width // FRAME_STRIDE)


def roi_spec(quad, height: int = OCR_HEIGHT) -> RoiSpec:
    width, frames = roi_dims(quad, height)
    return RoiSpec(tuple(map(tuple, quad)), height, width, frames)


def _bilinear(image: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Sample ``image`` [C, H, W] at continuous positions (pixel centres at +0.5)."""
    C, H, W = image.shape
    fx = x - 0.5
    fy = y - 0.5
    x0 = np.floor(fx).astype(np.int64)
    y0 = np.floor(fy).astype(np.int64)
    ax = fx - x0
    ay = fy - y0
    out = np.zeros((C,) + x.shape)
    for dy, wy in ((0, 1.0 - ay), (1, ay)):
        for dx, wx in ((0, 1.0 - ax), (1, ax)):
            xi = x0 + dx
            yi = y0 + dy
            ok = (xi >= 0) & (xi < W) & (yi >= 0) & (yi < H)
            vals = np.zeros((C,) + x.shape)
            vals[:, ok] = image[:, yi[ok], xi[ok]]
            out += (wx * wy) * vals
    return out


def sample_points(quad, height: int, width: int) -> tuple[np.ndarray, np.ndarray]:
    """Source positions for each output pixel, shape (height, width)."""
    tl, tr, br, bl = (np.asarray(p, dtype=np.float64) for p in quad)
    u = (np.arange(width) + 0.5) / width
    v = (np.arange(height) + 0.5) / height
    uu, vv = np.meshgrid(u, v)
    pts = (
        ((1 - uu) * (1 - vv))[..., None] * tl
        + (uu * (1 - vv))[..., None] * tr
        + (uu * vv)[..., None] * br
        + ((1 - uu) * vv)[..., None] * bl
    )
    return pts[..., 0], pts[..., 1]


def sample_quad(image, quad, height: int = OCR_HEIGHT, width: int | None = None) -> np.ndarray:
    """Crop ``quad`` out of ``image`` ([C, H, W] or [H, W]) into [C, height, W̄]."""
    img = np.asarray(image, dtype=np.float64)
    if img.ndim == 2:
        img = img[None]
    if img.ndim != 3:
        raise ValueError(f"image must be [C, H, W], got {img.shape}")
    if width is None:
        width, _ = roi_dims(quad, height)
    x, y = sample_points(quad, height, width)
    return _bilinear(img, x, y)


def select_training_rois(preds, gts, iou_min: float = DEFAULT_SELECT_IOU) -> list[tuple]:
    """Pair detections with ground-truth words for recognizer training.

    Candidate pairs above ``iou_min`` are taken greedily by descending IoU,
    each side used once. A detection whose best partner is a don't-care word
    is dropped. Returns (pred quad, gt transcription) in prediction order.
    """
    pred_quads = [getattr(p, "quad", p) for p in preds]
    cands = []
    for i, pq in enumerate(pred_quads):
        for j, g in enumerate(gts):
            iou = quad_iou(pq, g.quad)
            if iou > iou_min:
                cands.append((-iou, i, j))
    cands.sort()
    used_p, used_g = set(), set()
    chosen = {}
    for _, i, j in cands:
        if i in used_p or j in used_g:
            continue
        used_p.add(i)
        used_g.add(j)
        if not gts[j].dont_care:
            chosen[i] = (pred_quads[i], gts[j].transcription)
    return [chosen[i] for i in sorted(chosen)]
