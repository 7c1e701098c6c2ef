"""Detection/recognition objective with analytic gradients.

    L_final = L_geo + w_angle * L_angle + w_dice * L_dice + w_ctc * L_ctc

Gradients are taken with respect to the prediction maps and CTC logits only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import ctc as _ctc
from .errors import Divergence, ShapeMismatch, TiePoint, ValidationError
from .geometry import (COS, D_BOTTOM, D_LEFT, D_RIGHT, D_TOP, SCORE, SIN, GeometryMap, encode_box,
                       threshold_and_decode)
from .nms import NmsConfig, run_nms

SMOOTH = 1.0
DISTANCE_CHANNELS = [D_TOP, D_LEFT, D_BOTTOM, D_RIGHT]


@dataclass(frozen=True)
class LossWeights:
    angle: float = 1.0
    dice: float = 1.0
    ctc: float = 1.0

    def __post_init__(self):
        for v in (self.angle, self.dice, self.ctc):
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"loss weights must be finite and >= 0, got {self}")


@dataclass
class LossReport:
    l_geo: float
    l_angle: float
    l_dice: float
    l_ctc: float
    l_final: float
    grad_map: np.ndarray  # d l_final / d pred channels, [7, H, W]
    grad_logits: list = field(default_factory=list)  # d l_final / d logits, one per word


def _min_grad(p, g):
    # d min(p, g) / dp; the tie takes the midpoint of the one-sided derivatives
    return np.where(p < g, 1.0, np.where(p > g, 0.0, 0.5))


def iou_loss_terms(pred, gt, eps: float = SMOOTH):
    """Vectorised IoU loss. ``pred``/``gt`` are (4, ...) in order top, left, bottom, right.

    Returns per-element values and the gradient w.r.t. ``pred`` (same shape).
    """
    pred = np.asarray(pred, dtype=np.float64)
    gt = np.asarray(gt, dtype=np.float64)
    clamp = (pred > 0).astype(np.float64)
    p = np.maximum(pred, 0.0)
    pt, pl, pb, pr = p
    gt_t, gt_l, gt_b, gt_r = gt
    area_p = (pt + pb) * (pl + pr)
    area_g = (gt_t + gt_b) * (gt_l + gt_r)
    w_i = np.minimum(pl, gt_l) + np.minimum(pr, gt_r)
    h_i = np.minimum(pt, gt_t) + np.minimum(pb, gt_b)
    area_i = w_i * h_i
    area_u = area_p + area_g - area_i
    value = np.log(area_u + eps) - np.log(area_i + eps)

    # d area_p / d side and d area_i / d side, per side in (t, l, b, r) order
    d_ap = np.stack([pl + pr, pt + pb, pl + pr, pt + pb])
    d_ai = np.stack([
        w_i * _min_grad(pt, gt_t),
        h_i * _min_grad(pl, gt_l),
        w_i * _min_grad(pb, gt_b),
        h_i * _min_grad(pr, gt_r),
    ])
    grad = (d_ap - d_ai) / (area_u + eps) - d_ai / (area_i + eps)
    return value, grad * clamp


def iou_loss(pred_d, gt_d, eps: float = SMOOTH) -> tuple[float, np.ndarray]:
    """IoU loss of one pixel's four side distances (top, left, bottom, right)."""
    pred = np.asarray(pred_d, dtype=np.float64).reshape(4)
    gt = np.asarray(gt_d, dtype=np.float64).reshape(4)
    if np.any(gt < 0):
        raise ValidationError("ground-truth distances must be >= 0")
    value, grad = iou_loss_terms(pred, gt, eps)
    return float(value), grad


def angle_loss(pred, gt, mask=None) -> tuple[float, np.ndarray]:
    """Mean over masked pixels of the squared error on (sin, cos).

    ``pred`` and ``gt`` have shape (2, ...) holding sin then cos.
    """
    pred = np.asarray(pred, dtype=np.float64)
    gt = np.asarray(gt, dtype=np.float64)
    if pred.shape != gt.shape or pred.shape[0] != 2:
        raise ShapeMismatch(f"angle maps must match and start with 2, got {pred.shape} vs {gt.shape}")
    m = np.ones(pred.shape[1:], dtype=bool) if mask is None else np.asarray(mask, dtype=bool)
    n = int(m.sum())
    if n == 0:
        return 0.0, np.zeros_like(pred)
    diff = (pred - gt) * m
    value = float(np.sum(diff * diff)) / n
    return value, 2.0 * diff / n


def dice_coefficient(p, g, eps: float = SMOOTH) -> float:
    p = np.asarray(p, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    return float((2.0 * np.sum(p * g) + eps) / (np.sum(p * p) + np.sum(g * g) + eps))


def dice_loss(p, g, eps: float = SMOOTH) -> tuple[float, np.ndarray]:
    """One minus the smoothed dice coefficient, and its gradient w.r.t. ``p``."""
    p = np.asarray(p, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    if p.shape != g.shape:
        raise ShapeMismatch(f"dice inputs differ in shape: {p.shape} vs {g.shape}")
    num = 2.0 * np.sum(p * g) + eps
    den = np.sum(p * p) + np.sum(g * g) + eps
    grad_d = (2.0 * g * den - 2.0 * p * num) / (den * den)
    return float(1.0 - num / den), -grad_d


def composite_loss(pred: GeometryMap, gt: GeometryMap, ctc_inputs=None,
                   weights: LossWeights | None = None) -> LossReport:
    """Full objective over one image.

    ``pred`` holds probabilities in its score channel. Geometry and angle
    terms are averaged over ground-truth positive pixels. ``ctc_inputs`` is an
    optional sequence of (logits, label) pairs whose losses are averaged.
    """
    w = weights or LossWeights()
    if pred.channels.shape != gt.channels.shape:
        raise ShapeMismatch(f"pred {pred.channels.shape} vs gt {gt.channels.shape}")
    P, G = pred.channels, gt.channels
    grad = np.zeros_like(P)
    mask = G[SCORE] > 0.5
    n = int(mask.sum())

    l_geo = 0.0
    if n:
        vals, g_geo = iou_loss_terms(P[DISTANCE_CHANNELS][:, mask], G[DISTANCE_CHANNELS][:, mask])
        l_geo = float(vals.sum()) / n
        for k, ch in enumerate(DISTANCE_CHANNELS):
            grad[ch][mask] = g_geo[k] / n

    l_angle, g_ang = angle_loss(P[[SIN, COS]], G[[SIN, COS]], mask)
    grad[SIN] += w.angle * g_ang[0]
    grad[COS] += w.angle * g_ang[1]

    l_dice, g_dice = dice_loss(P[SCORE], G[SCORE])
    grad[SCORE] += w.dice * g_dice

    l_ctc = 0.0
    grad_logits = []
    if ctc_inputs:
        pairs = list(ctc_inputs)
        for logits, label in pairs:
            v, g = _ctc.ctc_loss(logits, label)
            l_ctc += v / len(pairs)
            grad_logits.append(w.ctc * g / len(pairs))

    l_final = l_geo + w.angle * l_angle + w.dice * l_dice + w.ctc * l_ctc
    return LossReport(l_geo, l_angle, l_dice, l_ctc, l_final, grad, grad_logits)


# -- finite-difference verification ------------------------------------------

def numeric_gradient(fn: Callable[[np.ndarray], float], x, h: float = 1e-6) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    for i in np.ndindex(x.shape):
        xp = x.copy()
        xm = x.copy()
        xp[i] += h
        xm[i] -= h
        out[i] = (fn(xp) - fn(xm)) / (2.0 * h)
    return out


def gradient_error(fn: Callable[[np.ndarray], tuple[float, np.ndarray]], x, h: float = 1e-6) -> float:
    """max |analytic - numeric| / max(1, |numeric|) over all coordinates."""
    x = np.asarray(x, dtype=np.float64)
    analytic = np.asarray(fn(x)[1], dtype=np.float64)
    numeric = numeric_gradient(lambda v: fn(v)[0], x, h)
    return float(np.max(np.abs(analytic - numeric) / np.maximum(1.0, np.abs(numeric))))


def _iou_selector(point, h):
    pred, gt = (np.asarray(v, dtype=np.float64) for v in point)
    if np.any(np.abs(pred - gt) < 10 * h) or np.any(np.abs(pred) < 10 * h):
        raise TiePoint("iou_loss is not differentiable within 10h of this point")
    return (lambda x: iou_loss(x, gt)), pred


def _angle_selector(point, h):
    pred, gt, *rest = point
    mask = rest[0] if rest else None
    return (lambda x: angle_loss(x, gt, mask)), pred


def _dice_selector(point, h):
    p, g = point
    return (lambda x: dice_loss(x, g)), p


def _ctc_selector(point, h):
    logits, label = point
    return (lambda x: _ctc.ctc_loss(x, label)), logits


LOSS_SELECTORS = {
    "iou": _iou_selector,
    "angle": _angle_selector,
    "dice": _dice_selector,
    "ctc": _ctc_selector,
}


def grad_check(loss: str, point: Sequence, h: float = 1e-6) -> float:
    """Compare a loss's analytic gradient with central differences.

    ``point`` is the loss's argument tuple; the first argument is the one
    differentiated. Returns the max relative error.
    """
    try:
        selector = LOSS_SELECTORS[loss]
    except KeyError:
        raise ValueError(f"unknown loss {loss!r}; choose from {sorted(LOSS_SELECTORS)}") from None
    fn, x = selector(point, h)
    return gradient_error(fn, x, h)


# -- map fitting demo ----------------------------------------------------------

DEMO_SEED = 20180904
DEMO_LR = 50.0
DEMO_STEPS = 2000


@dataclass
class FitResult:
    maps: GeometryMap
    boxes: list
    losses: list


def _sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def init_demo_params(shape, seed: int = DEMO_SEED) -> np.ndarray:
    """Starting point for the fit: score logits near 0, distances 1..9 px, random angle vector."""
    rng = np.random.default_rng(seed)
    _, H, W = shape
    params = np.empty(shape)
    params[SCORE] = rng.normal(0.0, 0.1, (H, W))
    params[DISTANCE_CHANNELS] = rng.uniform(1.0, 9.0, (4, H, W))
    params[[SIN, COS]] = rng.normal(0.0, 1.0, (2, H, W))
    return params


def params_to_map(params: np.ndarray) -> GeometryMap:
    out = params.copy()
    out[SCORE] = _sigmoid(params[SCORE])
    return GeometryMap(out)


def fit_maps_demo(gt: GeometryMap, steps: int, lr: float, *, seed: int = DEMO_SEED,
                  weights: LossWeights | None = None, scale: float = 4.0,
                  threshold: float = 0.9, nms: NmsConfig | None = None,
                  patience: int = 50) -> FitResult:
    """Plain gradient descent of the objective w.r.t. the prediction maps.

    The score channel is optimised as a logit and squashed through a sigmoid
    before the loss. Raises Divergence if the loss rises ``patience`` steps
    in a row.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    params = init_demo_params(gt.channels.shape, seed)
    losses = []
    rises = 0
    for _ in range(steps):
        pred = params_to_map(params)
        report = composite_loss(pred, gt, weights=weights)
        if losses and report.l_final > losses[-1]:
            rises += 1
            if rises >= patience:
                raise Divergence(f"loss increased for {patience} consecutive steps")
        else:
            rises = 0
        losses.append(report.l_final)
        g = report.grad_map
        p = pred.channels[SCORE]
        g[SCORE] = g[SCORE] * p * (1.0 - p)
        params -= lr * g
    final = params_to_map(params)
    if steps:
        losses.append(composite_loss(final, gt, weights=weights).l_final)
    boxes = run_nms(threshold_and_decode(final, threshold, scale), nms)
    return FitResult(final, boxes, losses)


def rotated_rect(cx: float, cy: float, w: float, h: float, theta: float) -> tuple:
    s, c = math.sin(theta), math.cos(theta)
    return tuple(
        (cx + c * u - s * v, cy + s * u + c * v)
        for u, v in ((-w / 2, -h / 2), (w / 2, -h / 2), (w / 2, h / 2), (-w / 2, h / 2))
    )


def demo_target(angle: float = 0.5, size: int = 64) -> tuple[GeometryMap, list]:
    """Two-word target on a ``size`` x ``size`` grid at scale 1, plus the word quads."""
    k = size / 64.0
    quads = [
        rotated_rect(22 * k, 16 * k, 32 * k, 12 * k, 0.0),
        rotated_rect(38 * k, 44 * k, 30 * k, 11 * k, angle),
    ]
    gmap = GeometryMap.zeros(size, size)
    for q in quads:
        encode_box(gmap, q, scale=1.0)
    return gmap, quads


# -- randomized gradient suite ---------------------------------------------------

GRADCHECK_TOLERANCE = {"iou": 1e-4, "dice": 1e-6, "angle": 1e-6, "ctc": 1e-6}


def random_point(loss: str, rng: np.random.Generator, h: float = 1e-6):
    """A random non-degenerate argument tuple for ``grad_check``."""
    if loss == "iou":
        while True:
            gt = rng.uniform(1.0, 20.0, 4)
            pred = gt * rng.uniform(0.5, 1.5, 4)
            if np.all(np.abs(pred - gt) > 10 * h):
                return pred, gt
    if loss == "dice":
        n = int(rng.integers(2, 40))
        return rng.uniform(0.1, 0.9, n), (rng.random(n) < 0.4).astype(float)
    if loss == "angle":
        n = int(rng.integers(1, 30))
        ang = rng.uniform(-np.pi, np.pi, n)
        gt = np.stack([np.sin(ang), np.cos(ang)])
        mask = rng.random(n) < 0.7
        mask[int(rng.integers(n))] = True
        return rng.normal(0.0, 1.0, (2, n)), gt, mask
    if loss == "ctc":
        T = int(rng.integers(1, 9))
        K = int(rng.integers(2, 7))
        while True:
            label = rng.integers(1, K, int(rng.integers(0, T + 1))).tolist()
            if _ctc.min_frames(label) <= T:
                return rng.normal(0.0, 2.0, (T, K)), label
    raise ValueError(f"unknown loss {loss!r}")


def gradcheck_suite(points: int = 100, seed: int = 0, h: float = 1e-6) -> dict[str, float]:
    """Max relative gradient error per loss over ``points`` random points each."""
    rng = np.random.default_rng(seed)
    return {
        name: max(grad_check(name, random_point(name, rng, h), h) for _ in range(points))
        for name in GRADCHECK_TOLERANCE
    }
