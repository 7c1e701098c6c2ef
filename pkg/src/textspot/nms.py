"""Locality-aware NMS over per-pixel box proposals."""
from __future__ import annotations

from dataclasses import dataclass

from .geometry import OrientedBox, quad_angle, quad_iou

DEFAULT_MERGE_IOU = 0.3
DEFAULT_FINAL_IOU = 0.3


@dataclass(frozen=True)
class NmsConfig:
    merge_iou: float = DEFAULT_MERGE_IOU
    final_iou: float = DEFAULT_FINAL_IOU

    def __post_init__(self):
        for name in ("merge_iou", "final_iou"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")


def _weighted_merge(a: OrientedBox, b: OrientedBox) -> OrientedBox:
    total = a.score + b.score
    if total > 0:
        wa, wb = a.score / total, b.score / total
    else:
        wa = wb = 0.5
    quad = tuple(
        (wa * pa[0] + wb * pb[0], wa * pa[1] + wb * pb[1])
        for pa, pb in zip(a.quad, b.quad)
    )
    return OrientedBox(quad, quad_angle(quad), total, a.index)


def locality_merge(boxes: list[OrientedBox], merge_iou: float = DEFAULT_MERGE_IOU) -> list[OrientedBox]:
    """Single pass over row-major proposals, folding each into the running
    candidate while their IoU exceeds ``merge_iou``. Scores add up."""
    out: list[OrientedBox] = []
    current = None
    for box in boxes:
        if current is not None and quad_iou(current.quad, box.quad) > merge_iou:
            current = _weighted_merge(current, box)
        else:
            if current is not None:
                out.append(current)
            current = box
    if current is not None:
        out.append(current)
    return out


def standard_nms(boxes: list[OrientedBox], final_iou: float = DEFAULT_FINAL_IOU) -> list[OrientedBox]:
    """Greedy suppression by descending score; equal scores keep list (row-major) order."""
    order = sorted(range(len(boxes)), key=lambda i: (-boxes[i].score, i))
    kept: list[OrientedBox] = []
    for i in order:
        b = boxes[i]
        if all(quad_iou(k.quad, b.quad) <= final_iou for k in kept):
            kept.append(b)
    return kept


def run_nms(boxes: list[OrientedBox], cfg: NmsConfig | None = None) -> list[OrientedBox]:
    cfg = cfg or NmsConfig()
    return standard_nms(locality_merge(boxes, cfg.merge_iou), cfg.final_iou)
