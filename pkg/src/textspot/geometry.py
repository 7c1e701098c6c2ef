"""Per-pixel rotated-box geometry.

A geometry map is a ``[7, H, W]`` array with channels (score, d_top, d_left,
d_bottom, d_right, sin, cos). Grid pixel ``(x, y)`` sits at image position
``scale * (x, y)``; distances are in image pixels, measured in the box frame
rotated by the angle. Image coordinates have y pointing down, so a positive
angle turns the box's top edge clockwise on screen.

Quads are listed TL, TR, BR, BL with TL the reading origin (clockwise on
screen).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import BoxOutsideGrid, DegenerateAngle, NonConvexQuad, ShapeMismatch, ZeroAreaBox

NUM_CHANNELS = 7
SCORE, D_TOP, D_LEFT, D_BOTTOM, D_RIGHT, SIN, COS = range(NUM_CHANNELS)

DEFAULT_SCALE = 4.0
DEFAULT_SHRINK = 0.6
DEFAULT_THRESHOLD = 0.9

_ANGLE_EPS = 1e-12


@dataclass(frozen=True)
class PixelGeometry:
    score: float
    d_top: float
    d_left: float
    d_bottom: float
    d_right: float
    sin_t: float
    cos_t: float


@dataclass(eq=False)
class OrientedBox:
    quad: tuple  # four (x, y) tuples, TL first
    angle: float
    score: float
    index: int = 0  # position in the row-major decode order

    @property
    def center(self) -> tuple[float, float]:
        return (
            sum(p[0] for p in self.quad) / 4.0,
            sum(p[1] for p in self.quad) / 4.0,
        )


class GeometryMap:
    """Thin wrapper over a ``[7, H, W]`` float64 array."""

    def __init__(self, channels):
        channels = np.asarray(channels, dtype=np.float64)
        if channels.ndim != 3 or channels.shape[0] != NUM_CHANNELS:
            raise ShapeMismatch(f"geometry map must be [7, H, W], got {channels.shape}")
        self.channels = channels

    @classmethod
    def zeros(cls, height: int, width: int) -> "GeometryMap":
        return cls(np.zeros((NUM_CHANNELS, height, width)))

    @property
    def height(self) -> int:
        return self.channels.shape[1]

    @property
    def width(self) -> int:
        return self.channels.shape[2]

    @property
    def score(self) -> np.ndarray:
        return self.channels[SCORE]

    def copy(self) -> "GeometryMap":
        return GeometryMap(self.channels.copy())


def normalize_angle(sin_t: float, cos_t: float) -> tuple[float, float, float]:
    norm = math.hypot(sin_t, cos_t)
    if norm < _ANGLE_EPS:
        raise DegenerateAngle(f"angle vector ({sin_t}, {cos_t}) is too close to zero")
    s, c = sin_t / norm, cos_t / norm
    theta = math.atan2(s, c)
    if theta <= -math.pi:
        theta = math.pi
    return s, c, theta


def wrap_angle(theta: float) -> float:
    """Equivalent angle in (-pi, pi]."""
    t = math.remainder(theta, 2 * math.pi)
    return math.pi if t <= -math.pi else t


def angle_vector(theta: float) -> tuple[float, float]:
    """(sin, cos) of the wrapped angle, so pi and -pi give identical channels."""
    t = wrap_angle(theta)
    return math.sin(t), math.cos(t)


def quad_angle(quad) -> float:
    """Angle of the top edge TL->TR, in (-pi, pi]."""
    (x0, y0), (x1, y1) = quad[0], quad[1]
    theta = math.atan2(y1 - y0, x1 - x0)
    return math.pi if theta <= -math.pi else theta


def decode_pixel(p, g: PixelGeometry, scale: float = DEFAULT_SCALE) -> OrientedBox:
    """Oriented box predicted by a single pixel."""
    dt, dl, db, dr = g.d_top, g.d_left, g.d_bottom, g.d_right
    if min(dt, dl, db, dr) < 0:
        raise ValueError("side distances must be non-negative")
    s, c, theta = normalize_angle(g.sin_t, g.cos_t)
    if (dl + dr) * (dt + db) == 0:
        raise ZeroAreaBox(f"pixel {tuple(p)} predicts a zero-area box")
    px, py = scale * p[0], scale * p[1]
    local = ((-dl, -dt), (dr, -dt), (dr, db), (-dl, db))
    quad = tuple((px + c * u - s * v, py + s * u + c * v) for u, v in local)
    return OrientedBox(quad, theta, float(g.score))


# -- polygon helpers ----------------------------------------------------------

def polygon_area(poly) -> float:
    """Signed shoelace area; positive when clockwise on screen."""
    n = len(poly)
    acc = 0.0
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        acc += x0 * y1 - x1 * y0
    return 0.5 * acc


def polygon_centroid(poly) -> tuple[float, float]:
    a = polygon_area(poly)
    n = len(poly)
    if abs(a) < 1e-300:
        return (sum(p[0] for p in poly) / n, sum(p[1] for p in poly) / n)
    cx = cy = 0.0
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        w = x0 * y1 - x1 * y0
        cx += (x0 + x1) * w
        cy += (y0 + y1) * w
    return cx / (6.0 * a), cy / (6.0 * a)


def is_convex(poly) -> bool:
    """True for convex (possibly degenerate, collinear) polygons."""
    n = len(poly)
    mag = max(max(abs(x), abs(y)) for x, y in poly) + 1.0
    tol = 1e-12 * mag * mag
    pos = neg = False
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        x2, y2 = poly[(i + 2) % n]
        cr = (x1 - x0) * (y2 - y1) - (y1 - y0) * (x2 - x1)
        if cr > tol:
            pos = True
        elif cr < -tol:
            neg = True
        if pos and neg:
            return False
    return True


def _positive(poly):
    return poly if polygon_area(poly) >= 0 else poly[::-1]


def _clip(subject, clipper):
    """Sutherland-Hodgman; both polygons convex with positive orientation."""
    out = list(subject)
    n = len(clipper)
    for i in range(n):
        if not out:
            break
        ax, ay = clipper[i]
        bx, by = clipper[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        inp, out = out, []
        m = len(inp)
        for j in range(m):
            px, py = inp[j - 1]
            qx, qy = inp[j]
            sp = ex * (py - ay) - ey * (px - ax)
            sq = ex * (qy - ay) - ey * (qx - ax)
            if sq >= 0:
                if sp < 0:
                    t = sp / (sp - sq)
                    out.append((px + t * (qx - px), py + t * (qy - py)))
                out.append((qx, qy))
            elif sp >= 0:
                t = sp / (sp - sq)
                out.append((px + t * (qx - px), py + t * (qy - py)))
    return out


def intersection_area(a, b) -> float:
    pa, pb = _positive(list(a)), _positive(list(b))
    inter = _clip(pa, pb)
    return abs(polygon_area(inter)) if len(inter) >= 3 else 0.0


def quad_iou(a, b) -> float:
    """Intersection over union of two convex quads."""
    if not is_convex(a) or not is_convex(b):
        raise NonConvexQuad("quad_iou requires convex quads")
    area_a = abs(polygon_area(a))
    area_b = abs(polygon_area(b))
    inter = intersection_area(a, b)
    union = area_a + area_b - inter
    if union <= 0.0:
        return 0.0
    return min(1.0, max(0.0, inter / union))


# -- encode / decode -----------------------------------------------------------

def encode_box(gmap: GeometryMap, quad, scale: float = DEFAULT_SCALE,
               shrink: float = DEFAULT_SHRINK) -> int:
    """Write one ground-truth box into ``gmap`` in place.

    Pixels whose image position falls inside the quad shrunk by ``shrink``
    about its centroid become positive; distances are measured against the
    unshrunk box (the quad's bounding rectangle in its own rotated frame).
    Returns the number of positive pixels written.
    """
    if not 0.0 < shrink <= 1.0:
        raise ValueError(f"shrink must be in (0, 1], got {shrink}")
    q = [(float(x), float(y)) for x, y in quad]
    if not is_convex(q):
        raise NonConvexQuad("encode_box requires a convex quad")
    s, c = angle_vector(quad_angle(q))
    # box frame: u along the top edge, v towards the bottom edge
    us = [c * x + s * y for x, y in q]
    vs = [-s * x + c * y for x, y in q]
    umin, umax, vmin, vmax = min(us), max(us), min(vs), max(vs)

    cx, cy = polygon_centroid(q)
    core = _positive([(cx + shrink * (x - cx), cy + shrink * (y - cy)) for x, y in q])
    xs = [p[0] for p in core]
    ys = [p[1] for p in core]
    x0 = max(0, math.ceil(min(xs) / scale))
    x1 = min(gmap.width - 1, math.floor(max(xs) / scale))
    y0 = max(0, math.ceil(min(ys) / scale))
    y1 = min(gmap.height - 1, math.floor(max(ys) / scale))
    if x0 > x1 or y0 > y1:
        warnings.warn(BoxOutsideGrid(f"box {q} produced no positive pixel"), stacklevel=2)
        return 0

    gy, gx = np.mgrid[y0:y1 + 1, x0:x1 + 1]
    px, py = gx * scale, gy * scale
    inside = np.ones(px.shape, dtype=bool)
    for i in range(4):
        ax, ay = core[i]
        bx, by = core[(i + 1) % 4]
        inside &= (bx - ax) * (py - ay) - (by - ay) * (px - ax) >= 0
    count = int(inside.sum())
    if count == 0:
        warnings.warn(BoxOutsideGrid(f"box {q} produced no positive pixel"), stacklevel=2)
        return 0

    u = c * px[inside] + s * py[inside]
    v = -s * px[inside] + c * py[inside]
    rows, cols = gy[inside], gx[inside]
    ch = gmap.channels
    ch[SCORE, rows, cols] = 1.0
    ch[D_TOP, rows, cols] = v - vmin
    ch[D_LEFT, rows, cols] = u - umin
    ch[D_BOTTOM, rows, cols] = vmax - v
    ch[D_RIGHT, rows, cols] = umax - u
    ch[SIN, rows, cols] = s
    ch[COS, rows, cols] = c
    return count


def threshold_and_decode(gmap: GeometryMap, threshold: float = DEFAULT_THRESHOLD,
                         scale: float = DEFAULT_SCALE) -> list[OrientedBox]:
    """Decode every pixel with score above ``threshold``, in row-major order.

    Negative distances are clamped to zero; pixels whose angle vector is
    (near) zero or whose box has zero area are skipped.
    """
    ch = gmap.channels
    ys, xs = np.nonzero(ch[SCORE] > threshold)
    if len(ys) == 0:
        return []
    score = ch[SCORE, ys, xs]
    dt, dl, db, dr = (np.maximum(ch[k, ys, xs], 0.0) for k in (D_TOP, D_LEFT, D_BOTTOM, D_RIGHT))
    st, ct = ch[SIN, ys, xs], ch[COS, ys, xs]
    norm = np.hypot(st, ct)
    keep = (norm >= _ANGLE_EPS) & ((dl + dr) * (dt + db) > 0)
    norm = np.where(keep, norm, 1.0)
    s, c = st / norm, ct / norm
    theta = np.arctan2(s, c)
    theta = np.where(theta <= -np.pi, np.pi, theta)
    px, py = xs * scale, ys * scale
    corners = []
    for u, v in ((-dl, -dt), (dr, -dt), (dr, db), (-dl, db)):
        corners.append(np.stack([px + c * u - s * v, py + s * u + c * v], axis=1))
    quads = np.stack(corners, axis=1).tolist()
    out = []
    for i in np.flatnonzero(keep).tolist():
        q = quads[i]
        out.append(OrientedBox(tuple(map(tuple, q)), float(theta[i]), float(score[i]), i))
    return out


def convex_hull(points) -> list[tuple[float, float]]:
    """Monotone-chain hull, returned with positive (clockwise on screen) orientation."""
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return _positive(lower[:-1] + upper[:-1])


def region_iou(a, b) -> float:
    """quad_iou that falls back to convex hulls for non-convex regions."""
    if not is_convex(a):
        a = convex_hull(a)
    if not is_convex(b):
        b = convex_hull(b)
    if len(a) < 3 or len(b) < 3:
        return 0.0
    return quad_iou(a, b)
