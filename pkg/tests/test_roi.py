import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rect, shapely_iou
from textspot.errors import DegenerateQuad
from textspot.model_io import WordAnnotation
from textspot.roi import quad_extent, roi_dims, roi_spec, sample_quad, select_training_rois
from textspot.script_id import ScriptClass
from textspot.synthgen import render_words


def test_roi_dims_examples():
    assert roi_dims(rect(50, 50, 100, 20), 40) == (200, 50)
    assert roi_dims(rect(50, 50, 30, 30), 40)[0] == 40
    assert roi_dims(rect(500, 500, 1, 1000), 40) == (1, 1)
    spec = roi_spec(rect(50, 50, 100, 20))
    assert (spec.height, spec.width, spec.ctc_frames) == (40, 200, 50)


def test_roi_dims_degenerate():
    with pytest.raises(DegenerateQuad):
        roi_dims(((0, 0), (10, 0), (10, 0), (0, 0)), 40)


def test_extent_uses_mean_edge_lengths():
    trapezoid = ((0, 0), (10, 0), (12, 6), (-2, 6))
    w, h = quad_extent(trapezoid)
    assert w == pytest.approx(12)
    assert h == pytest.approx(math.hypot(2, 6))


@settings(max_examples=300)
@given(st.floats(1, 400), st.floats(4, 200), st.floats(-math.pi, math.pi), st.integers(8, 64))
def test_aspect_preserved_within_one_pixel(w, h, theta, height):
    width, frames = roi_dims(rect(0, 0, w, h, theta), height)
    assert abs(width - height * w / h) <= 1 or width == 1
    assert frames == max(1, width // 4)


def test_identity_sampling_on_grid_aligned_quad():
    img = np.random.default_rng(0).random((2, 30, 50))
    quad = ((7, 5), (27, 5), (27, 15), (7, 15))
    crop = sample_quad(img, quad, 10)
    assert crop.shape == (2, 10, 20)
    assert np.allclose(crop, img[:, 5:15, 7:27], rtol=0, atol=1e-12)


def test_center_average_of_two_by_two():
    img = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert sample_quad(img, ((0, 0), (2, 0), (2, 2), (0, 2)), 1, 1).tolist() == [[[0.5]]]


def test_out_of_bounds_reads_zero():
    img = np.ones((1, 4, 4))
    crop = sample_quad(img, ((10, 10), (14, 10), (14, 14), (10, 14)), 4, 4)
    assert not crop.any()


def test_vertical_word_crop_matches_horizontal_crop():
    text = "Hotel"
    flat = WordAnnotation.make(((10, 20), (50, 20), (50, 30), (10, 30)), text, ScriptClass.LATIN)
    # the same word turned a quarter turn clockwise: reading direction points down
    tall = WordAnnotation.make(((60, 10), (60, 50), (50, 50), (50, 10)), text, ScriptClass.LATIN)
    a = render_words(np.zeros((1, 64, 64)), [flat])
    b = render_words(np.zeros((1, 64, 64)), [tall])
    ca = sample_quad(a, flat.quad, 10)
    cb = sample_quad(b, tall.quad, 10)
    assert ca.shape == cb.shape == (1, 10, 40)
    assert ca.any()
    assert np.max(np.abs(ca - cb)) <= 1e-6


@given(st.floats(-4, 4), st.integers(-3, 3))
def test_intensity_linear(alpha, power):
    img = np.random.default_rng(1).random((1, 20, 20))
    quad = rect(10, 10, 12, 5, 0.3)
    base = sample_quad(img, quad, 8)
    assert np.array_equal(sample_quad(2.0**power * img, quad, 8), 2.0**power * base)
    assert np.allclose(sample_quad(alpha * img, quad, 8), alpha * base, rtol=1e-12, atol=1e-15)


@given(st.integers(-5, 5), st.integers(-5, 5), st.floats(-math.pi, math.pi))
def test_translation_invariance(dx, dy, theta):
    rng = np.random.default_rng(2)
    img = np.zeros((1, 60, 60))
    img[:, 10:50, 10:50] = rng.random((40, 40))
    moved = np.zeros_like(img)
    moved[:, 10 + dy:50 + dy, 10 + dx:50 + dx] = img[:, 10:50, 10:50]
    quad = rect(30, 30, 20, 8, theta)
    shifted = tuple((x + dx, y + dy) for x, y in quad)
    assert np.allclose(sample_quad(img, quad, 8), sample_quad(moved, shifted, 8), atol=1e-9)


def ann(quad, text):
    return WordAnnotation.make(quad, text, ScriptClass.LATIN)


def test_select_training_rois():
    g1, g2 = rect(20, 20, 30, 10), rect(80, 80, 30, 10)
    gts = [ann(g1, "one"), ann(g2, "two")]
    assert select_training_rois([g1], gts) == [(g1, "one")]
    # a horizontal shift s gives IoU (30 - s) / (30 + s); pick s for IoU 0.85
    s = 30 * 0.15 / 1.85
    off = tuple((x + s, y) for x, y in g2)
    assert shapely_iou(off, g2) == pytest.approx(0.85)
    assert select_training_rois([off], gts) == []
    assert select_training_rois([off], gts, 0.5) == [(off, "two")]


def test_select_training_rois_one_gt_each_and_dont_care():
    g = rect(20, 20, 30, 10)
    near = tuple((x + 0.1, y) for x, y in g)
    assert select_training_rois([near, g], [ann(g, "w")]) == [(g, "w")]
    assert select_training_rois([g], [ann(g, "###")]) == []
