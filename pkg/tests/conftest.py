import math
import sys

import pytest
from shapely.geometry import Polygon


def rect(cx, cy, w, h, theta=0.0):
    s, c = math.sin(theta), math.cos(theta)
    return tuple(
        (cx + c * u - s * v, cy + s * u + c * v)
        for u, v in ((-w / 2, -h / 2), (w / 2, -h / 2), (w / 2, h / 2), (-w / 2, h / 2))
    )


def shapely_iou(a, b):
    pa, pb = Polygon(a), Polygon(b)
    union = pa.union(pb).area
    return pa.intersection(pb).area / union if union > 0 else 0.0


@pytest.fixture
def tmp(tmp_path):
    return tmp_path


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(module.RESULTS):
            terminalreporter.write_line(line)
