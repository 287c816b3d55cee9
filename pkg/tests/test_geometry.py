import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from circproto.errors import ContractViolation
from circproto.geometry import (
    RingLayout,
    arc_midpoint_positions,
    intra_ring_gap,
    min_cross_distance,
    prototype_positions,
)


def _close(points, expected, tol=1e-12):
    assert len(points) == len(expected)
    for (x, y), (ex, ey) in zip(points, expected):
        assert abs(x - ex) <= tol and abs(y - ey) <= tol


def _brute_min(a, b):
    return min(math.dist(p, q) for p in a for q in b)


def test_origin_ring_is_single_point():
    _close(prototype_positions(RingLayout(0, 1.0, 1)), [(0.0, 0.0)])
    _close(arc_midpoint_positions(RingLayout(0, 1.0, 1)), [(0.0, 0.0)])


def test_quarter_turn_prototypes():
    _close(prototype_positions(RingLayout(1, 1.0, 4)), [(1, 0), (0, 1), (-1, 0), (0, -1)])


def test_rotated_triangle():
    pts = prototype_positions(RingLayout(2, 0.5, 3, math.pi / 6))
    expected = [
        (math.cos(a), math.sin(a))
        for a in (math.pi / 6, math.pi / 6 + 2 * math.pi / 3, math.pi / 6 + 4 * math.pi / 3)
    ]
    _close(pts, expected)
    for p in pts:
        assert math.hypot(*p) == pytest.approx(1.0, abs=1e-12)
    for p, q in zip(pts, pts[1:] + pts[:1]):
        cosang = (p[0] * q[0] + p[1] * q[1]) / (math.hypot(*p) * math.hypot(*q))
        assert math.acos(max(-1.0, min(1.0, cosang))) == pytest.approx(2 * math.pi / 3, abs=1e-9)


def test_midpoints_of_antipodal_pair():
    _close(arc_midpoint_positions(RingLayout(1, 1.0, 2)), [(0, 1), (0, -1)])


def test_midpoints_are_prototypes_rotated_by_half_step():
    mids = arc_midpoint_positions(RingLayout(1, 1.0, 4))
    turned = prototype_positions(RingLayout(1, 1.0, 4, math.pi / 4))
    _close(mids, turned)
    angles = [math.atan2(y, x) % (2 * math.pi) for x, y in mids]
    assert angles == pytest.approx([math.pi / 4, 3 * math.pi / 4, 5 * math.pi / 4, 7 * math.pi / 4])


@pytest.mark.parametrize(
    "t,count,expected",
    [(0, 1, 0.0), (1, 1, 2.0), (1, 2, math.sqrt(2.0))],
)
def test_intra_ring_gap(t, count, expected):
    assert intra_ring_gap(RingLayout(t, 1.0, count)) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("mode", ["proto-to-midpoint", "midpoint-to-proto"])
def test_cross_distance_from_origin_is_radius(mode):
    assert min_cross_distance(RingLayout(0, 1.0, 1), RingLayout(1, 1.0, 3), mode) == pytest.approx(1.0)


def test_cross_distance_single_pair():
    d = min_cross_distance(RingLayout(1, 1.0, 1), RingLayout(2, 1.0, 1), "proto-to-midpoint")
    assert d == pytest.approx(3.0, abs=1e-12)


def test_cross_distance_two_by_two():
    d = min_cross_distance(RingLayout(1, 1.0, 2), RingLayout(2, 1.0, 2), "midpoint-to-proto")
    assert d == pytest.approx(math.sqrt(5.0), abs=1e-12)


def test_rejects_non_adjacent_rings():
    with pytest.raises(ContractViolation):
        min_cross_distance(RingLayout(1, 1.0, 3), RingLayout(3, 1.0, 3), "proto-to-midpoint")
    with pytest.raises(ContractViolation):
        min_cross_distance(RingLayout(1, 1.0, 3), RingLayout(2, 2.0, 3), "proto-to-midpoint")


@pytest.mark.parametrize(
    "kwargs",
    [dict(t=-1, c=1.0, count=1), dict(t=1, c=0.0, count=1), dict(t=1, c=1.0, count=0), dict(t=1.5, c=1.0, count=2)],
)
def test_invalid_layouts(kwargs):
    with pytest.raises(ContractViolation):
        RingLayout(**kwargs)


def test_rotation_normalized():
    assert RingLayout(1, 1.0, 3, -math.pi / 2).rotation == pytest.approx(3 * math.pi / 2)
    assert 0.0 <= RingLayout(1, 1.0, 3, 7 * math.pi).rotation < 2 * math.pi


rings = st.tuples(
    st.integers(0, 8),
    st.integers(1, 30),
    st.integers(1, 30),
    st.floats(0.0, 2 * math.pi),
    st.floats(0.1, 5.0),
)


@settings(max_examples=100, deadline=None)
@given(rings, st.floats(0.0, 2 * math.pi))
def test_common_rotation_leaves_distances_unchanged(r, phi):
    t, m, n, theta, c = r
    a, b = RingLayout(t, c, m, 0.0), RingLayout(t + 1, c, n, theta)
    a2, b2 = RingLayout(t, c, m, phi), RingLayout(t + 1, c, n, theta + phi)
    for mode in ("proto-to-midpoint", "midpoint-to-proto"):
        assert min_cross_distance(a2, b2, mode) == pytest.approx(min_cross_distance(a, b, mode), rel=1e-12, abs=1e-12)
    assert intra_ring_gap(a2) == pytest.approx(intra_ring_gap(a), rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(rings, st.floats(0.01, 100.0))
def test_distances_scale_with_c(r, k):
    t, m, n, theta, c = r
    a, b = RingLayout(t, c, m, 0.0), RingLayout(t + 1, c, n, theta)
    ak, bk = RingLayout(t, c * k, m, 0.0), RingLayout(t + 1, c * k, n, theta)
    for mode in ("proto-to-midpoint", "midpoint-to-proto"):
        assert min_cross_distance(ak, bk, mode) == pytest.approx(k * min_cross_distance(a, b, mode), rel=1e-12)
    assert intra_ring_gap(bk) == pytest.approx(k * intra_ring_gap(b), rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(rings)
def test_cross_distance_matches_pairwise_and_cosine_forms(r):
    t, m, n, theta, c = r
    a, b = RingLayout(t, c, m, 0.0), RingLayout(t + 1, c, n, theta)
    r1, r2 = t * c, (t + 1) * c

    def cosine_form(phase_i, phase_j):
        return min(
            math.sqrt(max(r1**2 + r2**2 - 2 * r1 * r2 * math.cos(
                (2 * math.pi * i + phase_i) / m - (2 * math.pi * j + phase_j) / n - theta), 0.0))
            for i in range(1, m + 1)
            for j in range(1, n + 1)
        )

    d1 = min_cross_distance(a, b, "proto-to-midpoint")
    d2 = min_cross_distance(a, b, "midpoint-to-proto")
    assert d1 == pytest.approx(_brute_min(prototype_positions(a), arc_midpoint_positions(b)), abs=1e-12)
    assert d2 == pytest.approx(_brute_min(arc_midpoint_positions(a), prototype_positions(b)), abs=1e-12)
    assert d1 == pytest.approx(cosine_form(0.0, math.pi), abs=1e-9)
    assert d2 == pytest.approx(cosine_form(math.pi, 0.0), abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(rings)
def test_gap_is_prototype_to_first_midpoint(r):
    t, m, _, theta, c = r
    lay = RingLayout(t, c, m, theta)
    p0, q0 = prototype_positions(lay)[0], arc_midpoint_positions(lay)[0]
    assert intra_ring_gap(lay) == pytest.approx(math.dist(p0, q0), abs=1e-12 * max(1.0, lay.radius))


def test_position_arrays_have_count_rows():
    lay = RingLayout(3, 0.7, 11, 0.3)
    assert len(prototype_positions(lay)) == 11
    assert np.allclose([math.hypot(*p) for p in arc_midpoint_positions(lay)], 2.1)
