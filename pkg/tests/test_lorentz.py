import math

import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from lruled.lorentz import (
    AngleKind,
    CausalCharacter,
    DegenerateSpanError,
    LVec3,
    NotTimelikeError,
    NullInputError,
    OppositeTimeconesError,
    angle_between,
    causal_character,
    det3,
    euclid_sq,
    lorentz_cross,
    metric,
    norm,
    same_timecone,
)

coord = st.floats(-100.0, 100.0)
vectors = st.builds(LVec3, coord, coord, coord)
scalars = st.floats(-100.0, 100.0)


def timelike(a: float, b: float, margin: float, sign: int) -> LVec3:
    return LVec3(a, b, math.copysign(math.sqrt(a * a + b * b + margin), sign))


timelikes = st.builds(
    timelike,
    st.floats(-50.0, 50.0),
    st.floats(-50.0, 50.0),
    st.floats(0.1, 100.0),
    st.sampled_from([-1, 1]),
)


def spacelike(a: float, b: float, t: float) -> LVec3:
    return LVec3(a, b, t * math.sqrt(a * a + b * b))


spacelikes = st.builds(
    spacelike,
    st.floats(0.5, 50.0),
    st.floats(-50.0, 50.0),
    st.floats(-0.9, 0.9),
)


def _en(v: LVec3) -> float:
    return math.sqrt(euclid_sq(v))


class TestMetricAndNorm:
    def test_third_coordinate_carries_minus(self):
        assert metric(LVec3(0, 0, 1), LVec3(0, 0, 1)) == -1.0

    def test_orthogonal_axes(self):
        assert metric(LVec3(1, 0, 0), LVec3(0, 1, 0)) == 0.0

    def test_null_vector(self):
        assert metric(LVec3(1, 0, 1), LVec3(1, 0, 1)) == 0.0

    def test_norm_examples(self):
        assert norm(LVec3(0, 0, 2)) == 2.0
        assert norm(LVec3(3, 4, 0)) == 5.0
        assert norm(LVec3(1, 0, 1)) == 0.0

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            LVec3(float("nan"), 0.0, 0.0)
        with pytest.raises(ValueError):
            LVec3(0.0, float("inf"), 0.0)

    @given(vectors, vectors, vectors, scalars, scalars)
    def test_bilinear_symmetric(self, v, w, a, s, t):
        combo = v * s + w * t
        lhs = metric(combo, a)
        rhs = s * metric(v, a) + t * metric(w, a)
        scale = max(1.0, abs(s) * _en(v) * _en(a), abs(t) * _en(w) * _en(a))
        assert abs(lhs - rhs) <= 1e-12 * scale
        assert metric(v, w) == metric(w, v)


class TestCausalCharacter:
    def test_examples(self):
        assert causal_character(LVec3(0, 0, 1)) is CausalCharacter.TIMELIKE
        assert causal_character(LVec3(1, 0, 0)) is CausalCharacter.SPACELIKE
        assert causal_character(LVec3(1, 0, 1)) is CausalCharacter.NULL

    def test_zero_vector_is_spacelike(self):
        assert causal_character(LVec3(0, 0, 0)) is CausalCharacter.SPACELIKE

    def test_classification_stable_under_scaling_up(self):
        # the null band grows with the squared Euclidean magnitude, so large
        # vectors classify the same as their unit rescalings
        v = LVec3(1.0, 2.0, 1.0)
        w = LVec3(3.0, 0.1, 4.0)
        for s in (1.0, 1e4, 1e8):
            assert causal_character(v * s) is CausalCharacter.SPACELIKE
            assert causal_character(w * s) is CausalCharacter.TIMELIKE

    def test_near_null_band(self):
        v = LVec3(1.0, 0.0, 1.0 + 1e-12)
        assert causal_character(v) is CausalCharacter.NULL


class TestLorentzCross:
    def test_axis_product(self):
        assert lorentz_cross(LVec3(1, 0, 0), LVec3(0, 1, 0)) == LVec3(0, 0, 1)

    def test_second_axis_product(self):
        # direct component evaluation of the product formula:
        # (v3w2 - v2w3, v1w3 - v3w1, v1w2 - v2w1) at v=(0,1,0), w=(0,0,1)
        assert lorentz_cross(LVec3(0, 1, 0), LVec3(0, 0, 1)) == LVec3(-1, 0, 0)

    @given(vectors)
    def test_self_product_vanishes(self, v):
        assert lorentz_cross(v, v) == LVec3(0, 0, 0)

    @given(vectors, vectors)
    def test_antisymmetry_exact(self, v, w):
        a = lorentz_cross(v, w)
        b = lorentz_cross(w, v)
        assert a.x1 == -b.x1 and a.x2 == -b.x2 and a.x3 == -b.x3

    @given(vectors, vectors)
    def test_orthogonal_to_both_factors(self, v, w):
        c = lorentz_cross(v, w)
        scale = max(1.0, _en(v) * _en(v) * _en(w), _en(v) * _en(w) * _en(w))
        assert abs(metric(c, v)) <= 1e-12 * scale
        assert abs(metric(c, w)) <= 1e-12 * scale


def test_det3_matches_row_expansion():
    a, b, c = LVec3(1, 2, 3), LVec3(0, 1, 4), LVec3(5, 6, 0)
    assert det3(a, b, c) == 1.0  # classic integer determinant


class TestTimecone:
    def test_same_cone(self):
        assert same_timecone(LVec3(0, 0, 1), LVec3(0, 0, 2)) is True

    def test_opposite_cones(self):
        assert same_timecone(LVec3(0, 0, 1), LVec3(0, 0, -1)) is False

    def test_tilted_pair(self):
        # g = -sqrt(2) < 0: same cone
        assert same_timecone(LVec3(0, 0, 1), LVec3(0, 1, math.sqrt(2))) is True

    def test_requires_timelike(self):
        with pytest.raises(NotTimelikeError):
            same_timecone(LVec3(1, 0, 0), LVec3(0, 0, 1))
        with pytest.raises(NotTimelikeError):
            same_timecone(LVec3(0, 0, 1), LVec3(1, 0, 1))

    @given(timelikes, timelikes)
    def test_reverse_cauchy_schwarz(self, v, w):
        scale = max(1.0, norm(v) * norm(w))
        assert abs(metric(v, w)) >= norm(v) * norm(w) - 1e-12 * scale

    @given(spacelikes, spacelikes)
    def test_cauchy_schwarz_on_spacelike_spans(self, v, w):
        # |g(v,w)| <= |v||w| exactly when the pair spans a spacelike plane
        gram = metric(v, v) * metric(w, w) - metric(v, w) ** 2
        assume(gram > 1e-9 * max(1.0, euclid_sq(v) * euclid_sq(w)))
        scale = max(1.0, norm(v) * norm(w))
        assert abs(metric(v, w)) <= norm(v) * norm(w) + 1e-12 * scale


class TestAngles:
    def test_euclidean_right_angle(self):
        result = angle_between(LVec3(1, 0, 0), LVec3(0, 1, 0))
        assert result.kind is AngleKind.SPACELIKE_SPACELIKE_EUCLIDEAN
        assert result.theta == pytest.approx(math.pi / 2, abs=1e-15)

    def test_timelike_pair(self):
        result = angle_between(LVec3(0, 0, 1), LVec3(0, 1, math.sqrt(2)))
        assert result.kind is AngleKind.TIMELIKE_TIMELIKE
        assert result.theta == pytest.approx(math.acosh(math.sqrt(2)), abs=1e-12)
        assert result.theta == pytest.approx(0.881373587019543, abs=1e-9)

    def test_spacelike_pair_timelike_span(self):
        result = angle_between(LVec3(1, 0, 0), LVec3(2, 0, math.sqrt(3)))
        assert result.kind is AngleKind.SPACELIKE_SPACELIKE_HYPERBOLIC
        assert result.theta == pytest.approx(math.acosh(2.0), abs=1e-12)
        assert result.theta == pytest.approx(1.316957896924817, abs=1e-9)

    def test_mixed_pair(self):
        result = angle_between(LVec3(1, 0, 0), LVec3(1, 0, math.sqrt(2)))
        assert result.kind is AngleKind.SPACELIKE_TIMELIKE
        assert result.theta == pytest.approx(math.asinh(1.0), abs=1e-12)

    def test_null_input_rejected(self):
        with pytest.raises(NullInputError):
            angle_between(LVec3(1, 0, 1), LVec3(1, 0, 0))
        with pytest.raises(NullInputError):
            angle_between(LVec3(1, 0, 0), LVec3(0, 0, 0))

    def test_opposite_timecones_rejected(self):
        with pytest.raises(OppositeTimeconesError):
            angle_between(LVec3(0, 0, 1), LVec3(0, 0, -1))

    def test_degenerate_span_rejected(self):
        # span of (1,0,0) and (1,1,1) contains the null direction (0,1,1)
        with pytest.raises(DegenerateSpanError):
            angle_between(LVec3(1, 0, 0), LVec3(1, 1, 1))

    @given(timelikes, timelikes)
    def test_timelike_angle_reconstructs_metric(self, v, w):
        assume(metric(v, w) < 0.0)
        result = angle_between(v, w)
        recon = -norm(v) * norm(w) * math.cosh(result.theta)
        assert abs(recon - metric(v, w)) <= 1e-9 * max(1.0, abs(metric(v, w)))

    @given(spacelikes, spacelikes)
    def test_spacelike_angle_reconstructs_metric(self, v, w):
        gram = metric(v, v) * metric(w, w) - metric(v, w) ** 2
        assume(abs(gram) > 1e-6 * max(1.0, euclid_sq(v) * euclid_sq(w)))
        result = angle_between(v, w)
        if result.kind is AngleKind.SPACELIKE_SPACELIKE_EUCLIDEAN:
            recon = norm(v) * norm(w) * math.cos(result.theta)
            assert abs(recon - metric(v, w)) <= 1e-9 * max(1.0, abs(metric(v, w)))
        else:
            recon = norm(v) * norm(w) * math.cosh(result.theta)
            assert abs(recon - abs(metric(v, w))) <= 1e-9 * max(1.0, abs(metric(v, w)))

    @given(st.one_of(timelikes, spacelikes), st.one_of(timelikes, spacelikes))
    def test_angle_symmetric(self, v, w):
        try:
            first = angle_between(v, w)
        except (NullInputError, OppositeTimeconesError, DegenerateSpanError):
            return
        second = angle_between(w, v)
        assert first.kind is second.kind
        assert abs(first.theta - second.theta) <= 1e-14 * max(1.0, abs(first.theta))
