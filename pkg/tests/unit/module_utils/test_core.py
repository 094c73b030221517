from __future__ import absolute_import, division, print_function
__metaclass__ = type

import math
import pytest

from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import AgentState
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import Disc
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import Observation
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import TriggerParams
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import Vec2
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import canonical_frame
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import disc_contains_disc
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import discs_intersect
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import wrap_angle
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import GeometryError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError

frame_data = [
    # pursuer, estimate
    (Vec2(0.0, 0.0), Vec2(5.0, 0.0)),
    (Vec2(1.0, 1.0), Vec2(1.0, 6.0)),
    (Vec2(-3.0, 2.0), Vec2(-7.0, -1.0)),
    (Vec2(2.5, -4.0), Vec2(-1.0, -4.0))]

params_error_data = [
    # nu outside [0, 1)
    ({'nu': 1.0, 'd_hat': 1.0}, "ParameterError: speed ratio nu must lie in [0, 1), got 1.0"),
    # zero separation
    ({'nu': 0.5, 'd_hat': 0.0}, "ParameterError: measured separation d_hat must be positive, got 0.0"),
    # negative error radius
    ({'nu': 0.5, 'd_hat': 1.0, 'gamma': -1.0}, "ParameterError: error radius gamma must be nonnegative, got -1.0"),
    # zero capture radius
    ({'nu': 0.5, 'd_hat': 1.0, 'epsilon': 0.0}, "ParameterError: capture radius epsilon must be positive, got 0.0")]


@pytest.mark.parametrize("pursuer, estimate", frame_data)
def test_canonical_frame_places_estimate_on_positive_axis(pursuer, estimate):
    frame = canonical_frame(pursuer, estimate)
    origin = frame.apply(pursuer)
    mapped = frame.apply(estimate)
    assert origin.norm() == pytest.approx(0.0, abs=1e-12)
    assert mapped.x == pytest.approx(pursuer.distance_to(estimate))
    assert mapped.y == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("pursuer, estimate", frame_data)
def test_canonical_frame_is_rigid_and_invertible(pursuer, estimate):
    frame = canonical_frame(pursuer, estimate)
    a, b = Vec2(3.0, -2.0), Vec2(-1.5, 4.0)
    assert frame.apply(a).distance_to(frame.apply(b)) == pytest.approx(a.distance_to(b))
    back = frame.invert(frame.apply(a))
    assert back.x == pytest.approx(a.x)
    assert back.y == pytest.approx(a.y)
    disc = frame.apply_disc(Disc(a, 0.7))
    assert disc.radius == 0.7


def test_canonical_frame_coincident_points():
    with pytest.raises(GeometryError) as e:
        canonical_frame(Vec2(1.0, 1.0), Vec2(1.0, 1.0))
    assert repr(e.value).startswith("GeometryError: coincident pursuer and evader estimate")


@pytest.mark.parametrize("theta, expected", [(0.0, 0.0), (math.pi, math.pi), (-math.pi, math.pi),
                                             (2.5 * math.pi, 0.5 * math.pi), (-2.5 * math.pi, -0.5 * math.pi),
                                             (-0.5 * math.pi, -0.5 * math.pi)])
def test_wrap_angle(theta, expected):
    assert wrap_angle(theta) == pytest.approx(expected)


def test_agent_heading_wrapped():
    assert AgentState(Vec2(0.0, 0.0), 2.5 * math.pi).heading == pytest.approx(0.5 * math.pi)


def test_vec2_rejects_non_finite():
    with pytest.raises(ParameterError):
        Vec2(float('nan'), 0.0)


def test_disc_rejects_negative_radius():
    with pytest.raises(ParameterError) as e:
        Disc(Vec2(0.0, 0.0), -1.0)
    assert "ParameterError: disc radius must be nonnegative, got -1.0" == repr(e.value)


def test_disc_predicates():
    big = Disc(Vec2(0.0, 0.0), 2.0)
    small = Disc(Vec2(1.0, 0.0), 1.0)
    far = Disc(Vec2(5.0, 0.0), 1.0)
    assert disc_contains_disc(big, small)
    assert not disc_contains_disc(small, big)
    assert discs_intersect(big, small)
    assert not discs_intersect(big, far)
    # external tangency counts as intersecting
    assert discs_intersect(Disc(Vec2(0.0, 0.0), 1.0), Disc(Vec2(2.0, 0.0), 1.0))
    assert big.contains_point(Vec2(0.0, 2.0))
    assert big.inflated(0.5).radius == 2.5


def test_observation_disc():
    disc = Observation(Vec2(1.0, 2.0), 0.1, time=3.0).disc()
    assert disc.center == Vec2(1.0, 2.0)
    assert disc.radius == 0.1


@pytest.mark.parametrize("params, expectedError", params_error_data)
def test_trigger_params_validation(params, expectedError):
    with pytest.raises(ParameterError) as e:
        TriggerParams(**params)
    assert expectedError == repr(e.value)
