#!/usr/bin/python
#
#    Geometric primitives and shared value types of the pursuit engine.
#
##

from __future__ import absolute_import, division, print_function
__metaclass__ = type

import math
import logging
from dataclasses import dataclass

from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import GeometryError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError
logger = logging.getLogger(__name__)


def wrap_angle(theta):
    """Wrap an angle in radians to (-pi, pi]."""
    wrapped = math.remainder(theta, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ParameterError("non-finite position ({0}, {1})".format(self.x, self.y))

    def __add__(self, other):
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Vec2(self.x - other.x, self.y - other.y)

    def scaled(self, factor):
        return Vec2(self.x * factor, self.y * factor)

    def norm(self):
        return math.hypot(self.x, self.y)

    def distance_to(self, other):
        return math.hypot(self.x - other.x, self.y - other.y)

    def heading(self):
        return math.atan2(self.y, self.x)

    @classmethod
    def polar(cls, length, theta):
        return cls(length * math.cos(theta), length * math.sin(theta))


@dataclass(frozen=True)
class AgentState:
    position: Vec2
    heading: float = 0.0

    def __post_init__(self):
        # stored wrapped so long runs never drift outside (-pi, pi]
        object.__setattr__(self, 'heading', wrap_angle(self.heading))


@dataclass(frozen=True)
class Disc:
    center: Vec2
    radius: float

    def __post_init__(self):
        if not self.radius >= 0.0:
            raise ParameterError("disc radius must be nonnegative, got {0}".format(self.radius))

    def inflated(self, amount):
        return Disc(self.center, self.radius + amount)

    def contains_point(self, point, tol=PursuitConstants.GEOM_TOL):
        return self.center.distance_to(point) <= self.radius + tol


@dataclass(frozen=True)
class CanonicalFrame:
    """
    Rigid transform taking world coordinates to the frame where the pursuer
    sits at the origin and the evader estimate lies on the positive x-axis.
    """
    origin: Vec2
    rotation: float

    def apply(self, point):
        dx = point.x - self.origin.x
        dy = point.y - self.origin.y
        c = math.cos(self.rotation)
        s = math.sin(self.rotation)
        return Vec2(c * dx - s * dy, s * dx + c * dy)

    def invert(self, point):
        c = math.cos(self.rotation)
        s = math.sin(self.rotation)
        return Vec2(c * point.x + s * point.y + self.origin.x,
                    -s * point.x + c * point.y + self.origin.y)

    def apply_disc(self, disc):
        return Disc(self.apply(disc.center), disc.radius)


@dataclass(frozen=True)
class Observation:
    estimate: Vec2
    gamma: float
    time: float = 0.0

    def disc(self):
        return Disc(self.estimate, self.gamma)


@dataclass(frozen=True)
class TriggerParams:
    nu: float
    d_hat: float
    gamma: float = 0.0
    epsilon: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.nu < 1.0:
            raise ParameterError("speed ratio nu must lie in [0, 1), got {0}".format(self.nu))
        if not self.d_hat > 0.0:
            raise ParameterError("measured separation d_hat must be positive, got {0}".format(self.d_hat))
        if not self.gamma >= 0.0:
            raise ParameterError("error radius gamma must be nonnegative, got {0}".format(self.gamma))
        if not self.epsilon > 0.0:
            raise ParameterError("capture radius epsilon must be positive, got {0}".format(self.epsilon))


def canonical_frame(pursuer, evader_estimate):
    separation = pursuer.distance_to(evader_estimate)
    if separation < PursuitConstants.GEOM_TOL:
        raise GeometryError("coincident pursuer and evader estimate (separation {0})".format(separation))
    bearing = (evader_estimate - pursuer).heading()
    frame = CanonicalFrame(origin=pursuer, rotation=wrap_angle(-bearing))
    logger.debug("canonical frame origin=%s rotation=%s separation=%s", pursuer, frame.rotation, separation)
    return frame


def disc_contains_disc(outer, inner):
    return outer.center.distance_to(inner.center) + inner.radius <= outer.radius + PursuitConstants.GEOM_TOL


def discs_intersect(a, b):
    return a.center.distance_to(b.center) <= a.radius + b.radius + PursuitConstants.GEOM_TOL
