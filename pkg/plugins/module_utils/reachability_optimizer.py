#!/usr/bin/python
#
#    Suprema of the separation rate over evader reachable sets, trigger-time
#    root finding and the memory-aware duration with its forgetting rule.
#
##

from __future__ import absolute_import, division, print_function
__metaclass__ = type

import math
import logging
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import Disc
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import Vec2
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import disc_contains_disc
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import EmptyIntersectionError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import SolverError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.trigger_laws import check_nu
from ansible_collections.pursuit.self_triggered.plugins.module_utils.trigger_laws import phi_noisy
logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class HistoryEntry:
    estimate: Vec2
    error: float
    elapsed: float


@dataclass(frozen=True)
class EstimateHistory:
    """
    Previous evader estimates in the canonical frame of the current sample,
    most recent first. ``elapsed`` is the time between that estimate and the
    current sample.
    """
    entries: tuple = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        previous = 0.0
        for j, entry in enumerate(entries, start=1):
            if not entry.error >= 0.0:
                raise ParameterError("history entry {0} has negative error radius {1}".format(j, entry.error))
            if not entry.elapsed > previous:
                raise ParameterError("history entry {0} elapsed time {1} is not strictly increasing".format(j, entry.elapsed))
            previous = entry.elapsed
        object.__setattr__(self, 'entries', entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def discs(self, tau, nu):
        return [Disc(entry.estimate, nu * (tau + entry.elapsed) + entry.error) for entry in self.entries]

    def without(self, indices):
        """Drop the 1-based entries named in ``indices``."""
        return EstimateHistory(tuple(entry for j, entry in enumerate(self.entries, start=1) if j not in indices))


@dataclass(frozen=True)
class RdotProblem:
    tau: float
    nu: float
    feasible_set: tuple

    def __post_init__(self):
        object.__setattr__(self, 'feasible_set', tuple(self.feasible_set))
        if not self.feasible_set:
            raise ParameterError("feasible_set must hold at least one disc")
        if not self.tau >= 0.0:
            raise ParameterError("elapsed time tau must be nonnegative, got {0}".format(self.tau))

    def supremum(self):
        return g_lens(self.tau, self.nu, self.feasible_set)


def rdot(tau, nu, x_e, y_e, theta_e):
    return nu * (x_e - tau) * np.cos(theta_e) + nu * y_e * np.sin(theta_e) + tau - x_e


def rdot_theta_maximized(tau, nu, x_e, y_e):
    return nu * np.hypot(x_e - tau, y_e) + tau - x_e


def relaxed_maximizer(tau, nu, d_hat, gamma=0.0):
    """
    x-coordinate maximizing the separation rate over the circle of radius
    nu*tau + gamma around (d_hat, 0), with the circle constraint relaxed to
    a free abscissa.
    """
    lead = d_hat - tau
    if lead <= 0.0:
        raise SolverError("relaxed maximizer undefined once the pursuer passes the estimate (tau={0}, d_hat={1})".format(tau, d_hat))
    rho = nu * tau + gamma
    return tau + ((1.0 + nu * nu) * lead * lead - rho * rho) / (2.0 * lead)


def g_single_disc(tau, nu, d_hat, gamma=0.0):
    """Relaxed separation rate of the current disc; bounds its supremum from above, equal at the trigger time."""
    check_nu(nu)
    if not tau >= 0.0:
        raise ParameterError("elapsed time tau must be nonnegative, got {0}".format(tau))
    if not gamma >= 0.0:
        raise ParameterError("error radius gamma must be nonnegative, got {0}".format(gamma))
    if not d_hat > 0.0:
        raise ParameterError("measured separation d_hat must be positive, got {0}".format(d_hat))
    if tau >= d_hat / (1.0 - nu):
        raise SolverError("tau {0} is past the overshoot horizon d_hat/(1-nu) = {1}".format(tau, d_hat / (1.0 - nu)))
    rho = nu * tau + gamma
    lead = d_hat - tau
    if lead <= 0.0:
        # disc centre behind the pursuer: the near pole is the worst point
        return float(rdot_theta_maximized(tau, nu, d_hat - rho, 0.0))
    x_star = relaxed_maximizer(tau, nu, d_hat, gamma)
    return nu * nu * lead - (x_star - tau)


def _clip_intervals(intervals, center, half):
    start = (center - half) % TWO_PI
    stop = start + 2.0 * half
    pieces = [(start, min(stop, TWO_PI))]
    if stop > TWO_PI:
        pieces.append((0.0, stop - TWO_PI))
    clipped = []
    for lo, hi in intervals:
        for a, b in pieces:
            left, right = max(lo, a), min(hi, b)
            if right > left:
                clipped.append((left, right))
    return clipped


def _circle_arcs(index, discs):
    own = discs[index]
    intervals = [(0.0, TWO_PI)]
    for j, other in enumerate(discs):
        if j == index:
            continue
        gap = own.center.distance_to(other.center)
        if gap < PursuitConstants.GEOM_TOL:
            if own.radius <= other.radius + PursuitConstants.GEOM_TOL:
                continue
            return []
        cosine = (own.radius ** 2 + gap ** 2 - other.radius ** 2) / (2.0 * own.radius * gap)
        if cosine <= -1.0:
            continue
        if cosine > 1.0:
            return []
        bearing = math.atan2(other.center.y - own.center.y, other.center.x - own.center.x)
        intervals = _clip_intervals(intervals, bearing, math.acos(cosine))
        if not intervals:
            return []
    return [(lo, hi) for lo, hi in intervals if hi - lo >= PursuitConstants.MIN_ARC]


def _irredundant(discs):
    kept = []
    for i, disc in enumerate(discs):
        redundant = False
        for j, other in enumerate(discs):
            if j == i or not disc_contains_disc(disc, other):
                continue
            # of two equal discs only the first is kept
            if j < i or not disc_contains_disc(other, disc):
                redundant = True
                break
        if not redundant:
            kept.append(disc)
    return kept


def _lens_point(discs):
    tol = PursuitConstants.TANGENT_TOL
    candidates = [disc.center for disc in discs if disc.radius <= tol]
    for i, a in enumerate(discs):
        for b in discs[i + 1:]:
            gap = a.center.distance_to(b.center)
            if gap < PursuitConstants.GEOM_TOL:
                continue
            toward = (b.center - a.center).scaled(1.0 / gap)
            if abs(gap - (a.radius + b.radius)) <= tol:
                candidates.append(a.center + toward.scaled(a.radius))
            elif abs(gap - abs(a.radius - b.radius)) <= tol:
                if a.radius >= b.radius:
                    candidates.append(a.center + toward.scaled(a.radius))
                else:
                    candidates.append(b.center - toward.scaled(b.radius))
    for point in candidates:
        if all(disc.contains_point(point, tol) for disc in discs):
            return point
    raise EmptyIntersectionError("reachable discs have an empty intersection: {0}".format(discs))


def _arc_maximum(tau, nu, disc, start, stop):
    cx, cy, radius = disc.center.x, disc.center.y, disc.radius

    def negated(theta):
        return -(nu * math.hypot(cx + radius * math.cos(theta) - tau, cy + radius * math.sin(theta))
                 + tau - cx - radius * math.cos(theta))

    thetas = np.linspace(start, stop, PursuitConstants.ARC_SEEDS)
    values = rdot_theta_maximized(tau, nu, cx + radius * np.cos(thetas), cy + radius * np.sin(thetas))
    best = float(values.max())
    last = len(thetas) - 1
    for i in range(1, last):
        if values[i] > values[i - 1] and values[i] > values[i + 1]:
            try:
                result = optimize.minimize_scalar(negated, bracket=(thetas[i - 1], thetas[i], thetas[i + 1]),
                                                  method='golden', options={'xtol': PursuitConstants.GOLDEN_XTOL})
            except ValueError:
                # seed values and the scalar objective disagree in the last bit
                result = optimize.minimize_scalar(negated, bounds=(thetas[i - 1], thetas[i + 1]), method='bounded',
                                                  options={'xatol': PursuitConstants.GOLDEN_XTOL})
            best = max(best, -float(result.fun))
    # a maximum hiding between an arc end and its first seed
    for end, inner in ((0, 1), (last, last - 1)):
        if values[end] >= values[inner]:
            lo, hi = sorted((thetas[end], thetas[inner]))
            result = optimize.minimize_scalar(negated, bounds=(lo, hi), method='bounded',
                                              options={'xatol': PursuitConstants.GOLDEN_XTOL})
            best = max(best, -float(result.fun))
    return best


def g_lens(tau, nu, feasible_set):
    """
    Supremum of the theta-maximized separation rate over the intersection of
    ``feasible_set``. The objective is convex so only the boundary arcs of
    the intersection are searched.
    """
    discs = _irredundant(list(feasible_set))
    best = -math.inf
    for index, disc in enumerate(discs):
        if disc.radius <= PursuitConstants.TANGENT_TOL:
            continue
        for start, stop in _circle_arcs(index, discs):
            best = max(best, _arc_maximum(tau, nu, disc, start, stop))
    if best == -math.inf:
        point = _lens_point(discs)
        logger.debug("lens degenerated to the point %s at tau=%s", point, tau)
        best = float(rdot_theta_maximized(tau, nu, point.x, point.y))
    return best


def reachable_set(tau, nu, d_hat, gamma, history):
    current = Disc(Vec2(d_hat, 0.0), nu * tau + gamma)
    return [current] + history.discs(tau, nu)


def delta_phi_star(nu, gamma):
    """Largest gain in sleep duration obtainable from one retained estimate."""
    check_nu(nu)
    if not gamma >= 0.0:
        raise ParameterError("error radius gamma must be nonnegative, got {0}".format(gamma))
    s = math.sqrt(1.0 - nu * nu)
    return 2.0 * gamma / (nu + s)


def trigger_time(nu, d_hat, gamma, history, check_tolerance=True):
    lower = phi_noisy(d_hat, gamma, nu, check_tolerance=check_tolerance)
    if history is None or not len(history):
        return lower

    def g_hat(tau):
        return RdotProblem(tau, nu, reachable_set(tau, nu, d_hat, gamma, history)).supremum()

    slack = PursuitConstants.GEOM_TOL * max(1.0, d_hat)
    if g_hat(lower) >= -slack:
        logger.debug("history adds nothing at d_hat=%s, keeping phi=%s", d_hat, lower)
        return lower

    cap = d_hat / (1.0 - nu)
    upper = lower + delta_phi_star(nu, gamma)
    if upper <= lower:
        upper = lower * PursuitConstants.BRACKET_GROWTH
    while g_hat(upper) < 0.0:
        if upper >= cap:
            raise SolverError("no sign change of the lens rate below the cap {0} (d_hat={1}, gamma={2})".format(cap, d_hat, gamma))
        upper = min(lower + (upper - lower) * PursuitConstants.BRACKET_GROWTH, cap)

    root = optimize.bisect(g_hat, lower, upper, xtol=PursuitConstants.BISECT_XTOL, rtol=PursuitConstants.BISECT_RTOL)
    logger.debug("trigger time bracket [%s, %s] -> %s with %s retained estimates", lower, upper, root, len(history))
    return float(root)


def forget_set(current, history, nu, gamma):
    """
    1-based indices of retained estimates whose zero-time reachable disc
    contains the current measurement disc or another retained disc.
    """
    check_nu(nu)
    if abs(current.radius - gamma) > PursuitConstants.GEOM_TOL:
        raise ParameterError("current disc radius {0} does not match gamma {1}".format(current.radius, gamma))
    discs = history.discs(0.0, nu)
    forgotten = set()
    for i, disc in enumerate(discs, start=1):
        if disc_contains_disc(disc, current):
            forgotten.add(i)
            continue
        for l, other in enumerate(discs, start=1):
            if l == i or not disc_contains_disc(disc, other):
                continue
            if l < i or not disc_contains_disc(other, disc):
                forgotten.add(i)
                break
    logger.debug("forget set %s of %s retained estimates", sorted(forgotten), len(discs))
    return frozenset(forgotten)
