#!/usr/bin/python
#
#    Event-driven simulation of the self-triggered pursuit with zero-order
#    hold control, injected measurement noise and guarantee checks.
#
##

from __future__ import absolute_import, division, print_function
__metaclass__ = type

import math
import logging
from dataclasses import dataclass, field, replace
from itertools import zip_longest
from typing import Optional

import numpy as np
from numba import njit

from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import AgentState
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import Observation
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import Vec2
from ansible_collections.pursuit.self_triggered.plugins.module_utils.core import canonical_frame
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import EmptyIntersectionError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import GeometryError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import SolverError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.reachability_optimizer import EstimateHistory
from ansible_collections.pursuit.self_triggered.plugins.module_utils.reachability_optimizer import HistoryEntry
from ansible_collections.pursuit.self_triggered.plugins.module_utils.reachability_optimizer import forget_set
from ansible_collections.pursuit.self_triggered.plugins.module_utils.reachability_optimizer import trigger_time
from ansible_collections.pursuit.self_triggered.plugins.module_utils import trigger_laws
logger = logging.getLogger(__name__)

POLICY_CODES = {'static': 0, 'pure_flee': 1, 'four_direction': 2, 'random': 3}


@njit
def _policy_heading(policy, px, py, ex, ey, drawn):
    if policy == 0:
        return np.nan
    if policy == 1:
        return math.atan2(ey - py, ex - px)
    if policy == 2:
        fx = ex - px
        fy = ey - py
        # +x, +y, -x, -y; strict comparison keeps the earlier axis on ties
        best = 0.0
        rate = fx
        if fy > rate:
            best = 0.5 * math.pi
            rate = fy
        if -fx > rate:
            best = math.pi
            rate = -fx
        if -fy > rate:
            best = -0.5 * math.pi
        return best
    return drawn


@njit
def _euler_step(px, py, ex, ey, pursuer_heading, evader_heading, nu, dt):
    px += dt * math.cos(pursuer_heading)
    py += dt * math.sin(pursuer_heading)
    if not math.isnan(evader_heading):
        ex += nu * dt * math.cos(evader_heading)
        ey += nu * dt * math.sin(evader_heading)
    return px, py, ex, ey


@njit
def _hold_interval(px, py, ex, ey, heading, nu, dt, n_steps, policy, drawn, epsilon):
    for i in range(n_steps):
        evader_heading = _policy_heading(policy, px, py, ex, ey, drawn[i])
        px, py, ex, ey = _euler_step(px, py, ex, ey, heading, evader_heading, nu, dt)
        if math.hypot(px - ex, py - ey) <= epsilon:
            return px, py, ex, ey, i + 1, True
    return px, py, ex, ey, n_steps, False


@dataclass(frozen=True)
class NoiseModel:
    kind: str = 'none'
    gamma: float = 0.0

    def __post_init__(self):
        if self.kind not in PursuitConstants.NOISE_KINDS:
            raise ParameterError("unsupported noise kind: {0}".format(self.kind))
        if not self.gamma >= 0.0:
            raise ParameterError("error radius gamma must be nonnegative, got {0}".format(self.gamma))
        if self.kind == 'none' and self.gamma != 0.0:
            raise ParameterError("noise kind 'none' requires gamma = 0, got {0}".format(self.gamma))

    @property
    def active(self):
        return self.kind != 'none' and self.gamma > 0.0


@dataclass(frozen=True)
class Scenario:
    pursuer_start: Vec2
    evader_start: Vec2
    nu: float
    epsilon: float
    noise: NoiseModel = field(default_factory=NoiseModel)
    evader_policy: str = 'pure_flee'
    trigger_mode: str = 'exact'
    memory: int = PursuitConstants.DEFAULT_MEMORY
    dt: float = PursuitConstants.DEFAULT_DT
    rng_seed: int = 0
    max_time: Optional[float] = None

    def __post_init__(self):
        trigger_laws.check_nu(self.nu)
        if not self.epsilon > 0.0:
            raise ParameterError("capture radius epsilon must be positive, got {0}".format(self.epsilon))
        if not self.dt > 0.0:
            raise ParameterError("integration step dt must be positive, got {0}".format(self.dt))
        if self.evader_policy not in POLICY_CODES:
            raise ParameterError("unsupported evader policy: {0}".format(self.evader_policy))
        if self.trigger_mode not in PursuitConstants.TRIGGER_MODES:
            raise ParameterError("unsupported trigger mode: {0}".format(self.trigger_mode))
        if self.memory < 1:
            raise ParameterError("memory window must hold at least one estimate, got {0}".format(self.memory))
        if self.rng_seed < 0:
            raise ParameterError("rng_seed must be a nonnegative integer, got {0}".format(self.rng_seed))
        if self.trigger_mode == 'exact' and self.noise.active:
            raise ParameterError("trigger mode 'exact' requires noise kind 'none', use 'noisy' or 'memory'")
        separation = self.pursuer_start.distance_to(self.evader_start)
        if not separation > self.epsilon:
            raise ParameterError("initial separation {0} must exceed the capture radius {1}".format(separation, self.epsilon))
        if self.noise.active:
            floor = self.noise.gamma / trigger_laws.beta_max(self.nu)
            if not self.epsilon > floor:
                raise ParameterError("capture radius {0} must exceed gamma/beta_max(nu) = {1}".format(self.epsilon, floor))
        if self.max_time is None:
            object.__setattr__(self, 'max_time', 2.0 * trigger_laws.finite_capture_bound(separation, self.nu))
        elif not self.max_time > 0.0:
            raise ParameterError("max_time must be positive, got {0}".format(self.max_time))

    @property
    def initial_separation(self):
        return self.pursuer_start.distance_to(self.evader_start)


@dataclass(frozen=True)
class EventRecord:
    k: int
    t_k: float
    d_true: float
    d_hat: float
    phi_k: float
    phi_memoryless: float
    history_size: int = 0
    admissible: bool = True

    def as_row(self):
        return [self.k, self.t_k, self.d_true, self.d_hat, self.phi_k]


@dataclass(frozen=True)
class EventLog:
    rows: tuple
    capture_time: Optional[float]
    samples_used: int
    violations: tuple = ()

    @property
    def captured(self):
        return self.capture_time is not None


def step_dynamics(state, controls, nu, dt):
    """
    One forward-Euler step of both agents. ``state`` is a (pursuer, evader)
    AgentState pair and ``controls`` a (pursuer, evader) heading pair; an
    evader heading of None leaves the evader in place.
    """
    if not dt > 0.0:
        raise ParameterError("integration step dt must be positive, got {0}".format(dt))
    pursuer, evader = state
    pursuer_heading, evader_heading = controls
    raw = np.nan if evader_heading is None else evader_heading
    px, py, ex, ey = _euler_step(pursuer.position.x, pursuer.position.y, evader.position.x, evader.position.y,
                                 pursuer_heading, raw, nu, dt)
    moved = AgentState(Vec2(ex, ey), evader.heading if evader_heading is None else evader_heading)
    return AgentState(Vec2(px, py), pursuer_heading), moved


def pursuer_control(pursuer, last_estimate):
    gap = last_estimate - pursuer
    if gap.norm() < PursuitConstants.GEOM_TOL:
        raise GeometryError("coincident pursuer and evader estimate at {0}".format(pursuer))
    return gap.heading()


def sample_evader(true_position, noise, rng, pursuer=None, time=0.0):
    gamma = noise.gamma
    if noise.kind == 'none' or gamma == 0.0:
        return Observation(true_position, gamma, time)
    if noise.kind == 'uniform_disc':
        u, turn = rng.random(2)
        return Observation(true_position + Vec2.polar(gamma * math.sqrt(u), 2.0 * math.pi * turn), gamma, time)
    if pursuer is None:
        raise ParameterError("noise kind '{0}' needs the pursuer position".format(noise.kind))
    bearing = (true_position - pursuer).heading()
    if noise.kind == 'worst_case_boundary':
        return Observation(true_position + Vec2.polar(gamma, bearing + 0.5 * math.pi), gamma, time)
    return Observation(true_position + Vec2.polar(gamma, bearing), gamma, time)


def evader_policy(kind, evader, pursuer_true, nu, rng=None):
    """Heading of the evader under ``kind``, None for a stationary evader."""
    trigger_laws.check_nu(nu)
    if kind not in POLICY_CODES:
        raise ParameterError("unsupported evader policy: {0}".format(kind))
    drawn = 0.0
    if kind == 'random':
        rng = rng if rng is not None else np.random.default_rng()
        drawn = rng.uniform(-math.pi, math.pi)
    heading = _policy_heading(POLICY_CODES[kind], pursuer_true.x, pursuer_true.y, evader.x, evader.y, drawn)
    return None if math.isnan(heading) else float(heading)


def scenario_bounds(scenario):
    d0, eps, nu = scenario.initial_separation, scenario.epsilon, scenario.nu
    bounds = dict(t_cap_bound=trigger_laws.capture_time_bound(d0, eps, nu))
    if scenario.trigger_mode == 'classical':
        bounds.update(n_max=None, min_interevent=scenario.dt)
    elif scenario.noise.active:
        bounds.update(n_max=trigger_laws.max_samples_beta(d0, eps, scenario.noise.gamma / eps, nu),
                      min_interevent=trigger_laws.min_interevent(eps, nu))
    else:
        bounds.update(n_max=trigger_laws.max_samples(d0, eps, nu),
                      min_interevent=trigger_laws.phi_exact(eps, nu))
    return bounds


class _Pursuit():
    """Mutable state of one run; ``run`` is the only entry point."""

    def __init__(self, scenario):
        self.scenario = scenario
        noise_seq, policy_seq = np.random.SeedSequence(scenario.rng_seed).spawn(2)
        self.noise_rng = np.random.default_rng(noise_seq)
        self.policy_rng = np.random.default_rng(policy_seq)
        self.pursuer = scenario.pursuer_start
        self.evader = scenario.evader_start
        self.step = 0
        self.history = []
        self.max_steps = int(math.floor(scenario.max_time / scenario.dt + PursuitConstants.COUNT_NUDGE))

    def retained(self, frame, d_hat, gamma):
        sc = self.scenario
        entries = EstimateHistory(tuple(HistoryEntry(frame.apply(estimate), error, (self.step - step) * sc.dt)
                                        for estimate, error, step in self.history))
        current = Observation(Vec2(d_hat, 0.0), gamma).disc()
        dropped = forget_set(current, entries, sc.nu, gamma)
        if dropped:
            self.history = [item for j, item in enumerate(self.history, start=1) if j not in dropped]
            entries = entries.without(dropped)
        return entries

    def duration(self, observation, d_hat):
        sc = self.scenario
        gamma = observation.gamma
        if sc.trigger_mode == 'classical':
            return sc.dt, sc.dt, 0, True
        if sc.trigger_mode == 'exact':
            phi = trigger_laws.phi_exact(d_hat, sc.nu)
            return phi, phi, 0, True
        admissible = gamma == 0.0 or gamma < d_hat * trigger_laws.beta_max(sc.nu)
        if not admissible:
            logger.warning("terminal regime at t=%s: gamma=%s not below d_hat*beta_max at d_hat=%s",
                           self.step * sc.dt, gamma, d_hat)
        memoryless = trigger_laws.phi_noisy(d_hat, gamma, sc.nu, check_tolerance=admissible)
        if sc.trigger_mode == 'noisy':
            return memoryless, memoryless, 0, admissible
        frame = canonical_frame(self.pursuer, observation.estimate)
        entries = self.retained(frame, d_hat, gamma)
        try:
            phi = trigger_time(sc.nu, d_hat, gamma, entries, check_tolerance=admissible)
        except (EmptyIntersectionError, SolverError) as error:
            logger.warning("memory solve failed at t=%s, keeping the memoryless duration: %s", self.step * sc.dt, repr(error))
            phi = memoryless
        return phi, memoryless, len(entries), admissible

    def remember(self, observation):
        self.history.insert(0, (observation.estimate, observation.gamma, self.step))
        del self.history[self.scenario.memory:]

    def hold(self, heading, n_steps):
        sc = self.scenario
        if sc.evader_policy == 'random':
            drawn = self.policy_rng.uniform(-math.pi, math.pi, n_steps)
        else:
            drawn = np.zeros(n_steps)
        px, py, ex, ey, taken, captured = _hold_interval(self.pursuer.x, self.pursuer.y, self.evader.x, self.evader.y,
                                                         heading, sc.nu, sc.dt, n_steps, POLICY_CODES[sc.evader_policy],
                                                         drawn, sc.epsilon)
        self.pursuer = Vec2(float(px), float(py))
        self.evader = Vec2(float(ex), float(ey))
        self.step += int(taken)
        return bool(captured)

    def run(self):
        sc = self.scenario
        rows = []
        capture_time = None
        while self.step < self.max_steps:
            t_k = self.step * sc.dt
            observation = sample_evader(self.evader, sc.noise, self.noise_rng, pursuer=self.pursuer, time=t_k)
            d_true = self.pursuer.distance_to(self.evader)
            d_hat = self.pursuer.distance_to(observation.estimate)
            phi, memoryless, kept, admissible = self.duration(observation, d_hat)
            heading = pursuer_control(self.pursuer, observation.estimate)
            if sc.trigger_mode == 'memory':
                self.remember(observation)
            rows.append(EventRecord(len(rows), t_k, d_true, d_hat, phi, memoryless, kept, admissible))
            n_steps = max(1, int(math.floor(phi / sc.dt + PursuitConstants.COUNT_NUDGE)))
            if self.hold(heading, min(n_steps, self.max_steps - self.step)):
                capture_time = self.step * sc.dt
                break
        if capture_time is not None:
            logger.debug("captured at t=%s after %s samples", capture_time, len(rows))
        else:
            logger.debug("no capture within max_time=%s after %s samples", sc.max_time, len(rows))
        log = EventLog(tuple(rows), capture_time, len(rows))
        return replace(log, violations=tuple(check_guarantees(sc, log)))


def run(scenario):
    """Simulate ``scenario`` until capture or max_time; deterministic for a fixed rng_seed."""
    return _Pursuit(scenario).run()


def check_guarantees(scenario, log):
    """Messages for every guarantee of the trigger mode that ``log`` breaks."""
    nu, eps, dt = scenario.nu, scenario.epsilon, scenario.dt
    slack = PursuitConstants.GUARANTEE_DT_SLACK * dt
    rows = log.rows
    d0 = scenario.initial_separation
    violations = []
    noiseless = not scenario.noise.active

    if not log.captured:
        horizon = trigger_laws.capture_time_bound(d0, eps, nu) + slack if noiseless else trigger_laws.finite_capture_bound(d0, nu)
        if scenario.max_time >= horizon:
            violations.append("no capture by max_time {0} although the capture-time bound {1} has passed".format(scenario.max_time, horizon))
    elif noiseless:
        bound = trigger_laws.capture_time_bound(d0, eps, nu)
        if log.capture_time > bound + slack:
            violations.append("capture time {0} exceeds the bound {1}".format(log.capture_time, bound))

    for before, after in zip(rows, rows[1:]):
        if not after.t_k > before.t_k:
            violations.append("event {0} time {1} does not advance".format(after.k, after.t_k))

    if scenario.trigger_mode == 'exact':
        h = trigger_laws.contraction_h(nu)
        for before, after in zip(rows, rows[1:]):
            if not after.d_true < before.d_true:
                violations.append("separation did not decrease at event {0}: {1} -> {2}".format(after.k, before.d_true, after.d_true))
            if after.d_true > h * before.d_true + slack:
                violations.append("separation {0} at event {1} exceeds h(nu)*D = {2}".format(after.d_true, after.k, h * before.d_true))
        n_max = trigger_laws.max_samples(d0, eps, nu)
        if log.samples_used > n_max:
            violations.append("{0} samples exceed the bound {1}".format(log.samples_used, n_max))

    if scenario.trigger_mode in ('noisy', 'memory') and not noiseless:
        gamma = scenario.noise.gamma
        floor = trigger_laws.min_interevent(eps, nu)
        guarded = [row for row in rows if row.admissible and row.d_hat >= eps]
        for row in guarded:
            if row.phi_k < floor - PursuitConstants.COUNT_NUDGE:
                violations.append("duration {0} at event {1} below the inter-event bound {2}".format(row.phi_k, row.k, floor))
        for before, after in zip(rows, rows[1:]):
            if before.admissible and before.d_hat >= eps and after.t_k - before.t_k < floor - dt - PursuitConstants.COUNT_NUDGE:
                violations.append("gap {0} after event {1} below the inter-event bound {2}".format(after.t_k - before.t_k, before.k, floor))
        if scenario.trigger_mode == 'noisy':
            for before, after in zip(rows, rows[1:]):
                if before.admissible and before.d_hat >= eps and not after.d_hat < before.d_hat:
                    violations.append("measured separation did not decrease at event {0}: {1} -> {2}".format(after.k, before.d_hat, after.d_hat))
            if rows and rows[0].d_hat > eps:
                n_max = trigger_laws.max_samples_beta(rows[0].d_hat, eps, gamma / eps, nu)
                if len(guarded) > n_max:
                    violations.append("{0} samples above the capture radius exceed the bound {1}".format(len(guarded), n_max))

    if scenario.trigger_mode == 'memory':
        for row in rows:
            if row.phi_k < row.phi_memoryless - PursuitConstants.COUNT_NUDGE:
                violations.append("memory duration {0} at event {1} below the memoryless {2}".format(row.phi_k, row.k, row.phi_memoryless))

    for message in violations:
        logger.warning("guarantee violated: %s", message)
    return violations


def _point(name, value):
    if value is None or len(value) != 2:
        raise ParameterError("{0} must be a pair [x, y], got {1}".format(name, value))
    return Vec2(float(value[0]), float(value[1]))


def scenario_from_options(options):
    """Scenario from the ``scenario`` option dict of the pursuit modules."""
    for name in ('pursuer_start', 'evader_start', 'nu', 'epsilon'):
        if options.get(name) is None:
            raise ParameterError("mandatory parameter '{0}' is missing".format(name))
    defaults = dict(noise_kind='none', gamma=0.0, evader_policy='pure_flee', trigger_mode='exact',
                    memory=PursuitConstants.DEFAULT_MEMORY, dt=PursuitConstants.DEFAULT_DT, rng_seed=0)
    merged = dict(defaults)
    merged.update({key: value for key, value in options.items() if value is not None})
    return Scenario(pursuer_start=_point('pursuer_start', merged['pursuer_start']),
                    evader_start=_point('evader_start', merged['evader_start']),
                    nu=float(merged['nu']),
                    epsilon=float(merged['epsilon']),
                    noise=NoiseModel(merged['noise_kind'], float(merged['gamma'])),
                    evader_policy=merged['evader_policy'],
                    trigger_mode=merged['trigger_mode'],
                    memory=int(merged['memory']),
                    dt=float(merged['dt']),
                    rng_seed=int(merged['rng_seed']),
                    max_time=merged.get('max_time'))


def _comparison_cells(record):
    if record is None:
        return [None, None, None]
    return [record.d_true, record.phi_k, record.phi_k / record.d_true]


def compare_memory(scenario):
    """
    Paired memoryless and memory-aware runs of ``scenario`` on the same seed.
    Events are paired by index; the run with fewer events leaves its cells
    empty in the trailing rows. Returns the comparison rows and both event logs.
    """
    memoryless = run(replace(scenario, trigger_mode='noisy'))
    memory = run(replace(scenario, trigger_mode='memory'))
    rows = []
    for plain, aware in zip_longest(memoryless.rows, memory.rows):
        k = plain.k if plain is not None else aware.k
        rows.append([k] + _comparison_cells(plain) + _comparison_cells(aware))
    logger.debug("compared %s memoryless and %s memory-aware events", memoryless.samples_used, memory.samples_used)
    return rows, memoryless, memory
