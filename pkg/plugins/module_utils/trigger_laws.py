#!/usr/bin/python
#
#    Closed-form self-triggered sleep durations, contraction factors and
#    sample / capture-time bounds for exact and noisy sensing.
#
##

from __future__ import absolute_import, division, print_function
__metaclass__ = type

import math
import logging
from dataclasses import dataclass

from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError
logger = logging.getLogger(__name__)


# The published forms share the denominator 2*nu^2 - 1 = (nu - s)(nu + s) with
# s = sqrt(1 - nu^2); every numerator carries the same (nu - s) factor, so the
# laws below are evaluated in their factored form, which is continuous through
# nu = 1/sqrt(2) and agrees with the d/2 limit there. beta_max factors the
# same way through 5*nu - 3.


@dataclass(frozen=True)
class LawOutputs:
    phi: float
    h: float
    d_max: float


def check_nu(nu):
    if not 0.0 <= nu < 1.0:
        raise ParameterError("speed ratio nu must lie in [0, 1), got {0}".format(nu))


def _positive(name, value):
    if not value > 0.0:
        raise ParameterError("{0} must be positive, got {1}".format(name, value))


def _capture_domain(d0, epsilon):
    _positive('epsilon', epsilon)
    if not epsilon < d0:
        raise ParameterError("capture radius epsilon {0} must be smaller than the separation {1}".format(epsilon, d0))


def _lateral(nu):
    return math.sqrt(1.0 - nu * nu)


def _ceil_count(value):
    return max(1, int(math.ceil(value - PursuitConstants.COUNT_NUDGE)))


def normalized_phi(nu):
    """Sleep duration per unit separation, f(nu) = phi_exact(1, nu)."""
    check_nu(nu)
    s = _lateral(nu)
    return s / (nu + s)


def phi_exact(d, nu):
    _positive('separation d', d)
    return d * normalized_phi(nu)


def contraction_h(nu):
    return 1.0 - (1.0 - nu) * normalized_phi(nu)


def max_samples(d0, epsilon, nu):
    _capture_domain(d0, epsilon)
    h = contraction_h(nu)
    if h <= 0.0:
        return 1
    return _ceil_count(math.log(epsilon / d0) / math.log(h))


def capture_time_bound(d0, epsilon, nu):
    _capture_domain(d0, epsilon)
    check_nu(nu)
    return (d0 - epsilon) / (1.0 - nu)


def finite_capture_bound(d0, nu):
    """Capture-radius-free bound d0/(1 - nu) on the time-to-capture."""
    _positive('separation d0', d0)
    check_nu(nu)
    return d0 / (1.0 - nu)


def beta_max(nu):
    check_nu(nu)
    s = _lateral(nu)
    return (1.0 - nu) ** 2 / (s + 2.0 * (1.0 - nu))


def max_allowable_error(epsilon, nu):
    _positive('epsilon', epsilon)
    return epsilon * beta_max(nu)


def phi_noisy(d_hat, gamma, nu, check_tolerance=True):
    """
    Sleep duration when the evader is only known to lie within gamma of its
    estimate.

    With check_tolerance the error must satisfy gamma < d_hat*beta_max(nu),
    the bound under which the measured separation strictly contracts. Without
    it only positivity of the duration, gamma < d_hat*sqrt(1 - nu^2), is
    enforced.
    """
    _positive('measured separation d_hat', d_hat)
    check_nu(nu)
    if not gamma >= 0.0:
        raise ParameterError("error radius gamma must be nonnegative, got {0}".format(gamma))
    s = _lateral(nu)
    if check_tolerance:
        bound = d_hat * beta_max(nu)
        if gamma > 0.0 and not gamma < bound:
            raise ParameterError("gamma {0} violates the tolerable-error bound gamma < d_hat*beta_max(nu) = {1}".format(gamma, bound))
    elif not gamma < d_hat * s:
        raise ParameterError("gamma {0} leaves no positive sleep, requires gamma < d_hat*sqrt(1-nu^2) = {1}".format(gamma, d_hat * s))
    return (d_hat * s - gamma) / (nu + s)


def _check_beta(beta, nu):
    bound = beta_max(nu)
    if not 0.0 <= beta < bound:
        raise ParameterError("relative error beta {0} outside [0, beta_max(nu)) = [0, {1})".format(beta, bound))


def phi_beta(d_hat, beta, nu):
    _check_beta(beta, nu)
    return phi_noisy(d_hat, beta * d_hat, nu, check_tolerance=False)


def contraction_h_beta(beta, nu):
    phi_bar = phi_beta(1.0, beta, nu)
    return (1.0 - (1.0 - nu) * phi_bar + beta) / (1.0 - beta)


def max_samples_beta(d0_hat, epsilon, beta, nu):
    _capture_domain(d0_hat, epsilon)
    h = contraction_h_beta(beta, nu)
    if h <= 0.0:
        return 1
    return _ceil_count(math.log(epsilon / d0_hat) / math.log(h))


def q_factor(nu):
    """Inter-event lower bound per unit capture radius."""
    check_nu(nu)
    s = _lateral(nu)
    return (s - beta_max(nu)) / (nu + s)


def min_interevent(epsilon, nu):
    _positive('epsilon', epsilon)
    return epsilon * q_factor(nu)


def d_max_after_sleep(d_hat, phi, gamma_k, gamma_k1, nu):
    _positive('separation d_hat', d_hat)
    check_nu(nu)
    for name, value in (('phi', phi), ('gamma_k', gamma_k), ('gamma_k1', gamma_k1)):
        if not value >= 0.0:
            raise ParameterError("{0} must be nonnegative, got {1}".format(name, value))
    return d_hat + nu * phi + gamma_k + gamma_k1 - phi


def law_outputs(params, gamma_next=0.0):
    """Duration, contraction factor and worst-case next separation for one event."""
    if params.gamma > 0.0:
        phi = phi_noisy(params.d_hat, params.gamma, params.nu)
        h = contraction_h_beta(params.gamma / params.d_hat, params.nu)
    else:
        phi = phi_exact(params.d_hat, params.nu)
        h = contraction_h(params.nu)
    d_max = d_max_after_sleep(params.d_hat, phi, params.gamma, gamma_next, params.nu)
    logger.debug("law outputs nu=%s d_hat=%s gamma=%s: phi=%s h=%s d_max=%s",
                 params.nu, params.d_hat, params.gamma, phi, h, d_max)
    return LawOutputs(phi=phi, h=h, d_max=d_max)
