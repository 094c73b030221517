#!/usr/bin/python
#
#    Curve data behind the published figures and the law evaluator used by
#    the pursuit_law and pursuit_figure modules.
#
##

from __future__ import absolute_import, division, print_function
__metaclass__ = type

import logging

import numpy as np

from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.reachability_optimizer import delta_phi_star
from ansible_collections.pursuit.self_triggered.plugins.module_utils import trigger_laws
logger = logging.getLogger(__name__)

# quantity -> (law, ordered parameter names)
LAWS = {
    'phi': (trigger_laws.phi_exact, ('d', 'nu')),
    'phi_noisy': (trigger_laws.phi_noisy, ('d', 'gamma', 'nu')),
    'phi_beta': (trigger_laws.phi_beta, ('d', 'beta', 'nu')),
    'h': (trigger_laws.contraction_h, ('nu',)),
    'h_beta': (trigger_laws.contraction_h_beta, ('beta', 'nu')),
    'n_max': (trigger_laws.max_samples, ('d', 'epsilon', 'nu')),
    'n_max_beta': (trigger_laws.max_samples_beta, ('d', 'epsilon', 'beta', 'nu')),
    'beta_max': (trigger_laws.beta_max, ('nu',)),
    't_cap_bound': (trigger_laws.capture_time_bound, ('d', 'epsilon', 'nu')),
    'q': (trigger_laws.q_factor, ('nu',)),
    'delta_phi_star': (delta_phi_star, ('nu', 'gamma')),
}


def _law(quantity):
    if quantity not in LAWS:
        raise ParameterError("unsupported quantity: {0}".format(quantity))
    return LAWS[quantity]


def law_value(quantity, params):
    law, names = _law(quantity)
    for key in params:
        if key not in names:
            raise ParameterError("unsupported parameter: {0}".format(key))
    for name in names:
        if params.get(name) is None:
            raise ParameterError("mandatory parameter '{0}' is missing".format(name))
    return law(*[params[name] for name in names])


def parse_sweep(sweep):
    """Split ``param=a:b:n`` into the parameter name and its grid."""
    try:
        name, span = sweep.split('=', 1)
        start, stop, count = span.split(':')
        start, stop, count = float(start), float(stop), int(count)
    except ValueError:
        raise ParameterError("sweep must read param=a:b:n, got {0}".format(sweep))
    if count < 1:
        raise ParameterError("sweep needs at least one point, got {0}".format(count))
    return name.strip(), np.linspace(start, stop, count)


def law_sweep(quantity, params, sweep):
    _law(quantity)
    name, grid = parse_sweep(sweep)
    if name not in LAWS[quantity][1]:
        raise ParameterError("sweep parameter '{0}' is not an input of {1}".format(name, quantity))
    rows = []
    for value in grid:
        point = dict(params)
        point[name] = float(value)
        rows.append([float(value), law_value(quantity, point)])
    logger.debug("swept %s over %s points of %s", quantity, len(rows), name)
    return [name, quantity], rows


def _beta_grid(nu):
    return np.linspace(0.0, trigger_laws.beta_max(nu), PursuitConstants.FIGURE_BETA_POINTS, endpoint=False)


def fig2_rows():
    rows = []
    for nu in np.round(np.linspace(0.0, 0.99, 100), 10):
        nu = float(nu)
        rows.append([nu, trigger_laws.normalized_phi(nu), trigger_laws.contraction_h(nu), 1.0 / (1.0 - nu)])
    return rows


def fig3_rows():
    epsilon = PursuitConstants.FIGURE_EPSILON_RATIO
    return [[float(nu), trigger_laws.max_samples(1.0, epsilon, float(nu))]
            for nu in np.round(np.linspace(0.0, 0.99, 100), 10)]


def fig6_rows():
    return [[nu, float(beta), trigger_laws.phi_beta(1.0, float(beta), nu)]
            for nu in PursuitConstants.FIGURE_NU_SET for beta in _beta_grid(nu)]


def fig8_rows():
    epsilon = PursuitConstants.FIGURE_EPSILON_RATIO
    return [[nu, float(beta), trigger_laws.max_samples_beta(1.0, epsilon, float(beta), nu)]
            for nu in PursuitConstants.FIGURE_NU_SET for beta in _beta_grid(nu)]


FIGURE_BUILDERS = {
    'fig2': fig2_rows,
    'fig3': fig3_rows,
    'fig6': fig6_rows,
    'fig8': fig8_rows,
}


def figure_rows(figure_id):
    if figure_id not in FIGURE_BUILDERS:
        raise ParameterError("unsupported figure: {0}".format(figure_id))
    rows = FIGURE_BUILDERS[figure_id]()
    logger.debug("built %s rows for %s", len(rows), figure_id)
    return PursuitConstants.FIGURE_HEADERS[figure_id], rows
