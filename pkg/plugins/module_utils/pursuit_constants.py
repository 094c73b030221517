from __future__ import absolute_import, division, print_function
__metaclass__ = type


class PursuitConstants():
    # absolute tolerance for geometric predicates, length units
    GEOM_TOL = 1e-12
    # downward nudge applied before every ceiling
    COUNT_NUDGE = 1e-9

    ARC_SEEDS = 64
    GOLDEN_XTOL = 1e-10
    MIN_ARC = 1e-10
    TANGENT_TOL = 1e-9
    BISECT_RTOL = 1e-9
    BISECT_XTOL = 1e-14
    BRACKET_GROWTH = 1.5

    DEFAULT_DT = 1e-3
    DEFAULT_MEMORY = 1
    GUARANTEE_DT_SLACK = 2

    TRIGGER_MODES = ['exact', 'noisy', 'memory', 'classical']
    NOISE_KINDS = ['none', 'uniform_disc', 'worst_case_boundary', 'line_of_sight']
    EVADER_POLICIES = ['static', 'pure_flee', 'four_direction', 'random']
    FIGURES = ['fig2', 'fig3', 'fig6', 'fig8']
    FIGURE_NU_SET = [0.2, 0.4, 0.6, 0.8]
    FIGURE_EPSILON_RATIO = 1e-3
    FIGURE_BETA_POINTS = 50

    LAW_QUANTITIES = ['phi', 'phi_noisy', 'phi_beta', 'h', 'h_beta', 'n_max', 'n_max_beta',
                      'beta_max', 't_cap_bound', 'q', 'delta_phi_star']

    TRACE_HEADER = ['k', 't_k', 'D_true', 'D_hat', 'phi_k']
    TABLE1_HEADER = ['k', 'D_k', 'phi_k', 'phi_k_over_D_k', 'D_bar_k', 'phi_hat_k', 'phi_hat_k_over_D_bar_k']
    FIGURE_HEADERS = {
        'fig2': ['nu', 'phi_over_d', 'h', 't_cap_factor'],
        'fig3': ['nu', 'n_max'],
        'fig6': ['nu', 'beta', 'phi_beta_over_d_hat'],
        'fig8': ['nu', 'beta', 'n_max_beta'],
    }

    OUTPUT_DIR_ENV = 'PURSUIT_OUTPUT_DIR'
    DEFAULT_OUTPUT_DIR = 'pursuit_output'

    RC_OK = 0
    RC_VIOLATION = 1
    RC_CONFIG = 2
