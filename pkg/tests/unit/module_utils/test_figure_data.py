from __future__ import absolute_import, division, print_function
__metaclass__ = type

import pytest

from ansible_collections.pursuit.self_triggered.plugins.module_utils import figure_data
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError

law_data = [
    ('phi', {'d': 10.0, 'nu': 0.5}, 6.339746),
    ('h', {'nu': 0.5}, 0.683013),
    ('beta_max', {'nu': 0.5}, 0.133975),
    ('h_beta', {'beta': 0.1, 'nu': 0.5}, 0.9106836),
    ('phi_noisy', {'d': 15.1, 'gamma': 0.1, 'nu': 0.5}, 9.499811),
    ('t_cap_bound', {'d': 15.0, 'epsilon': 0.75, 'nu': 0.5}, 28.5),
    ('n_max', {'d': 15.0, 'epsilon': 0.75, 'nu': 0.5}, 8),
    ('n_max_beta', {'d': 1.0, 'epsilon': 1e-3, 'beta': 0.1, 'nu': 0.5}, 74),
    ('delta_phi_star', {'nu': 0.5, 'gamma': 0.1}, 0.146410)]

law_error_data = [
    # unknown law
    ('phi_fast', {'nu': 0.5}, "ParameterError: unsupported quantity: phi_fast"),
    # parameter the law does not take
    ('h', {'nu': 0.5, 'd': 1.0}, "ParameterError: unsupported parameter: d"),
    # separation left out
    ('phi', {'nu': 0.5}, "ParameterError: mandatory parameter 'd' is missing"),
    ('phi', {'d': 10.0, 'nu': None}, "ParameterError: mandatory parameter 'nu' is missing")]

sweep_error_data = [
    ('nu:0:1:5', "ParameterError: sweep must read param=a:b:n, got nu:0:1:5"),
    ('nu=0:1', "ParameterError: sweep must read param=a:b:n, got nu=0:1"),
    ('nu=0:1:x', "ParameterError: sweep must read param=a:b:n, got nu=0:1:x"),
    ('nu=0:1:0', "ParameterError: sweep needs at least one point, got 0")]


@pytest.mark.parametrize("quantity, params, expected", law_data)
def test_law_value(quantity, params, expected):
    assert figure_data.law_value(quantity, params) == pytest.approx(expected, abs=2e-6)


@pytest.mark.parametrize("quantity, params, expectedError", law_error_data)
def test_law_value_errors(quantity, params, expectedError):
    with pytest.raises(ParameterError) as e:
        figure_data.law_value(quantity, params)
    assert expectedError == repr(e.value)


def test_every_quantity_has_a_law():
    assert sorted(figure_data.LAWS) == sorted(PursuitConstants.LAW_QUANTITIES)


@pytest.mark.parametrize("sweep, expectedError", sweep_error_data)
def test_parse_sweep_errors(sweep, expectedError):
    with pytest.raises(ParameterError) as e:
        figure_data.parse_sweep(sweep)
    assert expectedError == repr(e.value)


def test_law_sweep():
    header, rows = figure_data.law_sweep('h', {}, 'nu=0:0.5:3')
    assert header == ['nu', 'h']
    assert [row[0] for row in rows] == [0.0, 0.25, 0.5]
    assert rows[0][1] == pytest.approx(0.0)
    assert rows[2][1] == pytest.approx(0.683013, abs=1e-6)


def test_law_sweep_overrides_fixed_value():
    _, rows = figure_data.law_sweep('phi', {'d': 10.0, 'nu': 0.9}, 'nu=0.5:0.5:1')
    assert rows[0][1] == pytest.approx(6.339746, abs=1e-6)


def test_law_sweep_rejects_foreign_parameter():
    with pytest.raises(ParameterError) as e:
        figure_data.law_sweep('h', {}, 'd=1:2:3')
    assert "ParameterError: sweep parameter 'd' is not an input of h" == repr(e.value)


def test_fig2():
    header, rows = figure_data.figure_rows('fig2')
    assert header == ['nu', 'phi_over_d', 'h', 't_cap_factor']
    assert len(rows) == 100
    assert rows[50][0] == 0.5
    assert rows[50][1] == pytest.approx(0.633975, abs=1e-6)
    assert rows[50][2] == pytest.approx(0.683013, abs=1e-6)
    assert rows[50][3] == pytest.approx(2.0)
    # normalized duration falls and the contraction factor rises with nu
    assert all(b[1] < a[1] for a, b in zip(rows, rows[1:]))
    assert all(b[2] > a[2] for a, b in zip(rows, rows[1:]))


def test_fig3():
    _, rows = figure_data.figure_rows('fig3')
    assert rows[50] == [0.5, 19]
    assert rows[0][1] == 1
    assert all(b[1] >= a[1] for a, b in zip(rows, rows[1:]))


@pytest.mark.parametrize("figure_id", ['fig6', 'fig8'])
def test_beta_figures(figure_id):
    header, rows = figure_data.figure_rows(figure_id)
    assert header[:2] == ['nu', 'beta']
    assert len(rows) == len(PursuitConstants.FIGURE_NU_SET) * PursuitConstants.FIGURE_BETA_POINTS
    for nu in PursuitConstants.FIGURE_NU_SET:
        curve = [row for row in rows if row[0] == nu]
        assert curve[0][1] == 0.0
        # durations shrink and sample counts grow with the relative error
        if figure_id == 'fig6':
            assert all(b[2] < a[2] for a, b in zip(curve, curve[1:]))
        else:
            assert all(b[2] >= a[2] for a, b in zip(curve, curve[1:]))


def test_fig8_zero_error_matches_exact_count():
    _, rows = figure_data.figure_rows('fig8')
    first = [row for row in rows if row[0] == 0.6][0]
    assert first[2] == figure_data.law_value('n_max', {'d': 1.0, 'epsilon': 1e-3, 'nu': 0.6})


def test_unsupported_figure():
    with pytest.raises(ParameterError) as e:
        figure_data.figure_rows('fig5')
    assert "ParameterError: unsupported figure: fig5" == repr(e.value)
