from __future__ import absolute_import, division, print_function
__metaclass__ = type

import json
import pytest
import importlib

IMPORT_PURSUIT_TABLE1 = "ansible_collections.pursuit.self_triggered.plugins.modules.pursuit_table1"

from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import InvariantViolation
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError
from ansible_collections.pursuit.self_triggered.plugins.module_utils.simulator import EventLog


def scenario_options(**given):
    options = {'pursuer_start': [0.0, 0.0], 'evader_start': [15.0, 0.0], 'nu': 0.5, 'epsilon': 0.75,
               'noise_kind': 'uniform_disc', 'gamma': 0.1, 'evader_policy': 'four_direction', 'trigger_mode': None,
               'memory': 1, 'dt': 0.001, 'rng_seed': 0, 'max_time': None}
    options.update(given)
    return options


ROWS = [[0, 15.0, 9.49, 0.633, 15.0, 9.49, 0.633]]


def common_mock_setup(mocker, params):
    pursuit_table1 = importlib.import_module(IMPORT_PURSUIT_TABLE1)
    module = mocker.Mock()
    module.params = params
    return pursuit_table1, module


def test_compare_forces_memory_mode(mocker, tmp_path):
    params = {'scenario': scenario_options(trigger_mode='exact'), 'output_dir': str(tmp_path)}
    pursuit_table1, module = common_mock_setup(mocker, params)
    compare_memory = mocker.patch.object(pursuit_table1, 'compare_memory',
                                         return_value=(ROWS, EventLog((), 20.1, 11), EventLog((), 19.4, 10)))
    changed, table1_info = pursuit_table1.compare(module, params)
    assert changed
    assert compare_memory.call_args[0][0].trigger_mode == 'memory'
    summary = json.loads((tmp_path / 'table1_summary.json').read_text())
    assert summary == {'memoryless': {'capture_time': 20.1, 'samples_used': 11},
                       'memory': {'capture_time': 19.4, 'samples_used': 10}, 'violations': []}
    lines = (tmp_path / 'table1.csv').read_text().splitlines()
    assert lines[0] == 'k,D_k,phi_k,phi_k_over_D_k,D_bar_k,phi_hat_k,phi_hat_k_over_D_bar_k'
    assert len(lines) == 2


def test_compare_reports_violations(mocker, tmp_path):
    params = {'scenario': scenario_options(), 'output_dir': str(tmp_path)}
    pursuit_table1, module = common_mock_setup(mocker, params)
    memory = EventLog((), 19.4, 10, violations=("memory duration 1.0 at event 3 below the memoryless 1.1",))
    mocker.patch.object(pursuit_table1, 'compare_memory', return_value=(ROWS, EventLog((), 20.1, 11), memory))
    with pytest.raises(InvariantViolation) as e:
        pursuit_table1.compare(module, params)
    assert repr(e.value) == ("InvariantViolation: 1 guarantee violation(s), first: "
                             "memory: memory duration 1.0 at event 3 below the memoryless 1.1")
    assert (tmp_path / 'table1.csv').exists()


def test_perform_task_intolerable_noise(mocker, tmp_path):
    params = {'scenario': scenario_options(gamma=0.2), 'output_dir': str(tmp_path)}
    pursuit_table1, module = common_mock_setup(mocker, params)
    changed, result, rc = pursuit_table1.perform_task(module)
    assert not changed
    assert result.startswith("ParameterError: capture radius 0.75 must exceed gamma/beta_max(nu)")
    assert rc == 2


def test_compare_missing_capture_radius(mocker, tmp_path):
    params = {'scenario': scenario_options(epsilon=None), 'output_dir': str(tmp_path)}
    pursuit_table1, module = common_mock_setup(mocker, params)
    with pytest.raises(ParameterError) as e:
        pursuit_table1.compare(module, params)
    assert "ParameterError: mandatory parameter 'epsilon' is missing" == repr(e.value)


def test_perform_task_negative_seed(mocker, tmp_path):
    params = {'scenario': scenario_options(rng_seed=-1), 'output_dir': str(tmp_path)}
    pursuit_table1, module = common_mock_setup(mocker, params)
    assert pursuit_table1.perform_task(module) == (False, "ParameterError: rng_seed must be a nonnegative integer, got -1", 2)
