from __future__ import absolute_import, division, print_function
__metaclass__ = type

import pytest
import importlib

IMPORT_PURSUIT_LAW = "ansible_collections.pursuit.self_triggered.plugins.modules.pursuit_law"

from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError

no_params = {'d': None, 'nu': None, 'gamma': None, 'beta': None, 'epsilon': None}


def law_params(**given):
    params = dict(no_params)
    params.update(given)
    return params


test_data = [
    # value of a law
    ({'quantity': 'phi', 'params': law_params(d=10.0, nu=0.5), 'sweep': None, 'output_dir': None}, None),
    # speed ratio outside [0, 1)
    ({'quantity': 'h', 'params': law_params(nu=1.5), 'sweep': None, 'output_dir': None},
     "ParameterError: speed ratio nu must lie in [0, 1), got 1.5"),
    # mandatory parameter nu is not mentioned
    ({'quantity': 'beta_max', 'params': law_params(), 'sweep': None, 'output_dir': None},
     "ParameterError: mandatory parameter 'nu' is missing"),
    # parameter the law does not take
    ({'quantity': 'h', 'params': law_params(nu=0.5, gamma=0.1), 'sweep': None, 'output_dir': None},
     "ParameterError: unsupported parameter: gamma")]

sweep_data = [
    # sweep over a parameter the law does not take
    ({'quantity': 'h', 'params': law_params(), 'sweep': 'd=1:2:3', 'output_dir': None},
     "ParameterError: sweep parameter 'd' is not an input of h"),
    # malformed sweep
    ({'quantity': 'h', 'params': law_params(), 'sweep': 'nu', 'output_dir': None},
     "ParameterError: sweep must read param=a:b:n, got nu")]


def common_mock_setup(mocker, params):
    pursuit_law = importlib.import_module(IMPORT_PURSUIT_LAW)
    module = mocker.Mock()
    module.params = params
    return pursuit_law, module


@pytest.mark.parametrize("law_test_input, expectedError", test_data)
def test_call_inside_evaluate(mocker, law_test_input, expectedError):
    pursuit_law, module = common_mock_setup(mocker, law_test_input)
    if expectedError:
        with pytest.raises(ParameterError) as e:
            pursuit_law.evaluate(module, law_test_input)
        assert expectedError == repr(e.value)
    else:
        changed, law_info = pursuit_law.evaluate(module, law_test_input)
        assert not changed
        assert law_info['value'] == pytest.approx(6.339746, abs=1e-6)
        assert float(law_info['text']) == law_info['value']


@pytest.mark.parametrize("law_test_input, expectedError", sweep_data)
def test_call_inside_sweep(mocker, law_test_input, expectedError):
    pursuit_law, module = common_mock_setup(mocker, law_test_input)
    with pytest.raises(ParameterError) as e:
        pursuit_law.sweep(module, law_test_input)
    assert expectedError == repr(e.value)


def test_sweep_without_output_dir_writes_nothing(mocker, monkeypatch):
    monkeypatch.delenv('PURSUIT_OUTPUT_DIR', raising=False)
    params = {'quantity': 'n_max', 'params': law_params(d=15.0, epsilon=0.75), 'sweep': 'nu=0.5:0.5:1', 'output_dir': None}
    pursuit_law, module = common_mock_setup(mocker, params)
    writer = mocker.patch.object(pursuit_law, 'write_csv')
    changed, law_info = pursuit_law.sweep(module, params)
    assert not changed
    assert law_info['rows'] == [[0.5, 8]]
    writer.assert_not_called()


def test_sweep_writes_csv(mocker, tmp_path):
    params = {'quantity': 'h', 'params': law_params(), 'sweep': 'nu=0:0.5:2', 'output_dir': str(tmp_path)}
    pursuit_law, module = common_mock_setup(mocker, params)
    changed, law_info = pursuit_law.sweep(module, params)
    assert changed
    assert law_info['path'] == str(tmp_path / 'h_sweep.csv')
    assert (tmp_path / 'h_sweep.csv').read_text().splitlines()[0] == 'nu,h'


@pytest.mark.parametrize("law_test_input, expectedError", test_data[1:])
def test_perform_task_returns_config_rc(mocker, law_test_input, expectedError):
    pursuit_law, module = common_mock_setup(mocker, law_test_input)
    changed, result, rc = pursuit_law.perform_task(module)
    assert not changed
    assert result == expectedError
    assert rc == 2


def test_perform_task_picks_sweep(mocker):
    params = {'quantity': 'h', 'params': law_params(), 'sweep': 'nu=0:0.5:2', 'output_dir': None}
    pursuit_law, module = common_mock_setup(mocker, params)
    sweep = mocker.patch.object(pursuit_law, 'sweep', return_value=(False, {}))
    evaluate = mocker.patch.object(pursuit_law, 'evaluate')
    assert pursuit_law.perform_task(module) == (False, {}, 0)
    sweep.assert_called_once_with(module, params)
    evaluate.assert_not_called()
