from __future__ import absolute_import, division, print_function
__metaclass__ = type

import pytest
import importlib

IMPORT_PURSUIT_FIGURE = "ansible_collections.pursuit.self_triggered.plugins.modules.pursuit_figure"

from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import Error
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import ParameterError


def common_mock_setup(mocker, params):
    pursuit_figure = importlib.import_module(IMPORT_PURSUIT_FIGURE)
    module = mocker.Mock()
    module.params = params
    return pursuit_figure, module


@pytest.mark.parametrize("figure, rows", [('fig2', 100), ('fig3', 100), ('fig6', 200), ('fig8', 200)])
def test_call_inside_write_figure(mocker, tmp_path, figure, rows):
    params = {'figure': figure, 'output_dir': str(tmp_path)}
    pursuit_figure, module = common_mock_setup(mocker, params)
    changed, figure_info = pursuit_figure.write_figure(module, params)
    assert changed
    assert figure_info['rows'] == rows
    assert figure_info['path'] == str(tmp_path / '{0}.csv'.format(figure))
    lines = (tmp_path / '{0}.csv'.format(figure)).read_text().splitlines()
    assert lines[0] == ','.join(figure_info['header'])
    assert len(lines) == rows + 1


def test_unsupported_figure(mocker, tmp_path):
    params = {'figure': 'fig9', 'output_dir': str(tmp_path)}
    pursuit_figure, module = common_mock_setup(mocker, params)
    with pytest.raises(ParameterError) as e:
        pursuit_figure.write_figure(module, params)
    assert "ParameterError: unsupported figure: fig9" == repr(e.value)


def test_perform_task_unwritable_output(mocker):
    params = {'figure': 'fig2', 'output_dir': '/nowhere'}
    pursuit_figure, module = common_mock_setup(mocker, params)
    mocker.patch.object(pursuit_figure, 'resolve_output_dir', side_effect=Error("output directory /nowhere is not writable"))
    assert pursuit_figure.perform_task(module) == (False, "Error: output directory /nowhere is not writable", 2)
