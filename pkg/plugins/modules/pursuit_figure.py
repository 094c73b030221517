#!/usr/bin/python

# Copyright: (c) 2026- pursuit.self_triggered contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function
__metaclass__ = type
ANSIBLE_METADATA = {
    'metadata_version': '1.1',
    'status': ['preview'],
    'supported_by': 'community'
}

DOCUMENTATION = '''
---
module: pursuit_figure
author:
    - pursuit.self_triggered contributors
short_description: Writes the curve data of the self-triggered pursuit figures as CSV.
description:
    - C(fig2) normalized exact-sensing duration, contraction factor and capture-time factor over nu in [0, 0.99].
    - C(fig3) sample-count bound over nu with the capture radius a thousandth of the initial separation.
    - C(fig6) normalized noisy duration over the admissible relative errors for nu in 0.2, 0.4, 0.6, 0.8.
    - C(fig8) noisy sample-count bound over the same grid.
version_added: 1.0.0
requirements:
- Python >= 3
- numpy
- scipy
options:
    figure:
        description:
            - Identifier of the figure whose data is written to C(<figure>.csv).
        required: true
        type: str
        choices: ['fig2', 'fig3', 'fig6', 'fig8']
    output_dir:
        description:
            - Directory receiving the CSV file.
              Defaults to the C(PURSUIT_OUTPUT_DIR) environment variable, then C(pursuit_output).
        type: str
'''

EXAMPLES = '''
- name: Write the sample-count curve
  pursuit_figure:
    figure: fig3
    output_dir: /tmp/pursuit
'''

RETURN = '''
figure_info:
    description: Path, header and row count of the written CSV
    type: dict
    returned: on success
'''

import logging
LOG_FILENAME = "/tmp/ansible_pursuit.log"
logger = logging.getLogger(__name__)
from ansible.module_utils.basic import AnsibleModule
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import Error
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.figure_data import figure_rows
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_output import resolve_output_dir
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_output import write_csv
import os
import sys


def init_logger():
    logging.basicConfig(
        filename=LOG_FILENAME,
        format='[%(asctime)s] %(levelname)s: [%(funcName)s] %(message)s',
        level=logging.DEBUG)


def write_figure(module, params):
    header, rows = figure_rows(params['figure'])
    path = os.path.join(resolve_output_dir(params['output_dir']), '{0}.csv'.format(params['figure']))
    write_csv(path, header, rows)
    return True, {'figure': params['figure'], 'path': path, 'header': header, 'rows': len(rows)}


def perform_task(module):
    try:
        return write_figure(module, module.params) + (PursuitConstants.RC_OK,)
    except Error as error:
        return False, repr(error), PursuitConstants.RC_CONFIG


def run_module():

    module_args = dict(
        figure=dict(type='str', required=True, choices=PursuitConstants.FIGURES),
        output_dir=dict(type='str')
    )

    module = AnsibleModule(
        argument_spec=module_args,
        supports_check_mode=False,
    )

    if module._verbosity >= 5:
        init_logger()

    if sys.version_info < (3, 0):
        py_ver = sys.version_info[0]
        module.fail_json(msg="Unsupported Python version {0}, supported python version is 3 and above".format(py_ver))

    changed, result, rc = perform_task(module)

    if isinstance(result, str):
        module.fail_json(msg=result, rc=rc)

    module.exit_json(changed=changed, rc=rc, figure_info=result)


def main():
    run_module()


if __name__ == '__main__':
    main()
