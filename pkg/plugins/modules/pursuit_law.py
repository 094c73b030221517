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
module: pursuit_law
author:
    - pursuit.self_triggered contributors
short_description: Evaluates the closed-form self-triggered pursuit laws.
notes:
    - Runs on the controller, no remote host is contacted.
description:
    - Evaluates one sleep-duration, contraction, sample-count or tolerance law at full precision.
    - With I(sweep) evaluates the law over a linear grid of one input and returns the column pair,
      optionally written as CSV into I(output_dir).
version_added: 1.0.0
requirements:
- Python >= 3
- numpy
- scipy
options:
    quantity:
        description:
            - The law to evaluate.
            - C(phi) exact-sensing duration for separation I(d).
            - C(phi_noisy) duration with error radius I(gamma).
            - C(phi_beta) duration with relative error I(beta).
            - C(h) and C(h_beta) per-event contraction factors.
            - C(n_max) and C(n_max_beta) sample-count bounds from separation I(d) to capture radius I(epsilon).
            - C(beta_max) largest tolerable relative error.
            - C(t_cap_bound) capture-time bound.
            - C(q) inter-event lower bound per unit capture radius.
            - C(delta_phi_star) largest duration gain from one retained estimate.
        required: true
        type: str
        choices: ['phi', 'phi_noisy', 'phi_beta', 'h', 'h_beta', 'n_max', 'n_max_beta',
                  'beta_max', 't_cap_bound', 'q', 'delta_phi_star']
    params:
        description:
            - Inputs of the law. Only the inputs the law takes may be given.
        required: true
        type: dict
        suboptions:
            d:
                description:
                    - Measured or initial separation.
                type: float
            nu:
                description:
                    - Evader to pursuer speed ratio in [0, 1).
                type: float
            gamma:
                description:
                    - Absolute error radius of the evader estimate.
                type: float
            beta:
                description:
                    - Relative error, gamma divided by the measured separation.
                type: float
            epsilon:
                description:
                    - Capture radius.
                type: float
    sweep:
        description:
            - Grid C(param=a:b:n) over which the law is evaluated.
        type: str
    output_dir:
        description:
            - Directory receiving C(<quantity>_sweep.csv) for a sweep.
              Defaults to the C(PURSUIT_OUTPUT_DIR) environment variable when set.
        type: str
'''

EXAMPLES = '''
- name: Exact-sensing sleep duration at separation 10
  pursuit_law:
    quantity: phi
    params:
      d: 10
      nu: 0.5

- name: Largest duration gain from one retained estimate
  pursuit_law:
    quantity: delta_phi_star
    params:
      nu: 0.5
      gamma: 0.1

- name: Sample-count bound swept over the speed ratio
  pursuit_law:
    quantity: n_max
    params:
      d: 15
      epsilon: 0.75
    sweep: nu=0.1:0.9:9
    output_dir: /tmp/pursuit
'''

RETURN = '''
law_info:
    description: The evaluated value, or the swept header and rows
    type: dict
    returned: always
'''

import logging
LOG_FILENAME = "/tmp/ansible_pursuit.log"
logger = logging.getLogger(__name__)
from ansible.module_utils.basic import AnsibleModule
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import Error
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.figure_data import law_value
from ansible_collections.pursuit.self_triggered.plugins.module_utils.figure_data import law_sweep
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_output import format_value
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_output import resolve_output_dir
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_output import write_csv
import os
import sys


def init_logger():
    logging.basicConfig(
        filename=LOG_FILENAME,
        format='[%(asctime)s] %(levelname)s: [%(funcName)s] %(message)s',
        level=logging.DEBUG)


def given_params(params):
    return {k: v for k, v in params['params'].items() if v is not None}


def evaluate(module, params):
    value = law_value(params['quantity'], given_params(params))
    logger.debug("%s = %s", params['quantity'], value)
    return False, {'quantity': params['quantity'], 'value': value, 'text': format_value(value)}


def sweep(module, params):
    quantity = params['quantity']
    header, rows = law_sweep(quantity, given_params(params), params['sweep'])
    law_info = {'quantity': quantity, 'header': header, 'rows': rows}
    changed = False
    if params['output_dir'] or os.environ.get(PursuitConstants.OUTPUT_DIR_ENV):
        path = os.path.join(resolve_output_dir(params['output_dir']), '{0}_sweep.csv'.format(quantity))
        law_info['path'] = write_csv(path, header, rows)
        changed = True
    return changed, law_info


def perform_task(module):

    params = module.params
    actions = {
        "value": evaluate,
        "sweep": sweep
    }

    try:
        return actions['sweep' if params['sweep'] else 'value'](module, params) + (PursuitConstants.RC_OK,)
    except Error as error:
        return False, repr(error), PursuitConstants.RC_CONFIG


def run_module():

    # define available arguments/parameters a user can pass to the module
    module_args = dict(
        quantity=dict(type='str', required=True,
                      choices=PursuitConstants.LAW_QUANTITIES),
        params=dict(type='dict',
                    required=True,
                    options=dict(
                        d=dict(type='float'),
                        nu=dict(type='float'),
                        gamma=dict(type='float'),
                        beta=dict(type='float'),
                        epsilon=dict(type='float'),
                    )
                    ),
        sweep=dict(type='str'),
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

    module.exit_json(changed=changed, rc=rc, law_info=result)


def main():
    run_module()


if __name__ == '__main__':
    main()
