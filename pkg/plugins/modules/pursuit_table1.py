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
module: pursuit_table1
author:
    - pursuit.self_triggered contributors
short_description: Compares memoryless and memory-aware self-triggered pursuit on one noise stream.
description:
    - Runs the scenario twice on the same seed, once with the memoryless noisy duration and once with
      the memory-aware duration, and writes the per-event comparison C(table1.csv) with the columns
      k, D_k, phi_k, phi_k/D_k, D_bar_k, phi_hat_k, phi_hat_k/D_bar_k, where D is the true separation.
    - C(table1_summary.json) carries the capture times, sample counts and guarantee violations of both runs.
    - I(scenario.trigger_mode) is ignored.
version_added: 1.0.0
requirements:
- Python >= 3
- numpy
- scipy
- numba
options:
    scenario:
        description:
            - The pursuit to compare, see M(pursuit.self_triggered.pursuit_simulate) for the suboptions.
        required: true
        type: dict
        suboptions:
            pursuer_start:
                description:
                    - Initial pursuer position C([x, y]).
                required: true
                type: list
                elements: float
            evader_start:
                description:
                    - Initial evader position C([x, y]).
                required: true
                type: list
                elements: float
            nu:
                description:
                    - Evader to pursuer speed ratio in [0, 1).
                required: true
                type: float
            epsilon:
                description:
                    - Capture radius.
                required: true
                type: float
            noise_kind:
                description:
                    - Measurement noise model.
                type: str
                default: uniform_disc
                choices: ['none', 'uniform_disc', 'worst_case_boundary', 'line_of_sight']
            gamma:
                description:
                    - Error radius of every measurement.
                type: float
                default: 0.0
            evader_policy:
                description:
                    - Motion of the evader.
                type: str
                default: four_direction
                choices: ['static', 'pure_flee', 'four_direction', 'random']
            trigger_mode:
                description:
                    - Ignored, both C(noisy) and C(memory) are run.
                type: str
                choices: ['exact', 'noisy', 'memory', 'classical']
            memory:
                description:
                    - Number of previous estimates retained by the memory-aware run.
                type: int
                default: 1
            dt:
                description:
                    - Integration step.
                type: float
                default: 0.001
            rng_seed:
                description:
                    - Seed shared by both runs, a nonnegative integer.
                type: int
                default: 0
            max_time:
                description:
                    - Simulated time after which a run stops.
                type: float
    output_dir:
        description:
            - Directory receiving the comparison files.
              Defaults to the C(PURSUIT_OUTPUT_DIR) environment variable, then C(pursuit_output).
        type: str
'''

EXAMPLES = '''
- name: Memoryless against memory-aware durations
  pursuit_table1:
    scenario:
      pursuer_start: [0, 0]
      evader_start: [15, 0]
      nu: 0.5
      epsilon: 0.75
      gamma: 0.1
    output_dir: /tmp/pursuit
'''

RETURN = '''
table1_info:
    description: Path of the comparison CSV, its rows and the summary of both runs
    type: dict
    returned: always
'''

import logging
LOG_FILENAME = "/tmp/ansible_pursuit.log"
logger = logging.getLogger(__name__)
from ansible.module_utils.basic import AnsibleModule
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import Error
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import InvariantViolation
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.simulator import compare_memory
from ansible_collections.pursuit.self_triggered.plugins.module_utils.simulator import scenario_from_options
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_output import resolve_output_dir
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_output import write_csv
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_output import write_json
import os
import sys


def init_logger():
    logging.basicConfig(
        filename=LOG_FILENAME,
        format='[%(asctime)s] %(levelname)s: [%(funcName)s] %(message)s',
        level=logging.DEBUG)


def compare(module, params):
    options = dict(params['scenario'])
    options['trigger_mode'] = 'memory'
    scenario = scenario_from_options(options)
    rows, memoryless, memory = compare_memory(scenario)

    output_dir = resolve_output_dir(params['output_dir'])
    path = write_csv(os.path.join(output_dir, 'table1.csv'), PursuitConstants.TABLE1_HEADER, rows)
    violations = ["memoryless: {0}".format(message) for message in memoryless.violations]
    violations += ["memory: {0}".format(message) for message in memory.violations]
    summary = {
        'memoryless': {'capture_time': memoryless.capture_time, 'samples_used': memoryless.samples_used},
        'memory': {'capture_time': memory.capture_time, 'samples_used': memory.samples_used},
        'violations': violations,
    }
    summary_path = write_json(os.path.join(output_dir, 'table1_summary.json'), summary)
    table1_info = {'path': path, 'summary_path': summary_path, 'header': PursuitConstants.TABLE1_HEADER,
                   'rows': rows, 'summary': summary}

    if violations:
        raise InvariantViolation("{0} guarantee violation(s), first: {1}".format(len(violations), violations[0]))
    return True, table1_info


def perform_task(module):
    try:
        return compare(module, module.params) + (PursuitConstants.RC_OK,)
    except InvariantViolation as error:
        return True, repr(error), PursuitConstants.RC_VIOLATION
    except Error as error:
        return False, repr(error), PursuitConstants.RC_CONFIG


def run_module():

    # define available arguments/parameters a user can pass to the module
    module_args = dict(
        scenario=dict(type='dict',
                      required=True,
                      options=dict(
                          pursuer_start=dict(type='list', elements='float', required=True),
                          evader_start=dict(type='list', elements='float', required=True),
                          nu=dict(type='float', required=True),
                          epsilon=dict(type='float', required=True),
                          noise_kind=dict(type='str', default='uniform_disc', choices=PursuitConstants.NOISE_KINDS),
                          gamma=dict(type='float', default=0.0),
                          evader_policy=dict(type='str', default='four_direction', choices=PursuitConstants.EVADER_POLICIES),
                          trigger_mode=dict(type='str', choices=PursuitConstants.TRIGGER_MODES),
                          memory=dict(type='int', default=PursuitConstants.DEFAULT_MEMORY),
                          dt=dict(type='float', default=PursuitConstants.DEFAULT_DT),
                          rng_seed=dict(type='int', default=0),
                          max_time=dict(type='float'),
                      )
                      ),
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
        module.fail_json(msg=result, rc=rc, changed=changed)

    module.exit_json(changed=changed, rc=rc, table1_info=result)


def main():
    run_module()


if __name__ == '__main__':
    main()
