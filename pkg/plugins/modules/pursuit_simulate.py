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
module: pursuit_simulate
author:
    - pursuit.self_triggered contributors
short_description: Simulates a self-triggered pursuit and checks its capture guarantees.
notes:
    - The run fails with C(rc=1) when a guarantee is violated and with C(rc=2) on a configuration error.
      The trace and summary files are written in both the success and the violation case.
description:
    - Integrates the pursuer and evader with forward Euler under zero-order hold control, samples the
      evader at the self-triggered events and writes the event trace C(trace_seed<seed>.csv) plus
      C(summary.json) with the capture time, the number of samples, the theoretical bounds and the
      list of violated guarantees.
    - With I(seeds) one trace is written per seed and the summary aggregates every run.
version_added: 1.0.0
requirements:
- Python >= 3
- numpy
- scipy
- numba
options:
    scenario:
        description:
            - The pursuit to simulate.
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
                    - C(none) exact measurements.
                    - C(uniform_disc) estimate uniform within I(gamma) of the evader.
                    - C(worst_case_boundary) estimate I(gamma) off the line of sight.
                    - C(line_of_sight) estimate I(gamma) beyond the evader along the line of sight.
                type: str
                default: none
                choices: ['none', 'uniform_disc', 'worst_case_boundary', 'line_of_sight']
            gamma:
                description:
                    - Error radius of every measurement.
                type: float
                default: 0.0
            evader_policy:
                description:
                    - Motion of the evader, re-decided at every integration step.
                type: str
                default: pure_flee
                choices: ['static', 'pure_flee', 'four_direction', 'random']
            trigger_mode:
                description:
                    - C(exact) closed-form duration with exact sensing.
                    - C(noisy) closed-form duration for the error radius.
                    - C(memory) duration over the reachable set intersected with the retained estimates.
                    - C(classical) re-sampling at every integration step.
                type: str
                default: exact
                choices: ['exact', 'noisy', 'memory', 'classical']
            memory:
                description:
                    - Number of previous estimates retained in C(memory) mode.
                type: int
                default: 1
            dt:
                description:
                    - Integration step.
                type: float
                default: 0.001
            rng_seed:
                description:
                    - Seed of the noise and evader random streams, a nonnegative integer.
                type: int
                default: 0
            max_time:
                description:
                    - Simulated time after which the run stops.
                      Defaults to twice the capture bound of the initial separation.
                type: float
    seeds:
        description:
            - Nonnegative seeds to run the scenario with, overriding I(scenario.rng_seed).
        type: list
        elements: int
    output_dir:
        description:
            - Directory receiving the trace and summary files.
              Defaults to the C(PURSUIT_OUTPUT_DIR) environment variable, then C(pursuit_output).
        type: str
'''

EXAMPLES = '''
- name: Exact sensing against a fleeing evader
  pursuit_simulate:
    scenario:
      pursuer_start: [0, 0]
      evader_start: [15, 0]
      nu: 0.5
      epsilon: 0.75
      evader_policy: pure_flee
    output_dir: /tmp/pursuit

- name: Memory-aware pursuit under noisy sensing, five seeds
  pursuit_simulate:
    scenario: "{{ table1_scenario }}"
    seeds: [0, 1, 2, 3, 4]
'''

RETURN = '''
simulation_info:
    description: Written files and the summary of the run(s)
    type: dict
    returned: always
'''

import logging
LOG_FILENAME = "/tmp/ansible_pursuit.log"
logger = logging.getLogger(__name__)
from dataclasses import replace
from ansible.module_utils.basic import AnsibleModule
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import Error
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import InvariantViolation
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.simulator import run
from ansible_collections.pursuit.self_triggered.plugins.module_utils.simulator import scenario_bounds
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


def run_summary(scenario, log):
    return {
        'rng_seed': scenario.rng_seed,
        'capture_time': log.capture_time,
        'samples_used': log.samples_used,
        'bounds': scenario_bounds(scenario),
        'violations': list(log.violations),
    }


def simulate(module, params):
    scenario = scenario_from_options(params['scenario'])
    seeds = params['seeds'] or [scenario.rng_seed]
    output_dir = resolve_output_dir(params['output_dir'])

    traces = []
    runs = []
    for seed in seeds:
        seeded = replace(scenario, rng_seed=seed)
        log = run(seeded)
        path = os.path.join(output_dir, 'trace_seed{0}.csv'.format(seed))
        traces.append(write_csv(path, PursuitConstants.TRACE_HEADER, [row.as_row() for row in log.rows]))
        runs.append(run_summary(seeded, log))
        logger.debug("seed %s: capture_time=%s samples=%s violations=%s",
                     seed, log.capture_time, log.samples_used, len(log.violations))

    if len(runs) == 1:
        summary = runs[0]
    else:
        summary = {
            'runs': runs,
            'captured': sum(1 for each in runs if each['capture_time'] is not None),
            'violations': ["seed {0}: {1}".format(each['rng_seed'], message)
                           for each in runs for message in each['violations']],
        }
    summary_path = write_json(os.path.join(output_dir, 'summary.json'), summary)
    simulation_info = {'traces': traces, 'summary_path': summary_path, 'summary': summary}

    if summary['violations']:
        raise InvariantViolation("{0} guarantee violation(s), first: {1}".format(len(summary['violations']),
                                                                                 summary['violations'][0]))
    return True, simulation_info


def perform_task(module):
    try:
        return simulate(module, module.params) + (PursuitConstants.RC_OK,)
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
                          noise_kind=dict(type='str', default='none', choices=PursuitConstants.NOISE_KINDS),
                          gamma=dict(type='float', default=0.0),
                          evader_policy=dict(type='str', default='pure_flee', choices=PursuitConstants.EVADER_POLICIES),
                          trigger_mode=dict(type='str', default='exact', choices=PursuitConstants.TRIGGER_MODES),
                          memory=dict(type='int', default=PursuitConstants.DEFAULT_MEMORY),
                          dt=dict(type='float', default=PursuitConstants.DEFAULT_DT),
                          rng_seed=dict(type='int', default=0),
                          max_time=dict(type='float'),
                      )
                      ),
        seeds=dict(type='list', elements='int'),
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

    module.exit_json(changed=changed, rc=rc, simulation_info=result)


def main():
    run_module()


if __name__ == '__main__':
    main()
