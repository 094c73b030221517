#!/usr/bin/python
#
#    CSV and JSON writers shared by the pursuit modules.
#
##

from __future__ import absolute_import, division, print_function
__metaclass__ = type

import os
import csv
import json
import logging

from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_constants import PursuitConstants
from ansible_collections.pursuit.self_triggered.plugins.module_utils.pursuit_exceptions import Error
logger = logging.getLogger(__name__)


def format_value(value):
    """Full-precision text for one CSV cell."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return '{0:.17g}'.format(value)
    return str(value)


def resolve_output_dir(output_dir=None):
    path = output_dir or os.environ.get(PursuitConstants.OUTPUT_DIR_ENV) or PursuitConstants.DEFAULT_OUTPUT_DIR
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as error:
        raise Error("output directory {0} is not writable: {1}".format(path, error))
    if not os.access(path, os.W_OK):
        raise Error("output directory {0} is not writable".format(path))
    return path


def write_csv(path, header, rows):
    try:
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_value(cell) for cell in row])
    except OSError as error:
        raise Error("failed to write {0}: {1}".format(path, error))
    logger.debug("wrote %s rows to %s", len(rows), path)
    return path


def write_json(path, document):
    try:
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(document, handle, indent=2, sort_keys=True)
            handle.write('\n')
    except OSError as error:
        raise Error("failed to write {0}: {1}".format(path, error))
    logger.debug("wrote summary %s", path)
    return path
