from __future__ import absolute_import, division, print_function
__metaclass__ = type

import os
import sys
import tempfile
import importlib

COLLECTION = 'ansible_collections.pursuit.self_triggered'


def _expose_checkout():
    # a plain git checkout is not laid out as ansible_collections/<namespace>/<name>
    root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
    top = tempfile.mkdtemp(prefix='pursuit_collections_')
    namespace = os.path.join(top, 'ansible_collections', 'pursuit')
    os.makedirs(namespace)
    os.symlink(root, os.path.join(namespace, 'self_triggered'))
    sys.path.insert(0, top)
    importlib.invalidate_caches()


try:
    importlib.import_module(COLLECTION)
except ImportError:
    _expose_checkout()
