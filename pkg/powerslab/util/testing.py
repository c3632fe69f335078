"""
Helpers for the powerslab test suite, based on pytest.

Test modules import what they need from here and end with:

    from powerslab.util.testing import run_tests_if_main, raises, approx
    ...
    run_tests_if_main()

so that a single test file can be run as a script.
"""

import os
import sys
import inspect
import contextlib

import pytest


PACKAGE_NAME = __name__.split('.')[0]

# The directory that holds the package and setup.cfg
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__))))


raises = pytest.raises
skipif = pytest.mark.skipif
approx = pytest.approx


@contextlib.contextmanager
def config_options(**options):
    """ Set options of ``powerslab.config`` for the duration of a with
    block. The values set directly are dropped again on exit, also when
    the block raises.
    """
    from .. import config
    try:
        for name, value in options.items():
            setattr(config, name, value)
        yield config
    finally:
        for name in options:
            config.reset(name)


def run_tests_if_main():
    """ Run the tests of the calling module if it is run as a script,
    with a coverage report for the package.
    """
    local_vars = inspect.currentframe().f_back.f_locals
    if local_vars.get('__name__', '') != '__main__':
        return
    fname = str(local_vars['__file__'])
    os.chdir(ROOT_DIR)
    # Import the package afresh, so that the coverage covers module level code
    for key in list(sys.modules):
        if key.startswith(PACKAGE_NAME) and not key.endswith('.testing'):
            del sys.modules[key]
    sys.exit(pytest.main(['-v', '-x', '--cov', PACKAGE_NAME,
                          '--cov-config', 'setup.cfg', fname]))
