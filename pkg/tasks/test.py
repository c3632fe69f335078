import os
import sys

from invoke import task

from ._config import ROOT_DIR, NAME


@task(optional=['unit', 'style'],
      help=dict(unit='run the pytest suite of a subpackage (default: all)',
                style='run flake8 on a subpackage (default: all and tasks)',
                keyword='only run tests matching this pytest -k expression'))
def test(ctx, unit='', style='', keyword=''):
    """ run tests (unit, style)
    """
    if not (unit or style):
        sys.exit('Test task needs --unit or --style')
    if unit:
        test_unit('' if not isinstance(unit, str) else unit, keyword)
    if style:
        test_style('' if not isinstance(style, str) else style)


@task
def lint(ctx):
    """ alias for "invoke test --style"
    """
    test_style()


def test_unit(subpackage='', keyword=''):
    try:
        import pytest
    except ImportError:
        sys.exit('Cannot do unit tests, pytest not installed')
    os.chdir(ROOT_DIR)
    args = ['--cov', NAME, '--cov-config=setup.cfg', '--cov-report=term',
            os.path.join(NAME, subpackage)]
    if keyword:
        args[:0] = ['-k', keyword]
    sys.exit(pytest.main(args))


def test_style(subpackage=''):
    try:
        from flake8.main.application import Application
    except ImportError as err:
        sys.exit('Cannot do style test: ' + str(err))
    os.chdir(ROOT_DIR)
    args = [os.path.join(NAME, subpackage)] if subpackage else [NAME, 'tasks']
    print('Running flake8 on %s ...' % ', '.join(args))
    app = Application()
    app.run(args)
    if app.result_count:
        print('Found %i style errors.' % app.result_count)
    else:
        print('No style errors found.')
    app.exit()
