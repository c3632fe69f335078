import subprocess

from invoke import task

from ._config import NAME


@task
def help(ctx):
    """ get info on the developer tasks
    """
    print('Developer tools for %s\n' % NAME)
    print('  invoke <task> [arg] to run a task')
    print('  invoke --help <task> to get info on a task')
    print('  python -m %s help for the command line interface itself' % NAME)
    print()
    subprocess.call(['invoke', '--list'])
