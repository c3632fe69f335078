import os
import shutil
import fnmatch

from invoke import task

from ._config import ROOT_DIR, TABLES_DIR, NAME


@task(help=dict(tables='also remove the regenerated tables'))
def clean(ctx, tables=False):
    """ remove caches, build artifacts and coverage output
    """
    removed = 0
    for root, dirnames, filenames in os.walk(ROOT_DIR):
        if 'examples' in dirnames:
            dirnames.remove('examples')
        for dirname in list(dirnames):
            if dirname in ('__pycache__', '.pytest_cache'):
                shutil.rmtree(os.path.join(root, dirname))
                dirnames.remove(dirname)
                removed += 1
        for filename in fnmatch.filter(filenames, '*.py[co]'):
            os.remove(os.path.join(root, filename))
            removed += 1
    print('removed %i cache dirs and bytecode files' % removed)

    dirs = ['dist', 'build', NAME + '.egg-info']
    if tables:
        dirs.append(os.path.relpath(TABLES_DIR, ROOT_DIR))
    for dir in dirs:
        dirname = os.path.join(ROOT_DIR, dir)
        if os.path.isdir(dirname):
            shutil.rmtree(dirname)
            print('Removed directory %r' % dir)
