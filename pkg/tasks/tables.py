import os
import subprocess
import sys

from invoke import task

from ._config import ROOT_DIR, TABLES_DIR, NAME

TABLES = {'linnik': ['linnik', 'table'],
          'romanov': ['romanov', 'table'],
          'constants': ['constants']}


@task(help=dict(format='json, csv or md (default all three)',
                workers='number of worker processes'))
def tables(ctx, format='', workers=0):
    """ regenerate the tables into the tables/ directory
    """
    formats = [format] if format else ['json', 'csv', 'md']
    os.makedirs(TABLES_DIR, exist_ok=True)
    for name, args in TABLES.items():
        for fmt in formats:
            cmd = [sys.executable, '-m', NAME] + args + ['--format', fmt]
            if workers:
                cmd += ['--workers', str(workers)]
            print('Running', ' '.join(cmd[2:]))
            out = subprocess.check_output(cmd, cwd=ROOT_DIR)
            filename = os.path.join(TABLES_DIR, '%s.%s' % (name, fmt))
            with open(filename, 'wb') as f:
                f.write(out)
    print('Tables written to %s' % TABLES_DIR)
