"""
Config and definitions specific to powerslab.
"""

import os.path as op

from . import ROOT_DIR, THIS_DIR  # noqa

NAME = 'powerslab'
TABLES_DIR = op.join(ROOT_DIR, 'tables')
