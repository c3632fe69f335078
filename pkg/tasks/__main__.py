"""
Run the tasks via ``python -m tasks ...``, an alias for invoke.
"""

import sys
import subprocess

cmd = ['invoke'] + (sys.argv[1:] or ['help'])
sys.exit(subprocess.call(cmd))
