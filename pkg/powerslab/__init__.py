"""
powerslab is a desk-scale computational toolkit for the Goldbach-Linnik
problem and Romanov's constant: rigorous interval enclosures of the
analytic constants, the admissibility criterion for the number of powers
of two, the residue-class lower bound for the density of integers of the
form p + 2^a, and sieve-based empirical cross-checks.

Use it from Python, or via the command line: ``python -m powerslab help``.
"""

__version__ = '0.1.0'

# Assert compatibility
import sys
if sys.version_info < (3, 8):  # pragma: no cover
    raise RuntimeError('powerslab needs at least Python 3.8')

# Import config object
from ._config import config  # noqa
from .util.logging import set_log_level  # noqa
set_log_level(config.log_level)

del sys
