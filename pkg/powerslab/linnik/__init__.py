"""
The admissibility criterion for representing even numbers as two primes
plus K powers of two, and the largest sieve constant C1 it allows.
"""

import logging
logger = logging.getLogger(__name__)
del logging

from ._constants import LinnikConstants  # noqa
from ._criterion import (compute_C2prime, criterion_lhs, CriterionResult,  # noqa
                         boundary_C1, max_C1, closed_form_C1)
from ._table import make_linnik_table, PUBLISHED_C1  # noqa
