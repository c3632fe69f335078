"""
Brute-force counts at desk scale: representations as a prime plus powers
of two, Goldbach pairs, prime pairs with a given gap, and decompositions
of even numbers as two primes plus powers of two.
"""

import logging
logger = logging.getLogger(__name__)
del logging

from ._counts import (rep_count, rep_counts, power_sums,  # noqa
                      density_profile, DensityProfile)
from ._goldbach import goldbach_G, gap_count, hl_ratio  # noqa
from ._decompose import (verify_k2_decomposition, scan_k2_decompositions,  # noqa
                         witness_total, ScanResult)
