"""
Rigorous arithmetic primitives: outward-rounded intervals, a prime sieve,
certified factorization, and the singular series.
"""

import logging
logger = logging.getLogger(__name__)
del logging

from ._interval import Interval, LOG2  # noqa
from ._sieve import PrimeSieve, sieve_primes  # noqa
from ._factor import (FactorList, FactorCache, factorize, is_prime,  # noqa
                      euler_phi)
from ._singular import (TWIN_PRIME_CONSTANT, compute_C0,  # noqa
                        singular_factor, sigma_singular)
