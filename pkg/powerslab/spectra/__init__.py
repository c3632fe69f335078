"""
Sums of k powers of two: their value distributions, the correlation
r_{k,k}(m, L), and finite-L estimates of the constants A(k).
"""

import logging
logger = logging.getLogger(__name__)
del logging

from ._distribution import (PowerSumDistribution, build_distribution,  # noqa
                            MAX_L, DEFAULT_L, default_L)
from ._correlation import (correlate_r, iter_pair_blocks,  # noqa
                           SingularWeights, odd_part)
from ._estimate import (AkEstimate, PUBLISHED_BRACKETS, estimate_Ak,  # noqa
                        ak_trend)
