"""
Lower bounds for the density of integers of the form p + 2^a, by
splitting the integers into residue classes modulo 2^m - 1.
"""

import logging
logger = logging.getLogger(__name__)
del logging

from ._params import (RomanovConfig, ConfigError, DEFAULT_M, DEFAULT_C3,  # noqa
                      DEFAULT_S_TABLE, divisors)
from ._classes import (valid_alphas, class_T, class_D, class_stats,  # noqa
                       ClassStats, pintz_density_factor, popcount)
from ._density import (density_lower_bound, DensityResult,  # noqa
                        pintz_threshold, get_mask_statistics)
from ._table import (make_romanov_table, TABLE_C1, PUBLISHED_D,  # noqa
                     K2_C1, K2_DENSITY)
