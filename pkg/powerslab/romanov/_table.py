"""
Regenerate the table of density lower bounds for a range of C1 values.
"""

import time
import logging

from .. import __version__
from ..report import ReportTable
from ._params import RomanovConfig, DEFAULT_M
from ._density import density_lower_bound, pintz_threshold

logger = logging.getLogger(__name__)

TABLE_C1 = (8.0, 7.8209, 6.7814, 4.0, 3.02, 2.0)

# Published density bounds at m = 24
PUBLISHED_D = {8.0: 0.10788, 7.8209: 0.11011, 6.7814: 0.12532,
               4.0: 0.19871, 3.02: 0.25007, 2.0: 0.34583}

PUBLISHED_TOL = 2e-4

# The C1 at which the bound first exceeds 1/4, enough for two powers
K2_C1 = 3.02
K2_DENSITY = PUBLISHED_D[K2_C1]


def make_romanov_table(m=DEFAULT_M, workers=None, C1_values=None, **kwargs):
    """ Density lower bounds for the C1 values of the published table
    (or the given ones). Extra keyword arguments go to RomanovConfig.

    Returns:
        ReportTable
    """
    t0 = time.perf_counter()
    C1_values = TABLE_C1 if C1_values is None else tuple(C1_values)
    table = ReportTable('Density lower bounds modulo 2^%i - 1' % m,
                        [('C1', 'real'), ('d_lower', 'real'),
                         ('published', 'real'), ('class_count_nonzero', 'int'),
                         ('pintz_K', 'text')])
    for C1 in C1_values:
        config = RomanovConfig(C1, m, **kwargs)
        result = density_lower_bound(config, workers)
        published = PUBLISHED_D.get(C1) if m == DEFAULT_M else None
        provenance = 'derived'
        if published is not None:
            if abs(result.d_lower - published) <= PUBLISHED_TOL:
                provenance = 'paper-reproduction'
            else:
                logger.warning('C1=%g: density bound %.5f, published %.5f'
                               % (C1, result.d_lower, published))
        K = pintz_threshold(min(max(result.d_lower, 0.0), 0.5))
        table.add_row([C1, result.d_lower, published,
                       result.class_count_nonzero,
                       '' if K is None else str(K)], provenance)
    table.meta.update(version=__version__,
                      runtime_ms=int(1000 * (time.perf_counter() - t0)),
                      params=dict(m=m))
    return table
