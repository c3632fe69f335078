"""
Regenerate the table of required C1 values per number of powers K.
"""

import time
import logging
from fractions import Fraction

from .. import __version__, config
from ..report import ReportTable
from ..romanov import K2_C1, K2_DENSITY
from ._constants import LinnikConstants
from ._criterion import max_C1, boundary_C1

logger = logging.getLogger(__name__)

# Published values, keyed by (K, grh)
PUBLISHED_C1 = {
    (6, True): 7.589, (5, True): 5.859, (4, True): 4.608, (3, True): 3.613,
    (2, True): 3.020,
    (7, False): 6.737, (6, False): 5.672, (5, False): 4.782,
    (4, False): 4.069, (3, False): 3.398, (2, False): 3.020,
}

# The older cut-off exponent that reproduces the printed K=7 value
OLD_THETA = Fraction(2, 5)

PUBLISHED_TOL = 0.002


def make_linnik_table(constants=None, tol=None):
    """ Rows for K = 6..2 assuming GRH, then K = 7..2 unconditionally.

    K = 2 rows carry C1 = 3.02 and, in the note, the published density
    bound (recomputed by ``powerslab.romanov.make_romanov_table``) and the
    criterion-side boundary. The unconditional K = 7
    row is followed by a row recomputed with cut-off exponent 0.4, which
    is what the printed value corresponds to.

    Returns:
        ReportTable
    """
    t0 = time.perf_counter()
    constants = constants or LinnikConstants()
    tol = config.bisect_tol if tol is None else tol
    table = ReportTable('Required C1 per number of powers of two',
                        [('K', 'int'), ('regime', 'text'), ('C1', 'real'),
                         ('published', 'real'), ('note', 'text')])

    for grh, Ks in ((True, (6, 5, 4, 3, 2)), (False, (7, 6, 5, 4, 3, 2))):
        regime = 'GRH' if grh else 'unconditional'
        for K in Ks:
            published = PUBLISHED_C1[(K, grh)]
            if K == 2:
                boundary = boundary_C1(2, grh, constants, tol)
                note = ('published density bound %.5f > 1/4 at C1=%.2f, '
                        'recomputed by the romanov table; criterion '
                        'boundary %.3f' % (K2_DENSITY, K2_C1, boundary))
                table.add_row([K, regime, K2_C1, published, note],
                              'paper-reproduction')
                continue
            value = max_C1(K, grh, constants, tol)
            note = ''
            provenance = 'paper-reproduction'
            if abs(value - published) > PUBLISHED_TOL:
                note = 'differs from published %.3f' % published
                provenance = 'derived'
                logger.warning('K=%i (%s): computed C1 %.4f, published %.3f'
                               % (K, regime, value, published))
            table.add_row([K, regime, value, published, note], provenance)
            if K == 7 and not grh:
                old = max_C1(K, grh, constants, tol, theta=OLD_THETA)
                table.add_row([K, 'unconditional, theta=0.4', old, published,
                               'published value matches cut-off exponent 0.4'],
                              'derived')

    table.meta = dict(version=__version__,
                      runtime_ms=int(1000 * (time.perf_counter() - t0)),
                      params=dict(epsilon=constants.epsilon,
                                  tol=tol))
    return table
