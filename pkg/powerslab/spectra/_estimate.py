"""
Finite-L estimates of the constants A(k).
"""

import math
import time
import logging
from fractions import Fraction

from joblib import Parallel, delayed

from .. import config
from ..arith import Interval, TWIN_PRIME_CONSTANT
from ._distribution import build_distribution
from ._correlation import iter_pair_blocks, SingularWeights

logger = logging.getLogger(__name__)


def _bracket(lo, hi):
    return Interval(Fraction(lo), Fraction(hi))


# Published enclosures of A(1)..A(4)
PUBLISHED_BRACKETS = {
    1: _bracket('0.27835', '0.27926'),
    2: _bracket('0.05458', '0.05549'),
    3: _bracket('0.012697', '0.013598'),
    4: _bracket('0.003091', '0.003992'),
}

# Relative error bound of the float evaluation of S: every term carries
# at most 31 roundings (15 odd primes below 2^64), plus two summations
SUM_REL_ERROR = 2.0 ** -46

AGREEMENT_TOL = 0.01


class AkEstimate:
    """ The truncated sum S(k, L) and the derived estimate of A(k).

    Attributes:
        k (int), L (int): the parameters.
        S_value (Interval): enclosure of sum_{m != 0} r(m, L) sigma(m).
        estimate (Interval): S_value / (2 L^(2k)) - 1.
        paper_bracket (Interval or None): the published enclosure of A(k).
        runtime_ms (int): wall time of the computation.
    """

    def __init__(self, k, L, S_value, paper_bracket=None, runtime_ms=0):
        self.k = k
        self.L = L
        self.S_value = S_value
        self.estimate = S_value / (2 * Interval.point(L) ** (2 * k)) - 1
        self.paper_bracket = paper_bracket
        self.runtime_ms = runtime_ms

    def __repr__(self):
        return '<AkEstimate k=%i L=%i estimate=%s>' % (self.k, self.L,
                                                       self.estimate)

    def distance_to_bracket(self):
        """ Distance of the estimate's midpoint to the published bracket
        (0 if inside), or None without a bracket.
        """
        if self.paper_bracket is None:
            return None
        mid = self.estimate.mid
        b = self.paper_bracket
        return max(b.lo - mid, mid - b.hi, 0.0)

    def agrees(self, tol=AGREEMENT_TOL):
        """ Whether the midpoint lies within tol of the published bracket.
        """
        d = self.distance_to_bracket()
        return None if d is None else d <= tol

    @property
    def paper_agreement(self):
        return self.agrees(AGREEMENT_TOL)

    def as_dict(self):
        b = self.paper_bracket
        return dict(k=self.k, L=self.L,
                    S_lo=self.S_value.lo, S_hi=self.S_value.hi,
                    A_lo=self.estimate.lo, A_hi=self.estimate.hi,
                    paper_lo=b.lo if b else None, paper_hi=b.hi if b else None,
                    paper_agreement=self.paper_agreement)


def _block_sum(diffs, weights, weigh):
    if isinstance(diffs, list):
        return math.fsum(w * weigh.scalar(d) for d, w in zip(diffs, weights))
    return math.fsum((weights * weigh(diffs)).tolist())


def estimate_Ak(k, L=None, C0=None, cache=None, workers=None):
    """ Estimate A(k) from the truncation L.

    Computes S(k, L) = sum_{m != 0} r_{k,k}(m, L) sigma(m) and
    S / (2 L^(2k)) - 1. Block partial sums are correctly rounded and
    reduced in block order, so the result does not depend on the
    number of workers.

    Parameters:
        k (int): 1..4.
        L (int, optional): truncation, see ``DEFAULT_L`` and ``MAX_L``.
        C0 (Interval, optional): the twin-prime constant.
        cache (FactorCache, optional): for factorizations of large odd parts.
        workers (int, optional): threads for the block sums, default
            from the ``workers`` config option.

    Returns:
        AkEstimate
    """
    t0 = time.perf_counter()
    C0 = TWIN_PRIME_CONSTANT if C0 is None else C0
    dist = build_distribution(k, L)
    L = dist.L
    if L == 0:
        raise ValueError('estimate_Ak() needs L >= 1')
    workers = config.workers if workers is None else workers
    weigh = SingularWeights(dist.max_value, cache)

    blocks = iter_pair_blocks(dist)
    if workers == 1 or not dist.fits_int64():
        partials = [_block_sum(d, w, weigh) for d, w in blocks]
    else:
        parallel = Parallel(n_jobs=workers or -1, prefer='threads')
        partials = parallel(delayed(_block_sum)(d, w, weigh) for d, w in blocks)
    # Sum over m > 0, doubled for the mirrored m < 0
    half = math.fsum(partials)
    S_float = Interval(2 * half) * Interval(1 - SUM_REL_ERROR, 1 + SUM_REL_ERROR)
    S_value = 2 * C0 * S_float

    runtime_ms = int(1000 * (time.perf_counter() - t0))
    result = AkEstimate(k, L, S_value, PUBLISHED_BRACKETS.get(k), runtime_ms)
    logger.info('A(%i) at L=%i: %s (%i blocks, %i ms)' %
                (k, L, result.estimate, len(partials), runtime_ms))
    if result.paper_agreement is False:
        logger.warning('A(%i) estimate %.5f at L=%i is %.5f outside the '
                       'published bracket %s' % (k, result.estimate.mid, L,
                                                 result.distance_to_bracket(),
                                                 result.paper_bracket))
    return result


def ak_trend(estimates):
    """ Report, without failing, whether estimates are decreasing in k and
    each exceeds 2^(-2k-1).

    Parameters:
        estimates (list of AkEstimate): ordered by k.

    Returns:
        dict with ``decreasing`` (bool) and ``above_floor`` (dict k -> bool).
    """
    estimates = sorted(estimates, key=lambda e: e.k)
    mids = [e.estimate.mid for e in estimates]
    decreasing = all(a > b for a, b in zip(mids, mids[1:]))
    above_floor = {e.k: e.estimate.lo > 2.0 ** (-2 * e.k - 1)
                   for e in estimates}
    if not decreasing:
        logger.warning('A(k) estimates are not decreasing in k: %s' %
                       ', '.join('%.5f' % m for m in mids))
    for k, ok in above_floor.items():
        if not ok:
            logger.warning('A(%i) estimate is not above 2^-%i' % (k, 2 * k + 1))
    return dict(decreasing=decreasing, above_floor=above_floor)
