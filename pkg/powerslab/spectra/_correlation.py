"""
The correlation r_{k,k}(m, L) of a power-sum distribution with itself,
and the singular-series weights of its differences.
"""

import math
import logging
import threading

import numpy as np

from ..arith import PrimeSieve, factorize

logger = logging.getLogger(__name__)

# Pair blocks hold at most this many differences
BLOCK_SIZE = 1 << 21

# Largest odd part for which the smallest-prime-factor table is used
SPF_LIMIT = 2 ** 26


def iter_pair_blocks(dist, block_size=None):
    """ Yield ``(diffs, weights)`` for all ordered value pairs s > t of
    the distribution, with diff = s - t > 0 and weight = counts(s) *
    counts(t). The block partition depends only on the distribution, so
    consumers can reduce blocks in a fixed order.

    For values that fit in int64 the blocks are int64 arrays; otherwise
    they are lists of Python ints.
    """
    block_size = block_size or BLOCK_SIZE
    if dist.fits_int64():
        values, mults = dist.as_arrays()
        for i0, i1 in _row_blocks(len(values), block_size):
            diffs = values[i0:i1, None] - values[None, :i1]
            weights = mults[i0:i1, None] * mults[None, :i1]
            mask = diffs > 0
            yield diffs[mask], weights[mask]
    else:
        items = list(dist.counts.items())
        for i0, i1 in _row_blocks(len(items), block_size):
            diffs, weights = [], []
            for s, cs in items[i0:i1]:
                for t, ct in items:
                    if t >= s:
                        break
                    diffs.append(s - t)
                    weights.append(cs * ct)
            yield diffs, weights


def _row_blocks(n, block_size):
    # Row i pairs with the columns 0..i, rows are grouped up to block_size
    i0 = 0
    while i0 < n:
        i1 = i0 + 1
        while i1 < n and (i1 + 1 - i0) * (i1 + 1) <= block_size:
            i1 += 1
        yield i0, i1
        i0 = i1


def correlate_r(dist, block_size=None):
    """ The correlation r(m) = sum_s counts(s) counts(s - m) for m != 0.

    Returns a dict m -> r(m) holding every nonzero m with r(m) > 0, for
    positive and negative m (r(m) = r(-m)), ascending by m.
    """
    positive = {}
    if dist.fits_int64():
        all_diffs, all_weights = [], []
        for diffs, weights in iter_pair_blocks(dist, block_size):
            all_diffs.append(diffs)
            all_weights.append(weights)
        if all_diffs:
            diffs = np.concatenate(all_diffs)
            weights = np.concatenate(all_weights)
            keys, inverse = np.unique(diffs, return_inverse=True)
            sums = np.zeros(len(keys), dtype=np.int64)
            np.add.at(sums, inverse, weights)
            positive = dict(zip(keys.tolist(), sums.tolist()))
    else:
        for diffs, weights in iter_pair_blocks(dist, block_size):
            for d, w in zip(diffs, weights):
                positive[d] = positive.get(d, 0) + w
    result = {-m: positive[m] for m in sorted(positive, reverse=True)}
    result.update((m, positive[m]) for m in sorted(positive))
    return result


def odd_part(values):
    """ The odd part of each positive value in an int64 array.
    """
    values = np.asarray(values, dtype=np.int64)
    return values // (values & -values)


class SingularWeights:
    """ Evaluates the float product F(m) = prod (p-1)/(p-2) over the odd
    primes p dividing m, for arrays of positive integers.

    Below ``SPF_LIMIT`` a smallest-prime-factor table over the odd numbers
    is used; above it, odd parts are factorized once and memoized. Each
    F(m) carries at most 2 roundings per distinct prime factor.

    Parameters:
        max_value (int): the largest argument that will be passed.
        cache (FactorCache, optional): used for the memoized factorizations.
    """

    def __init__(self, max_value, cache=None):
        self._cache = cache
        self._memo = {1: 1.0}
        self._lock = threading.Lock()
        self._spf = None
        if max_value <= SPF_LIMIT:
            self._spf = _odd_spf_table(max(int(max_value), 3))

    def _memo_F(self, n):
        with self._lock:
            F = self._memo.get(n)
        if F is None:
            F = 1.0
            for p, _ in factorize(n, self._cache):
                if p > 2:
                    F *= (p - 1) / (p - 2)
            with self._lock:
                self._memo[n] = F
        return F

    def scalar(self, m):
        """ F(m) for a single Python int.
        """
        m = abs(int(m))
        return self._memo_F(m // (m & -m))

    def __call__(self, values):
        """ F for an int64 array of positive integers.
        """
        odd = odd_part(values)
        if self._spf is None:
            uniq, inverse = np.unique(odd, return_inverse=True)
            F_uniq = np.array([self._memo_F(int(u)) for u in uniq.tolist()],
                              dtype=np.float64)
            return F_uniq[inverse]
        F = np.ones(len(odd), dtype=np.float64)
        cur = odd.copy()
        last = np.zeros(len(odd), dtype=np.int64)
        idx = np.flatnonzero(cur > 1)
        while idx.size:
            p = self._spf[cur[idx] // 2].astype(np.int64)
            new = p != last[idx]
            pn = p[new]
            F[idx[new]] *= (pn - 1) / (pn - 2)
            last[idx] = p
            cur[idx] //= p
            idx = idx[cur[idx] > 1]
        return F


def _odd_spf_table(limit):
    """ Smallest prime factor of each odd number 2i+1 <= limit, as int32.
    """
    size = (limit + 1) // 2
    spf = np.zeros(size, dtype=np.int32)
    base = PrimeSieve(max(math.isqrt(limit), 2)).primes(3)
    for p in base.tolist():
        view = spf[(p * p) // 2::p]
        view[view == 0] = p
    unmarked = np.flatnonzero(spf == 0)
    spf[unmarked] = 2 * unmarked + 1
    return spf
