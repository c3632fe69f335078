"""
The aggregated lower bound for the density of integers p + 2^a.
"""

import csv
import math
import time
import logging
import threading

import numpy as np
from joblib import Parallel, delayed

from .. import config as global_config
from ..arith import LOG2
from ._classes import (coprime_table, class_masks, popcount, gcd_pair_counts,
                       T_from_pair_counts, D_coefficient, density_factor_array)

logger = logging.getLogger(__name__)


class MaskStatistics:
    """ The distinct valid-alpha masks over all residue classes modulo
    2^m - 1, with the number of classes sharing each mask, N1 per mask and
    the ordered alpha pair counts grouped by gcd with m. None of this
    depends on C1 or the S-table.
    """

    def __init__(self, m, masks, counts):
        self.m = m
        self.masks = masks
        self.counts = counts
        self.N1 = popcount(masks)
        self.pairs = gcd_pair_counts(masks, m)

    def __repr__(self):
        return '<MaskStatistics m=%i with %i distinct masks>' % (
            self.m, len(self.masks))

    def __len__(self):
        return len(self.masks)

    def total_N1(self):
        return int((self.counts * self.N1).sum())


def _chunk_masks(m, primes, start, stop):
    coprime = coprime_table(2 ** m - 1, primes)
    ks = np.arange(start, stop, dtype=np.int64)
    masks = class_masks(ks, m, coprime)
    return np.unique(masks, return_counts=True)


def _chunks(ell, chunk_bits):
    size = 1 << chunk_bits
    return [(start, min(start + size, ell)) for start in range(0, ell, size)]


def _n_jobs(workers):
    workers = global_config.workers if workers is None else workers
    return workers or -1


def compute_mask_statistics(config, workers=None, chunk_bits=None):
    """ Classify all residue classes by their valid-alpha mask.

    The classes are processed in blocks of 2^chunk_bits, possibly in
    parallel, and the per-block results are merged in block order, so
    the outcome does not depend on the number of workers.
    """
    chunk_bits = global_config.chunk_bits if chunk_bits is None else chunk_bits
    chunks = _chunks(config.ell, chunk_bits)
    primes = list(config.ell_factors.primes)
    n_jobs = _n_jobs(workers)
    logger.info('classifying %i residue classes in %i blocks' %
                (config.ell, len(chunks)))
    if n_jobs == 1 or len(chunks) == 1:
        parts = [_chunk_masks(config.m, primes, a, b) for a, b in chunks]
    else:
        parts = Parallel(n_jobs=n_jobs)(
            delayed(_chunk_masks)(config.m, primes, a, b) for a, b in chunks)
    all_masks = np.concatenate([p[0] for p in parts])
    all_counts = np.concatenate([p[1] for p in parts])
    masks, inverse = np.unique(all_masks, return_inverse=True)
    counts = np.zeros(len(masks), dtype=np.int64)
    np.add.at(counts, inverse, all_counts)
    return MaskStatistics(config.m, masks, counts)


_stats_cache = {}
_stats_lock = threading.Lock()


def get_mask_statistics(config, workers=None):
    """ Cached compute_mask_statistics(), per m.
    """
    with _stats_lock:
        stats = _stats_cache.get(config.m)
    if stats is None:
        stats = compute_mask_statistics(config, workers)
        with _stats_lock:
            _stats_cache[config.m] = stats
    return stats


class DensityResult:
    """ The lower bound for the density and how it was obtained.
    """

    def __init__(self, config, d_lower, class_count_nonzero, distinct_masks,
                 runtime_ms):
        self.config = config
        self.d_lower = d_lower
        self.class_count_nonzero = class_count_nonzero
        self.distinct_masks = distinct_masks
        self.runtime_ms = runtime_ms

    def __repr__(self):
        return '<DensityResult m=%i C1=%g d_lower=%.5f>' % (
            self.config.m, self.config.C1, self.d_lower)

    def as_dict(self):
        d = self.config.as_dict()
        d.update(d_lower=self.d_lower,
                 class_count_nonzero=self.class_count_nonzero,
                 distinct_masks=self.distinct_masks,
                 runtime_ms=self.runtime_ms)
        return d


def _shares(N1, T, config):
    # f(D) N1 per class (or mask), 0 for empty classes
    nonzero = N1 > 0
    D = np.ones(len(N1))
    D[nonzero] = 1 + D_coefficient(config) * T[nonzero] / N1[nonzero]
    f = density_factor_array(D)
    return np.where(nonzero, f * N1, 0.0), D, f


def _direct_chunk_sum(config, start, stop):
    coprime = coprime_table(config.ell, list(config.ell_factors.primes))
    masks = class_masks(np.arange(start, stop, dtype=np.int64), config.m,
                        coprime)
    N1 = popcount(masks)
    T = T_from_pair_counts(gcd_pair_counts(masks, config.m), config)
    shares, _, _ = _shares(N1, T, config)
    return math.fsum(shares.tolist()), int(np.count_nonzero(N1))


def density_lower_bound(config, workers=None, memoize=True, per_class_csv=None):
    """ The lower bound for the lower density of the integers p + 2^a:

        sum_k f(D(k)) N1(k) / (phi(ell) m log 2)

    over all residue classes k modulo ell = 2^m - 1, with the upper
    S-table values and C0 and the lower log 2 in D, and the upper log 2
    in the normalization.

    Parameters:
        config (RomanovConfig): the parameters.
        workers (int, optional): worker processes for the classification.
        memoize (bool): evaluate per distinct mask (default) instead of
            per class. Both give the same value.
        per_class_csv (str, optional): write the statistics per distinct
            mask to this CSV file.

    Returns:
        DensityResult
    """
    t0 = time.perf_counter()
    norm = config.phi_ell * config.m * LOG2.hi
    if memoize:
        stats = get_mask_statistics(config, workers)
        T = T_from_pair_counts(stats.pairs, config)
        shares, D, f = _shares(stats.N1, T, config)
        total = math.fsum((stats.counts * shares).tolist())
        nonzero = int(stats.counts[stats.N1 > 0].sum())
        distinct = len(stats)
        if per_class_csv:
            _write_csv(per_class_csv, stats, T, D, f, shares, norm)
    else:
        if per_class_csv:
            raise ValueError('per_class_csv needs memoize=True')
        chunks = _chunks(config.ell, global_config.chunk_bits)
        parts = [_direct_chunk_sum(config, a, b) for a, b in chunks]
        total = math.fsum(p[0] for p in parts)
        nonzero = sum(p[1] for p in parts)
        distinct = None
    d_lower = total / norm
    if not 0 <= d_lower <= 0.5:
        logger.warning('density bound %r outside [0, 0.5]' % d_lower)
    runtime_ms = int(1000 * (time.perf_counter() - t0))
    logger.info('density bound for m=%i, C1=%g: %.5f (%i ms)' %
                (config.m, config.C1, d_lower, runtime_ms))
    return DensityResult(config, d_lower, nonzero, distinct, runtime_ms)


def _write_csv(filename, stats, T, D, f, shares, norm):
    with open(filename, 'w', newline='') as fh:
        writer = csv.writer(fh, lineterminator='\n')
        writer.writerow(['alpha_mask', 'N1', 'T', 'D', 'f_D', 'classes',
                         'share_total'])
        for i in range(len(stats)):
            writer.writerow(['0x%x' % int(stats.masks[i]), int(stats.N1[i]),
                             repr(float(T[i])), repr(float(D[i])),
                             repr(float(f[i])), int(stats.counts[i]),
                             repr(float(stats.counts[i] * shares[i] / norm))])
    logger.info('wrote %i mask rows to %s' % (len(stats), filename))


def pintz_threshold(d_lower, k=1):
    """ The number of powers of two K = 2k that a density bound above 1/4
    yields (for sums of k powers), or None when d_lower <= 1/4.
    """
    if not 0 <= d_lower <= 0.5:
        raise ValueError('d_lower must be in [0, 0.5], got %r' % d_lower)
    if not isinstance(k, int) or k < 1:
        raise ValueError('k must be a positive int, got %r' % (k, ))
    return 2 * k if d_lower > 0.25 else None
