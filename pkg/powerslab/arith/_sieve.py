"""
Segmented sieve of Eratosthenes over the odd numbers, backed by numpy.
"""

import math
import logging

import numpy as np

from .. import config

logger = logging.getLogger(__name__)

# Segment length in odd numbers (4 MiB of bools)
SEGMENT = 1 << 22


def _small_odd_sieve(limit):
    # Plain odd-only sieve for the base primes
    size = (limit + 1) // 2
    odd = np.ones(size, dtype=bool)
    odd[0] = False  # 1 is not prime
    for i in range(1, (math.isqrt(limit) + 1) // 2):
        if odd[i]:
            p = 2 * i + 1
            odd[(p * p) // 2::p] = False
    return odd


class PrimeSieve:
    """ An exact primality table for the integers 2..limit.

    Only odd numbers are stored: index ``i`` stands for ``2*i + 1``, so a
    limit of 10^8 takes 50 MB. The table is built segment by segment from
    the base primes up to sqrt(limit). Instances are read-only after
    construction and can be shared between threads.

    Parameters:
        limit (int): the largest integer covered (at least 2).
    """

    def __init__(self, limit):
        limit = int(limit)
        if limit < 2:
            raise ValueError('PrimeSieve needs limit >= 2, got %i' % limit)
        self._limit = limit
        self._odd = self._build(limit)
        self._odd.flags.writeable = False

    def _build(self, limit):
        size = (limit + 1) // 2
        root = math.isqrt(limit)
        base = _small_odd_sieve(max(root, 2))
        base_primes = 2 * np.flatnonzero(base) + 1
        odd = np.ones(size, dtype=bool)
        odd[0] = False
        for start in range(0, size, SEGMENT):
            stop = min(start + SEGMENT, size)
            seg = odd[start:stop]  # a view
            n_lo = 2 * start + 1
            for p in base_primes.tolist():
                first = max(p * p, ((n_lo + p - 1) // p) * p)
                if first % 2 == 0:
                    first += p
                i = (first - 1) // 2
                if i >= stop:
                    continue
                seg[i - start::p] = False
        logger.debug('sieve up to %i built (%i segments)' %
                     (limit, (size + SEGMENT - 1) // SEGMENT))
        return odd

    def __repr__(self):
        return '<PrimeSieve up to %i at 0x%x>' % (self._limit, id(self))

    @property
    def limit(self):
        """ The largest integer covered by this sieve.
        """
        return self._limit

    def is_prime(self, n):
        """ Whether the integer n (0 <= n <= limit) is prime.
        """
        n = int(n)
        if n < 0 or n > self._limit:
            raise ValueError('%i is outside the sieve range [0, %i]' %
                             (n, self._limit))
        if n % 2 == 0:
            return n == 2
        return bool(self._odd[n // 2])

    def __contains__(self, n):
        return self.is_prime(n)

    def is_prime_array(self, ns):
        """ Vectorised primality for an integer array with values in
        [0, limit]. Returns a bool array of the same shape.
        """
        ns = np.asarray(ns, dtype=np.int64)
        if ns.size and (ns.min() < 0 or ns.max() > self._limit):
            raise ValueError('values outside the sieve range [0, %i]' %
                             self._limit)
        index = np.minimum(ns // 2, self._odd.size - 1)
        result = self._odd[index] & (ns % 2 == 1)
        result |= ns == 2
        return result

    def primes(self, lo=2, hi=None):
        """ The primes p with lo <= p <= hi as an int64 array, ascending.
        """
        hi = self._limit if hi is None else min(int(hi), self._limit)
        lo = max(int(lo), 2)
        if hi < lo:
            return np.zeros(0, dtype=np.int64)
        i0, i1 = lo // 2, (hi - 1) // 2 + 1
        odd = 2 * np.flatnonzero(self._odd[i0:i1]).astype(np.int64) + 2 * i0 + 1
        odd = odd[(odd >= lo) & (odd <= hi)]
        if lo <= 2:
            odd = np.concatenate([np.array([2], dtype=np.int64), odd])
        return odd

    def count(self, upto=None):
        """ The prime counting function pi(upto), for upto <= limit.
        """
        upto = self._limit if upto is None else int(upto)
        if upto > self._limit:
            raise ValueError('Cannot count primes beyond the sieve limit %i'
                             % self._limit)
        if upto < 2:
            return 0
        return 1 + int(np.count_nonzero(self._odd[:(upto - 1) // 2 + 1]))


def sieve_primes(limit):
    """ Build a PrimeSieve for 2..limit.

    Raises ValueError if limit is below 2 or above the ``sieve_cap``
    config option.
    """
    limit = int(limit)
    if limit < 2:
        raise ValueError('sieve_primes() needs limit >= 2, got %i' % limit)
    if limit > config.sieve_cap:
        raise ValueError('sieve limit %i exceeds the supported maximum %i '
                         '(config option sieve_cap)' % (limit, config.sieve_cap))
    logger.info('sieving primes up to %i' % limit)
    return PrimeSieve(limit)
