"""
Exact counts of the representations n = p + 2^a1 + ... + 2^ak, and the
density of the integers that have one.

Exponent tuples are counted as multisets: 2^0 + 2^1 and 2^1 + 2^0 are the
same representation. Only the positivity of the count enters densities.
"""

import logging
from collections import Counter
from itertools import combinations_with_replacement

import numpy as np

from ..arith import sieve_primes

logger = logging.getLogger(__name__)

MAX_K_POWERS = 4


def check_sieve(sieve, limit):
    """ Return the given sieve if it covers 2..limit, or build one when
    sieve is None.
    """
    if sieve is None:
        return sieve_primes(max(limit, 2))
    if sieve.limit < limit:
        raise ValueError('sieve up to %i is too small for %i' %
                         (sieve.limit, limit))
    return sieve


def _check_k_powers(k_powers):
    if not isinstance(k_powers, int) or not 1 <= k_powers <= MAX_K_POWERS:
        raise ValueError('k_powers must be in 1..%i, got %r' %
                         (MAX_K_POWERS, k_powers))


def power_sums(limit, k_powers=1):
    """ The sums s = 2^a1 + ... + 2^ak <= limit over multisets of
    exponents, as a Counter s -> number of multisets.
    """
    _check_k_powers(k_powers)
    exponents = range(max(int(limit), 1).bit_length())
    sums = Counter()
    for combo in combinations_with_replacement(exponents, k_powers):
        s = sum(1 << a for a in combo)
        if s <= limit:
            sums[s] += 1
    return sums


def rep_count(n, k_powers=1, sieve=None):
    """ The number of representations of n as a prime plus k_powers
    powers of two (exponents counted as a multiset).
    """
    n = int(n)
    if n < 2:
        raise ValueError('rep_count() needs n >= 2, got %i' % n)
    sieve = check_sieve(sieve, n)
    return sum(mult for s, mult in power_sums(n - 2, k_powers).items()
               if sieve.is_prime(n - s))


def rep_counts(N, k_powers=1, sieve=None):
    """ rep_count() for all 0 <= n <= N at once, as an int64 array.
    """
    N = int(N)
    sieve = check_sieve(sieve, N)
    primes = sieve.primes(2, N)
    counts = np.zeros(N + 1, dtype=np.int64)
    for s, mult in sorted(power_sums(N, k_powers).items()):
        targets = primes[:np.searchsorted(primes, N - s, 'right')] + s
        counts[targets] += mult  # distinct primes give distinct targets
    return counts


class DensityProfile:
    """ The proportion d(N_i) of integers 1 <= n <= N_i with a
    representation, at increasing checkpoints N_i.
    """

    def __init__(self, N, k_powers, checkpoints, counts):
        self.N = N
        self.k_powers = k_powers
        self.checkpoints = list(checkpoints)
        self.counts = list(counts)

    def __repr__(self):
        return '<DensityProfile N=%i k_powers=%i with %i checkpoints>' % (
            self.N, self.k_powers, len(self.checkpoints))

    @property
    def d_values(self):
        return [(Ni, c / Ni) for Ni, c in zip(self.checkpoints, self.counts)]

    def density(self, Ni):
        """ d at the given checkpoint.
        """
        return self.counts[self.checkpoints.index(Ni)] / Ni


def density_profile(N, k_powers=1, checkpoints=None, sieve=None):
    """ Count the representable integers up to each checkpoint.

    Parameters:
        N (int): the limit, at least 4.
        k_powers (int): the number of powers of two.
        checkpoints (list, optional): values 1 <= N_i <= N. Default N only.
        sieve (PrimeSieve, optional): covering N.

    Returns:
        DensityProfile
    """
    N = int(N)
    if N < 4:
        raise ValueError('density_profile() needs N >= 4, got %i' % N)
    checkpoints = sorted(set(int(c) for c in (checkpoints or [N])))
    if checkpoints[0] < 1 or checkpoints[-1] > N:
        raise ValueError('checkpoints must be in [1, %i]' % N)
    representable = rep_counts(N, k_powers, sieve) > 0
    cumulative = np.cumsum(representable)
    counts = [int(cumulative[c]) for c in checkpoints]
    logger.info('density up to %i with %i powers: %.5f' %
                (N, k_powers, counts[-1] / checkpoints[-1]))
    return DensityProfile(N, k_powers, checkpoints, counts)
