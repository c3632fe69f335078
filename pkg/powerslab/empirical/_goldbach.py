"""
Goldbach pair counts, prime pairs with a given gap, and the comparison
with the conjectured asymptotic.
"""

import math
import logging

import numpy as np

from ..arith import TWIN_PRIME_CONSTANT, singular_factor
from ._counts import check_sieve

logger = logging.getLogger(__name__)

HL_MIN_N = 10 ** 4


def goldbach_G(N, sieve=None):
    """ The number of ordered pairs of primes (p1, p2) with
    2 < p1, p2 < N and p1 + p2 = N, for even N > 4.
    """
    N = int(N)
    if N % 2:
        raise ValueError('goldbach_G() needs an even N, got %i' % N)
    if N <= 4:
        raise ValueError('goldbach_G() needs N > 4, got %i' % N)
    sieve = check_sieve(sieve, N)
    p1 = sieve.primes(3, N - 3)
    return int(np.count_nonzero(sieve.is_prime_array(N - p1)))


def gap_count(N, h, k=1, ell=1, sieve=None):
    """ The number of pairs of primes p1, p2 <= N with p1 - p2 = h and
    p2 = k (mod ell).
    """
    N, h, k, ell = int(N), int(h), int(k), int(ell)
    if ell < 1:
        raise ValueError('gap_count() needs ell >= 1, got %i' % ell)
    if math.gcd(k, ell) != 1:
        raise ValueError('gap_count() needs gcd(k, ell) = 1, got k=%i, '
                         'ell=%i' % (k, ell))
    if not 0 <= h < N:
        raise ValueError('gap_count() needs 0 <= h < N, got h=%i' % h)
    sieve = check_sieve(sieve, N)
    p2 = sieve.primes(2, N - h)
    p2 = p2[p2 % ell == k % ell]
    return int(np.count_nonzero(sieve.is_prime_array(p2 + h)))


def hl_ratio(N, sieve=None, C0=None):
    """ G(N) divided by its conjectured asymptotic
    2 C0 N prod_{p | N, p > 2} (p - 1)/(p - 2) / (log N)^2.

    The midpoints of the constants are used; the ratio is a heuristic
    illustration, not a bound.
    """
    N = int(N)
    if N % 2 or N < HL_MIN_N:
        raise ValueError('hl_ratio() needs an even N >= %i, got %i' %
                         (HL_MIN_N, N))
    C0 = TWIN_PRIME_CONSTANT if C0 is None else C0
    G = goldbach_G(N, sieve)
    expected = 2 * C0.mid * N * singular_factor(N).mid / math.log(N) ** 2
    ratio = G / expected
    logger.debug('G(%i) = %i, ratio %.4f' % (N, G, ratio))
    return ratio
