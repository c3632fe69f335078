"""
Decompositions of even numbers as two primes plus two (or 2k) powers of
two, assembled from two representable odd parts n = j + (n - j).
"""

import logging
from itertools import combinations_with_replacement

import numpy as np

from ._counts import check_sieve, rep_counts, _check_k_powers

logger = logging.getLogger(__name__)


def _first_rep(j, k_powers, sieve):
    # The representation of j with the lexicographically smallest exponents
    exponents = range(max(j - 2, 1).bit_length())
    for combo in combinations_with_replacement(exponents, k_powers):
        p = j - sum(1 << a for a in combo)
        if p >= 2 and sieve.is_prime(p):
            return p, combo
    return None


def verify_k2_decomposition(n, sieve=None, k_powers=1):
    """ Find a decomposition n = p1 + p2 + (2^a1 + ...) + (2^a2 + ...)
    by splitting the even n into two odd parts that are each a prime
    plus k_powers powers of two.

    Returns:
        The witness ``(p1, p2, a1, a2)``, or None when there is none. For
        k_powers > 1, a1 and a2 are tuples of exponents.
    """
    n = int(n)
    if n % 2 or n < 8:
        raise ValueError('verify_k2_decomposition() needs an even n >= 8, '
                         'got %i' % n)
    _check_k_powers(k_powers)
    sieve = check_sieve(sieve, n)
    for j in range(3, n - 2, 2):
        first = _first_rep(j, k_powers, sieve)
        if first is None:
            continue
        second = _first_rep(n - j, k_powers, sieve)
        if second is None:
            continue
        (p1, a1), (p2, a2) = first, second
        if k_powers == 1:
            a1, a2 = a1[0], a2[0]
        return p1, p2, a1, a2
    return None


def witness_total(witness):
    """ The number that a witness of verify_k2_decomposition() sums to.
    """
    p1, p2, a1, a2 = witness
    exps = []
    for part in (a1, a2):
        exps.extend(part if isinstance(part, tuple) else (part, ))
    return p1 + p2 + sum(1 << a for a in exps)


class ScanResult:
    """ The outcome of scan_k2_decompositions().
    """

    def __init__(self, lo, hi, k_powers, checked, failures):
        self.lo = lo
        self.hi = hi
        self.k_powers = k_powers
        self.checked = checked
        self.failures = failures

    def __repr__(self):
        return '<ScanResult [%i, %i] checked=%i failures=%i>' % (
            self.lo, self.hi, self.checked, len(self.failures))

    def as_dict(self):
        return dict(lo=self.lo, hi=self.hi, k_powers=self.k_powers,
                    checked=self.checked, failures=list(self.failures))


def scan_k2_decompositions(lo, hi, sieve=None, k_powers=1):
    """ Check all even n in [lo, hi] (lo >= 8) for a decomposition as in
    verify_k2_decomposition(), and report the ones without.

    The odd parts j = 3, 5, 7, ... are tried for all pending n at once;
    an n fails once j exceeds n - 3.

    Returns:
        ScanResult
    """
    lo, hi = int(lo), int(hi)
    if lo < 8 or hi < lo:
        raise ValueError('scan_k2_decompositions() needs 8 <= lo <= hi, '
                         'got [%i, %i]' % (lo, hi))
    _check_k_powers(k_powers)
    representable = rep_counts(hi, k_powers, check_sieve(sieve, hi)) > 0
    pending = np.arange(lo + lo % 2, hi + 1, 2, dtype=np.int64)
    checked = len(pending)
    failures = []
    j = 3
    while len(pending):
        exhausted = pending - j < 3
        if exhausted.any():
            failures.extend(pending[exhausted].tolist())
            pending = pending[~exhausted]
        if representable[j] and len(pending):
            pending = pending[~representable[pending - j]]
        j += 2
    if failures:
        logger.warning('%i even numbers in [%i, %i] without decomposition' %
                       (len(failures), lo, hi))
    logger.info('scanned %i even numbers in [%i, %i]' % (checked, lo, hi))
    return ScanResult(lo, hi, k_powers, checked, sorted(failures))
