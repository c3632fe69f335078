"""
Certified factorization of integers below 2^64, and a persistent text
cache of factorizations.
"""

import os
import random
import logging
import threading

import numpy as np
import gmpy2

from ._sieve import PrimeSieve

logger = logging.getLogger(__name__)

MAX_N = 2 ** 64

# Trial division bound; cofactors below its square are prime
SMALL_LIMIT = 10 ** 6

# Strong-probable-prime bases that are deterministic for all n < 2^64
PRP_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_small_primes = None
_small_primes_lock = threading.Lock()


def _get_small_primes():
    global _small_primes
    with _small_primes_lock:
        if _small_primes is None:
            primes = PrimeSieve(SMALL_LIMIT).primes()
            _small_primes = primes.astype(np.uint64)
    return _small_primes


def is_prime(n):
    """ Deterministic primality test for 0 <= n < 2^64.
    """
    n = int(n)
    if n < 0 or n >= MAX_N:
        raise ValueError('is_prime() supports 0 <= n < 2^64, got %i' % n)
    if n < 2:
        return False
    for p in PRP_BASES:
        if n % p == 0:
            return n == p
    return all(gmpy2.is_strong_prp(n, a) for a in PRP_BASES)


class FactorList:
    """ The prime factorization of a positive integer.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs with strictly
    increasing primes; iterating a FactorList yields these pairs.
    """

    __slots__ = ('_n', '_factors')

    def __init__(self, n, factors):
        self._n = int(n)
        self._factors = tuple((int(p), int(e)) for p, e in factors)
        primes = [p for p, _ in self._factors]
        if primes != sorted(set(primes)):
            raise ValueError('FactorList primes must be strictly increasing')
        product = 1
        for p, e in self._factors:
            if e < 1:
                raise ValueError('FactorList exponents must be positive')
            product *= p ** e
        if product != self._n:
            raise ValueError('Factors of %i multiply to %i' % (self._n, product))

    @property
    def n(self):
        return self._n

    @property
    def factors(self):
        return self._factors

    @property
    def primes(self):
        """ The distinct primes, ascending.
        """
        return tuple(p for p, _ in self._factors)

    def __iter__(self):
        return iter(self._factors)

    def __len__(self):
        return len(self._factors)

    def __eq__(self, other):
        if not isinstance(other, FactorList):
            return NotImplemented
        return self._n == other._n and self._factors == other._factors

    def __hash__(self):
        return hash((self._n, self._factors))

    def __repr__(self):
        return 'FactorList(%i, %r)' % (self._n, list(self._factors))

    def __str__(self):
        """ The cache-file form, e.g. ``63: 3^2 7^1``.
        """
        parts = ['%i^%i' % pe for pe in self._factors]
        return ('%i: %s' % (self._n, ' '.join(parts))).rstrip()

    @classmethod
    def parse(cls, line):
        """ Parse the cache-file form produced by ``str()``. The primes are
        re-certified, so a tampered line raises ValueError.
        """
        head, _, tail = line.partition(':')
        if not _:
            raise ValueError('Missing ":" in factor line %r' % line)
        factors = []
        for part in tail.split():
            p, _, e = part.partition('^')
            factors.append((int(p), int(e or 1)))
        result = cls(int(head), factors)
        for p in result.primes:
            if not is_prime(p):
                raise ValueError('%i in factor line is not prime' % p)
        return result


def euler_phi(n):
    """ Euler's totient of n (an int or a FactorList).
    """
    fl = n if isinstance(n, FactorList) else factorize(n)
    phi = fl.n
    for p, _ in fl:
        phi = phi // p * (p - 1)
    return phi


def _brent_split(n, rng):
    """ Find a nontrivial factor of the odd composite n (Pollard rho with
    Brent's cycle detection and batched gcds).
    """
    n = gmpy2.mpz(n)
    while True:
        y = gmpy2.mpz(rng.randrange(1, int(n)))
        c = gmpy2.mpz(rng.randrange(1, int(n)))
        batch = 128
        g = q = gmpy2.mpz(1)
        r = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gmpy2.gcd(q, n)
                k += batch
            r *= 2
        if g == n:
            # The batch overshot, redo it one step at a time
            while True:
                ys = (ys * ys + c) % n
                g = gmpy2.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return int(g)
        logger.debug('rho cycle without factor for %i, new parameters' % n)


def _factor_large(n, out):
    # n has no prime factor below SMALL_LIMIT
    if n == 1:
        return
    if n < SMALL_LIMIT * SMALL_LIMIT or is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_split(n, random.Random(n))
    _factor_large(d, out)
    _factor_large(n // d, out)


def factorize(n, cache=None):
    """ Certified prime factorization of 1 <= n < 2^64.

    Trial division by the primes below 10^6, then Pollard-Brent with a
    seed derived from n, so the result is deterministic. Every reported
    prime passes a deterministic strong-probable-prime test.

    Parameters:
        n (int): the integer to factor.
        cache (FactorCache, optional): consulted first and updated after.

    Returns:
        FactorList
    """
    n = int(n)
    if n < 1:
        raise ValueError('factorize() needs n >= 1, got %i' % n)
    if n >= MAX_N:
        raise ValueError('factorize() supports n < 2^64, got %i' % n)
    if cache is not None:
        result = cache.get(n)
        if result is not None:
            return result

    found = {}
    rest = n
    small = _get_small_primes()
    hits = small[np.uint64(n) % small == 0]
    for p in hits.tolist():
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        found[p] = e
    _factor_large(rest, found)
    result = FactorList(n, sorted(found.items()))

    if cache is not None:
        cache.put(result)
    return result


class FactorCache:
    """ A thread-safe store of factorizations, persisted as a text file
    with one ``n: p1^e1 p2^e2 ...`` line per entry, sorted by n.

    Flushing merges with whatever is on disk and writes atomically, so
    repeated flushes (also from other processes) are idempotent.

    Parameters:
        directory (str): the directory holding ``factors.txt``.
    """

    FILENAME = 'factors.txt'

    def __init__(self, directory):
        self._dir = directory
        self._lock = threading.Lock()
        self._entries = {}
        self._dirty = False
        self._load(self._read_file())

    def __repr__(self):
        return '<FactorCache with %i entries in %r>' % (len(self), self._dir)

    def __len__(self):
        with self._lock:
            return len(self._entries)

    def __contains__(self, n):
        with self._lock:
            return n in self._entries

    @property
    def filename(self):
        return os.path.join(self._dir, self.FILENAME)

    def get(self, n):
        """ Get the FactorList for n, or None.
        """
        with self._lock:
            return self._entries.get(n)

    def put(self, factor_list):
        """ Store a FactorList (a no-op if n is already present).
        """
        with self._lock:
            if factor_list.n not in self._entries:
                self._entries[factor_list.n] = factor_list
                self._dirty = True

    def _read_file(self):
        if not os.path.isfile(self.filename):
            return []
        try:
            with open(self.filename, 'rb') as f:
                return f.read().decode().splitlines()
        except OSError as err:
            logger.warning('Could not read factor cache %r: %s' %
                           (self.filename, err))
            return []

    def _load(self, lines):
        count = 0
        for line in lines:
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            try:
                fl = FactorList.parse(line)
            except ValueError as err:
                logger.warning('Ignoring bad factor cache line %r: %s' %
                               (line, err))
                continue
            with self._lock:
                self._entries.setdefault(fl.n, fl)
            count += 1
        if count:
            logger.info('loaded %i factorizations from %s' %
                        (count, self.filename))

    def flush(self):
        """ Write the cache to disk if anything was added.
        """
        with self._lock:
            if not self._dirty:
                return False
        self._load(self._read_file())  # merge what others wrote
        with self._lock:
            text = ''.join(str(self._entries[n]) + '\n'
                           for n in sorted(self._entries))
            os.makedirs(self._dir, exist_ok=True)
            tmp = self.filename + '.%i.tmp' % os.getpid()
            with open(tmp, 'wb') as f:
                f.write(text.encode())
            os.replace(tmp, self.filename)
            self._dirty = False
            logger.info('saved %i factorizations to %s' %
                        (len(self._entries), self.filename))
        return True
