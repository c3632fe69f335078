"""
Distributions of sums of k powers of two.
"""

from collections import Counter

import numpy as np

from .. import config


# Largest truncation L per k, keeps every value below 2^64 and the
# number of correlation pairs manageable
MAX_L = {1: 64, 2: 48, 3: 32, 4: 24}

# Default truncation per k, overridden by the ``ak_truncation`` config
# option. Below 2^26 the singular series is table driven; k=3 at its cap
# takes minutes.
DEFAULT_L = {1: 64, 2: 24, 3: 24, 4: 24}


def default_L(k):
    """ The default truncation for k: the k-th entry of the
    ``ak_truncation`` config option if given, else ``DEFAULT_L[k]``.
    """
    values = config.ak_truncation
    if not values:
        return DEFAULT_L.get(k)
    if len(values) != len(MAX_L):
        raise ValueError('ak_truncation needs one L per k = 1..%i, got %r'
                         % (len(MAX_L), values))
    return values[k - 1] if k in MAX_L else None


# Values below this fit in int64 with room for differences
INT64_SAFE = 2 ** 62


class PowerSumDistribution:
    """ The multiset of values 2^a1 + ... + 2^ak with every ai in 0..L,
    as a mapping from value to multiplicity (number of ordered tuples).
    """

    def __init__(self, k, L, counts):
        self._k = k
        self._L = L
        self._counts = dict(sorted(counts.items()))

    def __repr__(self):
        return '<PowerSumDistribution k=%i L=%i with %i values>' % (
            self._k, self._L, len(self._counts))

    @property
    def k(self):
        return self._k

    @property
    def L(self):
        return self._L

    @property
    def counts(self):
        """ Dict value -> multiplicity, ascending by value.
        """
        return self._counts

    def __len__(self):
        return len(self._counts)

    def __getitem__(self, value):
        return self._counts.get(value, 0)

    def total(self):
        """ The total multiplicity, (L+1)^k.
        """
        return sum(self._counts.values())

    def collisions(self):
        """ Sum of squared multiplicities: the number of tuple pairs with
        difference zero.
        """
        return sum(c * c for c in self._counts.values())

    @property
    def max_value(self):
        return next(reversed(self._counts))

    def fits_int64(self):
        return self.max_value < INT64_SAFE

    def as_arrays(self):
        """ The (values, multiplicities) as int64 arrays, ascending.
        """
        if not self.fits_int64():
            raise ValueError('Values of k=%i, L=%i do not fit in int64'
                             % (self._k, self._L))
        values = np.fromiter(self._counts.keys(), dtype=np.int64,
                             count=len(self._counts))
        mults = np.fromiter(self._counts.values(), dtype=np.int64,
                            count=len(self._counts))
        return values, mults


def check_k_L(k, L):
    if not isinstance(k, int) or k not in MAX_L:
        raise ValueError('k must be in 1..4, got %r (k >= 5 is not supported)'
                         % (k, ))
    if not isinstance(L, int) or L < 0:
        raise ValueError('L must be a nonnegative int, got %r' % (L, ))
    if L > MAX_L[k]:
        raise ValueError('L=%i exceeds the cap %i for k=%i' % (L, MAX_L[k], k))


def build_distribution(k, L=None):
    """ Build the distribution of 2^a1 + ... + 2^ak over a in {0..L}^k by
    iterated self-convolution.

    Parameters:
        k (int): the number of powers, 1..4.
        L (int, optional): the largest exponent, up to 64, 48, 32, 24 for
            k = 1, 2, 3, 4. Default from ``default_L()``.

    Returns:
        PowerSumDistribution
    """
    L = default_L(k) if L is None else L
    check_k_L(k, L)
    powers = [2 ** a for a in range(L + 1)]
    counts = Counter({0: 1})
    for _ in range(k):
        new = Counter()
        for value, mult in counts.items():
            for p in powers:
                new[value + p] += mult
        counts = new
    return PowerSumDistribution(k, L, counts)
