"""
The twin-prime constant and the singular series sigma(m).
"""

import logging

import gmpy2

from .. import config
from ._interval import Interval, _DOWN, _UP, _exact
from ._sieve import PrimeSieve
from ._factor import factorize

logger = logging.getLogger(__name__)


# Enclosure of prod_{p>2} (1 - 1/(p-1)^2) = 0.66016181584686957392...
TWIN_PRIME_CONSTANT = Interval(0.6601618158468695, 0.6601618158468697)


def compute_C0(prime_limit=None):
    """ Rigorous enclosure of the twin-prime constant C0.

    The product over the odd primes p < prime_limit is evaluated with
    directed rounding. The lower endpoint is multiplied by the tail factor
    1 - 1/(prime_limit - 2), which bounds the remaining product from below
    because sum_{n >= P} 1/(n-1)^2 < 1/(P-2).

    Parameters:
        prime_limit (int, optional): the prime cut-off P >= 5. Default
            from the ``prime_limit`` config option.

    Returns:
        Interval
    """
    P = config.prime_limit if prime_limit is None else int(prime_limit)
    if P < 5:
        raise ValueError('compute_C0() needs prime_limit >= 5, got %i' % P)
    primes = PrimeSieve(P - 1).primes(3)
    logger.info('computing C0 over %i primes below %i' % (len(primes), P))
    lo = hi = gmpy2.mpfr(1)
    for p in primes.tolist():
        # 1 - 1/(p-1)^2 = p(p-2) / (p-1)^2, numerator and denominator exact
        num, den = _exact(p * (p - 2)), _exact((p - 1) * (p - 1))
        lo = _DOWN.mul(lo, _DOWN.div(num, den))
        hi = _UP.mul(hi, _UP.div(num, den))
    tail = _DOWN.sub(_exact(1), _UP.div(_exact(1), _exact(P - 2)))
    return Interval(float(_DOWN.mul(lo, tail)), float(hi))


def singular_factor(m, cache=None):
    """ The product of (p-1)/(p-2) over the odd primes p dividing m,
    as an Interval. The prime 2 is excluded, where the factor is undefined.
    """
    m = abs(int(m))
    if m == 0:
        raise ValueError('singular_factor() is undefined for m = 0')
    while m % 2 == 0:
        m //= 2
    result = Interval(1.0)
    for p, _ in factorize(m, cache):
        result = result * Interval.from_ratio(p - 1, p - 2)
    return result


def sigma_singular(m, C0=None, cache=None):
    """ The singular series sigma(m) = 2 C0 prod_{p | m, p odd} (p-1)/(p-2).

    Parameters:
        m (int): a nonzero integer; sigma(m) = sigma(-m) = sigma(2m).
        C0 (Interval, optional): the twin-prime constant enclosure.
        cache (FactorCache, optional): cache for the factorization of m.

    Returns:
        Interval
    """
    if int(m) == 0:
        raise ValueError('sigma_singular() is undefined for m = 0')
    C0 = TWIN_PRIME_CONSTANT if C0 is None else C0
    return 2 * C0 * singular_factor(m, cache)
