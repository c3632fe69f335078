"""
Parameters of the residue-class density bound modulo 2^m - 1.
"""

import math
import logging

from ..arith import TWIN_PRIME_CONSTANT, factorize, euler_phi

logger = logging.getLogger(__name__)

DEFAULT_M = 24
DEFAULT_C3 = 3.73922

# Upper bounds S(t) for the divisors t of 24
DEFAULT_S_TABLE = {1: 1.01609, 2: 1.04568, 3: 1.02545, 4: 1.06517,
                   6: 1.08269, 8: 1.06864, 12: 1.12771, 24: 1.14370}

MAX_M = 30


class ConfigError(Exception):
    """ Raised when a residue-class configuration is incomplete.
    """
    pass


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


class RomanovConfig:
    """ Parameters of the density bound for the modulus ell = 2^m - 1.

    Parameters:
        C1 (float): the sieve constant for prime pairs with given gap.
        m (int): the exponent, 2..30 (default 24).
        C3 (float): the constant of the second moment (required if m != 24).
        S_table (dict): divisor t of m -> upper bound of S(t) (required
            if m != 24).
        C0 (Interval, optional): the twin-prime constant.
    """

    def __init__(self, C1, m=DEFAULT_M, C3=None, S_table=None, C0=None):
        m = int(m)
        if not 2 <= m <= MAX_M:
            raise ValueError('m must be in 2..%i, got %i' % (MAX_M, m))
        if not C1 > 0:
            raise ValueError('C1 must be positive, got %r' % C1)
        if m != DEFAULT_M:
            if S_table is None:
                raise ConfigError('No S-table shipped for m=%i, '
                                  'provide S_table' % m)
            if C3 is None:
                raise ConfigError('No C3 value shipped for m=%i, provide C3' % m)
        S_table = dict(DEFAULT_S_TABLE if S_table is None else S_table)
        missing = [t for t in divisors(m) if t not in S_table]
        if missing:
            raise ConfigError('S-table for m=%i misses the divisors %s'
                              % (m, missing))
        extra = [t for t in S_table if t not in divisors(m)]
        if extra:
            raise ConfigError('S-table keys %s are not divisors of m=%i'
                              % (extra, m))
        self.m = m
        self.ell = 2 ** m - 1
        self.C1 = float(C1)
        self.C3 = DEFAULT_C3 if C3 is None else float(C3)
        self.S_table = {t: float(S_table[t]) for t in divisors(m)}
        self.C0 = TWIN_PRIME_CONSTANT if C0 is None else C0
        self.ell_factors = factorize(self.ell)
        self.phi_ell = euler_phi(self.ell_factors)

    def __repr__(self):
        return '<RomanovConfig m=%i C1=%g C3=%g>' % (self.m, self.C1, self.C3)

    def with_C1(self, C1):
        """ A copy of this config with another C1.
        """
        return RomanovConfig(C1, self.m, self.C3, self.S_table, self.C0)

    def S(self, delta):
        """ The S-table bound for an exponent difference delta, that is
        S(gcd(delta, m)) with gcd(0, m) = m.
        """
        return self.S_table[math.gcd(delta, self.m)]

    def as_dict(self):
        return dict(m=self.m, ell=self.ell, C1=self.C1, C3=self.C3,
                    phi_ell=self.phi_ell,
                    S_table={str(t): s for t, s in self.S_table.items()})
