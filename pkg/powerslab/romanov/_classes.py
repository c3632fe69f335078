"""
Per residue class statistics: the valid exponents alpha, the first moment
N1, the pair sum T, and the ratio D of second to first moment.
"""

import math
import logging

import numpy as np

from ..arith import LOG2

logger = logging.getLogger(__name__)

_POPCOUNT8 = np.array([bin(i).count('1') for i in range(256)], dtype=np.int64)


def popcount(masks):
    """ Number of set bits of each element of an unsigned int array.
    """
    masks = np.asarray(masks, dtype=np.uint64)
    result = np.zeros(masks.shape, dtype=np.int64)
    for shift in range(0, 64, 8):
        result += _POPCOUNT8[(masks >> np.uint64(shift)) & np.uint64(0xff)]
    return result


def coprime_table(ell, primes):
    """ Bool array of length ell, True where gcd(x, ell) = 1.
    """
    table = np.ones(ell, dtype=bool)
    for p in primes:
        table[::p] = False
    return table


def valid_alphas(k, config):
    """ The m-bit mask of the exponents alpha for which the class k holds
    a representation kappa + 2^alpha with gcd(kappa, ell) = 1. kappa is
    determined by alpha, so N1 is the popcount of the mask.
    """
    if not 0 <= k < config.ell:
        raise ValueError('residue %i outside [0, %i)' % (k, config.ell))
    mask = 0
    for alpha in range(config.m):
        if math.gcd((k - 2 ** alpha) % config.ell, config.ell) == 1:
            mask |= 1 << alpha
    return mask


def class_masks(ks, m, coprime):
    """ Vectorised valid_alphas for an int64 array of residues.
    """
    ell = 2 ** m - 1
    masks = np.zeros(len(ks), dtype=np.uint64)
    for alpha in range(m):
        valid = coprime[(ks - (1 << alpha)) % ell]
        masks |= valid.astype(np.uint64) << np.uint64(alpha)
    return masks


def shift_pair_counts(masks, m):
    """ For each mask, the number of ordered pairs (a1, a2) of set bits
    with a1 - a2 = delta (mod m), for delta = 0..m-1. Shape (n, m).
    """
    masks = np.asarray(masks, dtype=np.uint64)
    full = np.uint64((1 << m) - 1)
    counts = np.zeros((len(masks), m), dtype=np.int64)
    counts[:, 0] = popcount(masks)
    for delta in range(1, m):
        rotated = ((masks << np.uint64(delta)) |
                   (masks >> np.uint64(m - delta))) & full
        counts[:, delta] = popcount(masks & rotated)
    return counts


def gcd_pair_counts(masks, m):
    """ The ordered pair counts grouped by g = gcd(a1 - a2, m), as a
    dict divisor -> int64 array.
    """
    shifts = shift_pair_counts(masks, m)
    grouped = {}
    for delta in range(m):
        g = math.gcd(delta, m)
        if g in grouped:
            grouped[g] = grouped[g] + shifts[:, delta]
        else:
            grouped[g] = shifts[:, delta].copy()
    return grouped


def T_from_pair_counts(grouped, config):
    """ T = sum_g S(g) * pairs_g, accumulated in ascending divisor order.
    """
    T = None
    for g in sorted(grouped):
        term = config.S_table[g] * grouped[g]
        T = term if T is None else T + term
    return T


def class_T(mask, config):
    """ T = sum over ordered pairs (a1, a2) of alphas in the mask of
    S(gcd(a1 - a2, m)), the diagonal included.
    """
    grouped = gcd_pair_counts(np.array([mask], dtype=np.uint64), config.m)
    return float(T_from_pair_counts(grouped, config)[0])


def D_coefficient(config):
    """ The factor C0 C1 C3 / (m log 2) of T / N1 in D, with the upper C0
    and the lower log 2 so that D is not underestimated.
    """
    return config.C0.hi * config.C1 * config.C3 / (config.m * LOG2.lo)


def pintz_density_factor(D):
    """ f(D) = (ceil(D) + floor(D) - D) / (ceil(D) floor(D)), the
    fraction of a nonnegative integer sequence's mass M guaranteed to sit
    on positive entries when sum b^2 <= D M.
    """
    if not D >= 1:
        raise ValueError('pintz_density_factor() needs D >= 1, got %r' % D)
    hi, lo = math.ceil(D), math.floor(D)
    return (hi + lo - D) / (hi * lo)


def density_factor_array(D):
    """ Vectorised pintz_density_factor.
    """
    D = np.asarray(D, dtype=np.float64)
    hi, lo = np.ceil(D), np.floor(D)
    return (hi + lo - D) / (hi * lo)


class ClassStats:
    """ Statistics of a single residue class k modulo ell.
    """

    def __init__(self, k, alpha_mask, N1, T, D, f_D, share):
        self.k = k
        self.alpha_mask = alpha_mask
        self.N1 = N1
        self.T = T
        self.D = D
        self.f_D = f_D
        self.share = share

    def __repr__(self):
        return '<ClassStats k=%i N1=%i D=%.4f share=%.3g>' % (
            self.k, self.N1, self.D, self.share)


def class_D(stats, config):
    """ D = 1 + C0 C1 C3 T / (m log(2) N1), the bound on the ratio of the
    second to the first moment in the class.
    """
    if stats.N1 < 1:
        raise ValueError('class_D() needs N1 >= 1, the class is empty')
    return 1 + D_coefficient(config) * stats.T / stats.N1


def class_stats(k, config):
    """ All statistics of the class k. Empty classes get share 0.
    """
    mask = valid_alphas(k, config)
    N1 = bin(mask).count('1')
    stats = ClassStats(k, mask, N1, 0.0, 1.0, 1.0, 0.0)
    if N1:
        stats.T = class_T(mask, config)
        stats.D = class_D(stats, config)
        stats.f_D = pintz_density_factor(stats.D)
        stats.share = stats.f_D * N1 / (config.phi_ell * config.m * LOG2.hi)
    return stats
