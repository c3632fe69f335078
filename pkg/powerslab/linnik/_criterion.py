"""
The admissibility criterion for K powers of two, and the largest sieve
constant C1 that satisfies it.
"""

import math
import logging
from fractions import Fraction

from .. import config
from ..arith import Interval
from ._constants import LinnikConstants

logger = logging.getLogger(__name__)

MAX_K = 8
BISECT_BRACKET = (2.0, 20.0)
BISECT_MAX_ITER = 60


def _upper(x):
    return Interval(x.hi)


def _theta_factor(theta, constants, grh):
    theta = constants.default_theta(grh) if theta is None else Fraction(theta)
    if not 0 <= theta <= 1:
        raise ValueError('theta must be in [0, 1], got %s' % float(theta))
    return Interval.point(1 - theta)


def compute_C2prime(C1, grh, constants=None, theta=None):
    """ The constant C2' = (C1 - 2) R0 C0 / 2 + (1 - theta) log(2) / 2.

    With the default cut-off exponents this is (C1 - 2) R0 C0 / 2 plus
    log(2)/4 assuming GRH, or plus 5 log(2)/18 + epsilon log(2)/2
    unconditionally. The upper endpoints of R0 and C0 are used.

    Parameters:
        C1 (float): the sieve constant, at least 2.
        grh (bool): whether to assume GRH.
        constants (LinnikConstants, optional): the constants.
        theta (float or Fraction, optional): override the cut-off exponent.

    Returns:
        float (an upper bound)
    """
    constants = constants or LinnikConstants()
    if C1 < 2:
        raise ValueError('compute_C2prime() needs C1 >= 2, got %r' % C1)
    first = (Interval.point(C1) - 2) * _upper(constants.R0) * _upper(
        constants.C0) / 2
    second = _theta_factor(theta, constants, grh) * constants.log2 / 2
    return (first + second).hi


class CriterionResult:
    """ The evaluated criterion for K powers of two and a given C1.
    """

    def __init__(self, K, i, j, grh, C1, C2prime, lhs):
        self.K = K
        self.i = i
        self.j = j
        self.grh = grh
        self.C1 = C1
        self.C2prime = C2prime
        self.lhs = lhs

    @property
    def satisfied(self):
        return self.lhs < 1

    def __repr__(self):
        return ('<CriterionResult K=%i grh=%s C1=%g lhs=%.6f satisfied=%s>' %
                (self.K, self.grh, self.C1, self.lhs, self.satisfied))

    def as_dict(self):
        return dict(K=self.K, i=self.i, j=self.j, grh=self.grh, C1=self.C1,
                    C2prime=self.C2prime, lhs=self.lhs,
                    satisfied=self.satisfied)


def _check_K(K, lowest=2):
    if not isinstance(K, int) or K < lowest:
        raise ValueError('K must be an int >= %i, got %r' % (lowest, K))
    if K > MAX_K:
        raise ValueError('K=%i is not supported, A(k) data ends at k=4 '
                         '(K <= %i)' % (K, MAX_K))


def criterion_lhs(K, C1, grh, constants=None, theta=None):
    """ Evaluate sqrt(A(i) + C2' c1^(2i-2)) sqrt(A(j) + C2' c1^(2j-2))
    with i = ceil(K/2) and j = floor(K/2), using upper endpoints
    throughout. The criterion is satisfied when this is below 1.

    Returns:
        CriterionResult
    """
    _check_K(K)
    constants = constants or LinnikConstants()
    i, j = (K + 1) // 2, K // 2
    C2 = Interval(compute_C2prime(C1, grh, constants, theta))
    c1 = _upper(constants.c1(grh))

    def factor(n):
        return _upper(constants.A_brackets[n]) + C2 * c1 ** (2 * n - 2)

    if i == j:
        lhs = factor(i)
    else:
        lhs = factor(i).sqrt() * factor(j).sqrt()
    return CriterionResult(K, i, j, grh, C1, C2.hi, lhs.hi)


def boundary_C1(K, grh, constants=None, tol=None, theta=None):
    """ The largest C1 in [2, 20] for which the criterion holds, by
    bisection (the left side increases strictly with C1).

    Returns:
        float, or None when the criterion already fails at C1 = 2.
    """
    _check_K(K)
    constants = constants or LinnikConstants()
    tol = config.bisect_tol if tol is None else tol
    if tol <= 0:
        raise ValueError('tol must be positive')

    def ok(C1):
        return criterion_lhs(K, C1, grh, constants, theta).satisfied

    lo, hi = BISECT_BRACKET
    if not ok(lo):
        logger.warning('criterion fails at C1=2 for K=%i, grh=%s' % (K, grh))
        return None
    if ok(hi):
        logger.warning('criterion holds on the whole bracket for K=%i' % K)
        return hi
    for _ in range(BISECT_MAX_ITER):
        if hi - lo < tol:
            break
        mid = (lo + hi) / 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def max_C1(K, grh, constants=None, tol=None, theta=None):
    """ The largest admissible C1 for K = 3..8 powers of two.

    For K = 2 the criterion is not the binding route: the residue-class
    density bound of ``powerslab.romanov`` gives the admissible C1.
    """
    if K == 2:
        raise ValueError('max_C1() does not handle K=2, use the density '
                         'bound of powerslab.romanov (C1 <= 3.02), or '
                         'boundary_C1() for the criterion side')
    _check_K(K, 3)
    return boundary_C1(K, grh, constants, tol, theta)


def closed_form_C1(K, grh, constants=None, theta=None):
    """ The boundary C1 solved in closed form: for even K directly from
    C2' = (1 - A(K/2)) / c1^(K-2), for odd K from the quadratic in C2'
    obtained by squaring the criterion.
    """
    _check_K(K)
    constants = constants or LinnikConstants()
    i, j = (K + 1) // 2, K // 2
    c = constants.c1(grh).hi
    Ai, Aj = constants.A_brackets[i].hi, constants.A_brackets[j].hi
    if i == j:
        C2 = (1 - Ai) / c ** (K - 2)
    else:
        a, b = c ** (2 * i - 2), c ** (2 * j - 2)
        qa, qb, qc = a * b, Ai * b + Aj * a, Ai * Aj - 1
        C2 = (-qb + math.sqrt(qb * qb - 4 * qa * qc)) / (2 * qa)
    offset = compute_C2prime(2, grh, constants, theta)
    return 2 + 2 * (C2 - offset) / (constants.R0.hi * constants.C0.hi)
