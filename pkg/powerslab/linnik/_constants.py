"""
The analytic constants entering the admissibility criterion.
"""

from fractions import Fraction

from .. import config
from ..arith import Interval, LOG2, TWIN_PRIME_CONSTANT
from ..spectra import PUBLISHED_BRACKETS


def _decimal(lo, hi=None):
    return Interval(Fraction(lo), Fraction(hi or lo))


DEFAULT_R0 = _decimal('1.93642', '1.93656')
DEFAULT_C1_GRH = _decimal('0.7163436')
DEFAULT_C1_UNCOND = _decimal('0.7894009')


class LinnikConstants:
    """ The constants of the criterion, as intervals.

    Parameters:
        C0 (Interval): the twin-prime constant.
        R0 (Interval): the constant of the prime-gap sum.
        c1_grh (Interval): exponential-sum bound assuming GRH.
        c1_uncond (Interval): unconditional exponential-sum bound.
        A_brackets (dict): k -> Interval enclosing A(k), for k in 1..4.
        epsilon (float): the epsilon of the unconditional cut-off.

    All parameters are optional, the defaults are the published values
    and the ``epsilon`` config option.
    """

    def __init__(self, C0=None, R0=None, c1_grh=None, c1_uncond=None,
                 A_brackets=None, epsilon=None):
        self.C0 = TWIN_PRIME_CONSTANT if C0 is None else C0
        self.R0 = DEFAULT_R0 if R0 is None else R0
        self.c1_grh = DEFAULT_C1_GRH if c1_grh is None else c1_grh
        self.c1_uncond = DEFAULT_C1_UNCOND if c1_uncond is None else c1_uncond
        self.A_brackets = dict(PUBLISHED_BRACKETS if A_brackets is None
                               else A_brackets)
        self.epsilon = config.epsilon if epsilon is None else float(epsilon)
        self.log2 = LOG2
        his = [self.A_brackets[k].hi for k in sorted(self.A_brackets)]
        if his != sorted(his, reverse=True):
            raise ValueError('A(k) brackets must decrease in k')

    def __repr__(self):
        return '<LinnikConstants C0=%s R0=%s epsilon=%g>' % (
            self.C0, self.R0, self.epsilon)

    def c1(self, grh):
        return self.c1_grh if grh else self.c1_uncond

    def default_theta(self, grh):
        """ The cut-off exponent log P / log n: 1/2 assuming GRH, and
        4/9 - epsilon unconditionally.
        """
        if grh:
            return Fraction(1, 2)
        return Fraction(4, 9) - Fraction(self.epsilon)

    def as_dict(self):
        d = dict(C0_lo=self.C0.lo, C0_hi=self.C0.hi,
                 R0_lo=self.R0.lo, R0_hi=self.R0.hi,
                 c1_grh=self.c1_grh.hi, c1_uncond=self.c1_uncond.hi,
                 epsilon=self.epsilon)
        for k in sorted(self.A_brackets):
            d['A%i_lo' % k] = self.A_brackets[k].lo
            d['A%i_hi' % k] = self.A_brackets[k].hi
        return d
