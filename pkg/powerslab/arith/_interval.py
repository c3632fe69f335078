"""
Closed intervals of doubles with outward rounding.

Every endpoint is computed with a correctly rounded operation in the
appropriate direction (down for lower endpoints, up for upper ones), so
the exact result of an expression on the enclosed reals always lies in
the computed interval.
"""

import math
from fractions import Fraction

import gmpy2


def _ieee_context(rounding):
    ctx = gmpy2.ieee(64)
    ctx.round = rounding
    return ctx


# Double precision contexts that round towards -inf and +inf
_DOWN = _ieee_context(gmpy2.RoundDown)
_UP = _ieee_context(gmpy2.RoundUp)


def _exact(x):
    """ Convert an int or float to an mpfr without rounding.
    """
    if isinstance(x, int):
        return gmpy2.mpfr(x, max(53, abs(x).bit_length()))
    return gmpy2.mpfr(float(x), 53)


def _down(name, *args):
    return float(getattr(_DOWN, name)(*[_exact(a) for a in args]))


def _up(name, *args):
    return float(getattr(_UP, name)(*[_exact(a) for a in args]))


class Interval:
    """ A closed interval [lo, hi] of finite doubles.

    Supports ``+ - * /`` with other intervals, ints, floats and
    Fractions, negation, ``**`` with a nonnegative integer exponent,
    and ``sqrt()``. Results are rounded outward.

    Parameters:
        lo (float): the lower endpoint.
        hi (float, optional): the upper endpoint (default ``lo``).
    """

    __slots__ = ('_lo', '_hi')

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        if isinstance(lo, (int, Fraction)) or isinstance(hi, (int, Fraction)):
            # Go through point() to keep non-representable values enclosed
            lo, hi = Interval.point(lo).lo, Interval.point(hi).hi
        lo, hi = float(lo), float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError('Interval endpoints must be finite, got [%r, %r]'
                             % (lo, hi))
        if lo > hi:
            raise ValueError('Interval needs lo <= hi, got [%r, %r]' % (lo, hi))
        self._lo = lo
        self._hi = hi

    @classmethod
    def point(cls, x):
        """ The tightest interval containing the exact number x
        (int, float or Fraction).
        """
        if isinstance(x, Interval):
            return x
        if isinstance(x, Fraction):
            return cls.from_ratio(x.numerator, x.denominator)
        if isinstance(x, int):
            return cls(_down('add', x, 0), _up('add', x, 0))
        return cls(float(x), float(x))

    @classmethod
    def from_ratio(cls, num, den):
        """ The tightest interval containing the rational num / den.
        """
        if den == 0:
            raise ZeroDivisionError('Interval.from_ratio() with zero denominator')
        if den < 0:
            num, den = -num, -den
        return cls(_down('div', num, den), _up('div', num, den))

    @property
    def lo(self):
        """ The lower endpoint.
        """
        return self._lo

    @property
    def hi(self):
        """ The upper endpoint.
        """
        return self._hi

    @property
    def width(self):
        """ The width hi - lo, rounded up.
        """
        return _up('sub', self._hi, self._lo)

    @property
    def mid(self):
        """ The midpoint (approximate, for reporting).
        """
        return self._lo + (self._hi - self._lo) / 2

    def contains(self, x):
        """ Whether the exact number x, or the whole interval x, lies
        inside this interval.
        """
        if isinstance(x, Interval):
            return self._lo <= x._lo and x._hi <= self._hi
        return self._lo <= x <= self._hi

    __contains__ = contains

    def hull(self, other):
        """ The smallest interval containing both this and other.
        """
        other = Interval.point(other)
        return Interval(min(self._lo, other._lo), max(self._hi, other._hi))

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self._lo == other._lo and self._hi == other._hi

    def __hash__(self):
        return hash((self._lo, self._hi))

    def __repr__(self):
        return 'Interval(%r, %r)' % (self._lo, self._hi)

    def __str__(self):
        return '[%.17g, %.17g]' % (self._lo, self._hi)

    # --- arithmetic

    def __neg__(self):
        return Interval(-self._hi, -self._lo)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, (Interval, int, float, Fraction)):
            return NotImplemented
        other = Interval.point(other)
        return Interval(_down('add', self._lo, other._lo),
                        _up('add', self._hi, other._hi))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Interval, int, float, Fraction)):
            return NotImplemented
        other = Interval.point(other)
        return Interval(_down('sub', self._lo, other._hi),
                        _up('sub', self._hi, other._lo))

    def __rsub__(self, other):
        if not isinstance(other, (int, float, Fraction)):
            return NotImplemented
        return Interval.point(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Interval, int, float, Fraction)):
            return NotImplemented
        other = Interval.point(other)
        pairs = [(a, b) for a in (self._lo, self._hi)
                 for b in (other._lo, other._hi)]
        return Interval(min(_down('mul', a, b) for a, b in pairs),
                        max(_up('mul', a, b) for a, b in pairs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (Interval, int, float, Fraction)):
            return NotImplemented
        other = Interval.point(other)
        if other._lo <= 0 <= other._hi:
            raise ZeroDivisionError('Interval division by %s, which contains 0'
                                    % other)
        pairs = [(a, b) for a in (self._lo, self._hi)
                 for b in (other._lo, other._hi)]
        return Interval(min(_down('div', a, b) for a, b in pairs),
                        max(_up('div', a, b) for a, b in pairs))

    def __rtruediv__(self, other):
        if not isinstance(other, (int, float, Fraction)):
            return NotImplemented
        return Interval.point(other) / self

    def __pow__(self, n):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError('Interval power needs a nonnegative int, got %r'
                             % (n, ))
        if n == 0:
            return Interval(1.0, 1.0)
        lo, hi = self._lo, self._hi
        if n % 2 == 0:
            # Even power: work on |x|
            if lo >= 0:
                a, b = lo, hi
            elif hi <= 0:
                a, b = -hi, -lo
            else:
                a, b = 0.0, max(-lo, hi)
            return Interval(_pos_power(a, n, 'down'), _pos_power(b, n, 'up'))
        # Odd power is monotone increasing
        lo_p = (_pos_power(lo, n, 'down') if lo >= 0
                else -_pos_power(-lo, n, 'up'))
        hi_p = (_pos_power(hi, n, 'up') if hi >= 0
                else -_pos_power(-hi, n, 'down'))
        return Interval(lo_p, hi_p)

    def sqrt(self):
        """ The square root of this interval (which must be nonnegative).
        """
        if self._lo < 0:
            raise ValueError('Interval.sqrt() of negative interval %s' % self)
        return Interval(_down('sqrt', self._lo), _up('sqrt', self._hi))

    @classmethod
    def log(cls, x):
        """ An enclosure of the natural logarithm of a positive int or float.
        """
        if x <= 0:
            raise ValueError('Interval.log() needs a positive number')
        return cls(_down('log', x), _up('log', x))


def _pos_power(x, n, direction):
    # Repeated rounding in one direction stays a bound for x >= 0
    func = _down if direction == 'down' else _up
    result = 1.0
    for _ in range(n):
        result = func('mul', result, x)
    return result


LOG2 = Interval.log(2)
