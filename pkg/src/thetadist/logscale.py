"""Signed log-scale reals for bound values far beyond any float range.

A value is carried as (sign, ln|value|) with the log stored as a 128-bit
mpmath float.  Addition of same-sign values goes through log-sum-exp;
multiplication and powers act directly on the logs.
"""

from __future__ import annotations

import mpmath as mp

from .errors import InvalidInput

_LOG_BITS = 128


def _mpf(x):
    with mp.workprec(_LOG_BITS):
        return mp.mpf(x)


class LogScaledReal:
    """A real number represented as sign and natural log of magnitude."""

    __slots__ = ("sign", "log_magnitude")

    def __init__(self, sign: int, log_magnitude=None):
        if sign not in (-1, 0, 1):
            raise InvalidInput("sign must be -1, 0 or +1")
        self.sign = sign
        if sign == 0:
            self.log_magnitude = None
        else:
            if log_magnitude is None:
                raise InvalidInput("nonzero value needs a log magnitude")
            self.log_magnitude = _mpf(log_magnitude)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def one(cls):
        return cls(1, 0)

    @classmethod
    def from_int(cls, n: int):
        if n == 0:
            return cls.zero()
        with mp.workprec(_LOG_BITS + 64):
            return cls(1 if n > 0 else -1, mp.log(abs(mp.mpf(n))))

    @classmethod
    def from_real(cls, x):
        with mp.workprec(_LOG_BITS):
            x = mp.mpf(x)
            if x == 0:
                return cls.zero()
            return cls(1 if x > 0 else -1, mp.log(abs(x)))

    @classmethod
    def exp_of(cls, ln_value, sign: int = 1):
        """The value sign * exp(ln_value) without ever forming it."""
        return cls(sign, ln_value)

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other):
        other = self._coerce(other)
        if self.sign == 0 or other.sign == 0:
            return LogScaledReal.zero()
        with mp.workprec(_LOG_BITS):
            return LogScaledReal(
                self.sign * other.sign, self.log_magnitude + other.log_magnitude
            )

    __rmul__ = __mul__

    def __add__(self, other):
        other = self._coerce(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        if self.sign != other.sign:
            raise InvalidInput("log-scale addition requires matching signs")
        with mp.workprec(_LOG_BITS):
            a, b = self.log_magnitude, other.log_magnitude
            hi, lo = (a, b) if a >= b else (b, a)
            return LogScaledReal(self.sign, hi + mp.log1p(mp.exp(lo - hi)))

    __radd__ = __add__

    def __pow__(self, k):
        if self.sign == 0:
            if k == 0:
                raise InvalidInput("0**0 in log scale")
            return LogScaledReal.zero()
        if self.sign < 0:
            raise InvalidInput("powers of negative log-scale values unsupported")
        with mp.workprec(_LOG_BITS):
            return LogScaledReal(1, self.log_magnitude * mp.mpf(k))

    # -- queries -----------------------------------------------------------

    def ln(self):
        if self.sign <= 0:
            raise InvalidInput("ln of a non-positive value")
        return self.log_magnitude

    def log10(self):
        with mp.workprec(_LOG_BITS):
            return self.ln() / mp.log(10)

    def to_mpf(self):
        """The value as an mpmath float (may overflow to inf for huge logs)."""
        if self.sign == 0:
            return mp.mpf(0)
        with mp.workprec(_LOG_BITS):
            return self.sign * mp.exp(self.log_magnitude)

    def _coerce(self, other):
        if isinstance(other, LogScaledReal):
            return other
        if isinstance(other, int):
            return LogScaledReal.from_int(other)
        return LogScaledReal.from_real(other)

    def _key(self):
        # orderable proxy: zero sits between negatives and positives
        if self.sign == 0:
            return (0, 0)
        return (self.sign, self.sign * self.log_magnitude)

    def __lt__(self, other):
        return self._key() < self._coerce(other)._key()

    def __le__(self, other):
        return self._key() <= self._coerce(other)._key()

    def __eq__(self, other):
        if not isinstance(other, (LogScaledReal, int, float)):
            return NotImplemented
        return self._key() == self._coerce(other)._key()

    def __repr__(self):
        if self.sign == 0:
            return "LogScaledReal(0)"
        return f"LogScaledReal(sign={self.sign:+d}, ln={mp.nstr(self.log_magnitude, 25)})"
