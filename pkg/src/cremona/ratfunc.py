"""Univariate rational functions over exact rationals (variable x).

These carry the torus coordinates a1, a2 of the de Jonquieres group and
the Moebius/cofactor data of hyperelliptic automorphism extensions.
Fractions are kept reduced with a monic denominator.
"""

from __future__ import annotations

from fractions import Fraction

from . import _univariate as uni


class RatFunc1:
    """num / den with reduced terms and monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = [Fraction(v) for v in uni.trim(list(num))]
        den = [Fraction(v) for v in uni.trim(list(den))]
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if num:
            g = uni.gcd_q(num, den)
            if uni.degree(g) > 0:
                num, r1 = uni.divmod_q(num, g)
                den, r2 = uni.divmod_q(den, g)
                assert not r1 and not r2
        lead = den[-1]
        num = [v / lead for v in num]
        den = [v / lead for v in den]
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", tuple(den))

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc1 is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, c):
        return cls([Fraction(c)])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def from_fraction(cls, num, den):
        return cls(list(num), list(den))

    # -- predicates -------------------------------------------------------

    @property
    def is_zero(self):
        return not self.num

    @property
    def is_polynomial(self):
        return uni.degree(list(self.den)) == 0

    def __bool__(self):
        return not self.is_zero

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        num = uni.add(
            uni.mul(list(self.num), list(other.den)),
            uni.mul(list(other.num), list(self.den)),
        )
        return RatFunc1(num, uni.mul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc1([-v for v in self.num], list(self.den))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return RatFunc1(
            uni.mul(list(self.num), list(other.num)),
            uni.mul(list(self.den), list(other.den)),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc1(
            uni.mul(list(self.num), list(other.den)),
            uni.mul(list(self.den), list(other.num)),
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return (RatFunc1.constant(1) / self) ** (-n)
        out = RatFunc1.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, RatFunc1):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, v):
        d = uni.evaluate(list(self.den), Fraction(v))
        if not d:
            raise ZeroDivisionError(f"pole at {v}")
        return uni.evaluate(list(self.num), Fraction(v)) / d

    def compose(self, other: "RatFunc1") -> "RatFunc1":
        """self(other(x)) as an exact rational function."""
        on, od = list(other.num), list(other.den)
        dn = max(uni.degree(list(self.num)), 0)
        dd = max(uni.degree(list(self.den)), 0)
        d = max(dn, dd)

        def lift(coeffs):
            acc = []
            for k, c in enumerate(coeffs):
                term = uni.scale(uni.mul(uni.pow_(on, k), uni.pow_(od, d - k)), c)
                acc = uni.add(acc, term)
            return acc

        return RatFunc1(lift(list(self.num)), lift(list(self.den)))

    def __repr__(self):
        from .exprio import format_ratfunc

        return f"RatFunc1({format_ratfunc(self)!r})"


def _coerce(v):
    if isinstance(v, RatFunc1):
        return v
    if isinstance(v, (int, Fraction)):
        return RatFunc1.constant(v)
    raise TypeError(f"cannot coerce {v!r} to RatFunc1")


def is_squarefree_poly(h: RatFunc1) -> bool:
    """Squarefree test for a polynomial-valued rational function."""
    if not h.is_polynomial or h.is_zero:
        return False
    num = list(h.num)
    if uni.degree(num) <= 0:
        return False
    g = uni.gcd_q(num, uni.derivative(num))
    return uni.degree(g) == 0
