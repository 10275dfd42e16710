"""Laurent polynomials in one variable and their fraction field.

Coefficients are any exact ring elements (``int`` or ``Fraction``).  A
polynomial is stored as a dict ``{exponent: coefficient}`` with no zero
coefficients, so the zero polynomial is the empty dict.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

Rat = Fraction

_SCALARS = (int, Fraction, Rational)


class LaurentPoly:
    """Element of ``R[x, x^-1]``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, a in dict(coeffs).items():
                if a != 0:
                    c[int(e)] = a
        self._c = c
        self._hash = None

    # constructors
    @classmethod
    def const(cls, a) -> "LaurentPoly":
        return cls({0: a})

    @classmethod
    def monomial(cls, a, e: int) -> "LaurentPoly":
        return cls({e: a})

    @classmethod
    def gen(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def _wrap(cls, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, _SCALARS):
            return cls.const(other)
        return NotImplemented

    # inspection
    def terms(self):
        return sorted(self._c.items())

    def coeff(self, e: int):
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant_term(self):
        return self._c.get(0, 0)

    # arithmetic
    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return LaurentPoly()
        c: dict = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + a1 * a2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (e, a), = self._c.items()
            return LaurentPoly({e * m: Fraction(1) / Fraction(a) ** (-m)})
        out = LaurentPoly.const(1)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def scale_exponents(self, factor) -> "LaurentPoly":
        """Substitute ``x -> factor * x``."""
        return LaurentPoly({e: a * factor ** e if e >= 0 else a / Fraction(factor) ** (-e)
                            for e, a in self._c.items()})

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by ``x^m``."""
        return LaurentPoly({e + m: a for e, a in self._c.items()})

    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly({e: fn(a) for e, a in self._c.items()})

    def __call__(self, z):
        """Evaluate at a nonzero scalar ``z``."""
        total = 0
        for e, a in self._c.items():
            total += a * (z ** e if e >= 0 else 1 / Fraction(z) ** (-e))
        return total

    # comparison
    def __eq__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in self.terms():
            if e == 0:
                parts.append(f"{a}")
            elif e == 1:
                parts.append(f"{a}*x")
            else:
                parts.append(f"{a}*x^{e}")
        return " + ".join(parts)


def _exact_div(b, a):
    if isinstance(a, int) and isinstance(b, int) and b % a == 0:
        return b // a
    return Fraction(b) / Fraction(a)


class LaurentFraction:
    """Quotient ``num/den`` of Laurent polynomials, a field element.

    When the denominator is a monomial the fraction is rewritten with
    denominator 1, which keeps sizes down in the common case.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly._wrap(num)
        den = LaurentPoly.const(1) if den is None else LaurentPoly._wrap(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.is_monomial() and den != 1:
            (e, a), = den._c.items()
            num = LaurentPoly({f - e: _exact_div(b, a) for f, b in num._c.items()})
            den = LaurentPoly.const(1)
        self.num = num
        self.den = den

    @classmethod
    def _wrap(cls, other):
        if isinstance(other, LaurentFraction):
            return other
        if isinstance(other, (LaurentPoly,) + _SCALARS):
            return cls(other)
        return NotImplemented

    def valuation(self) -> int:
        return self.num.valuation() - self.den.valuation()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return LaurentFraction(self.num + other.num, self.den)
        return LaurentFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentFraction(-self.num, self.den)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return LaurentFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return LaurentFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return LaurentFraction._wrap(other) / self

    def __eq__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return False
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("LaurentFraction is not hashable")

    def __repr__(self):
        return f"({self.num})/({self.den})"
