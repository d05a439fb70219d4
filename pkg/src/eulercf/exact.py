"""Exact rational arithmetic: univariate polynomials and rational functions over Q.

Rational numbers are :class:`fractions.Fraction` (always normalized, positive
denominator). Polynomials hold ascending coefficient tuples with trailing
zeros stripped; the zero polynomial is the empty tuple.

Rational functions are kept canonical: numerator and denominator coprime,
integer coefficients with no common content, denominator leading
coefficient positive. Two equal rational functions therefore have
identical components.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

__all__ = [
    "BigRational",
    "rational_arith",
    "Polynomial",
    "RationalFunction",
    "poly_gcd",
]

BigRational = Fraction

_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "\N{MINUS SIGN}": operator.sub,
    "*": operator.mul,
    "\N{MULTIPLICATION SIGN}": operator.mul,
    "/": operator.truediv,
    "\N{DIVISION SIGN}": operator.truediv,
}


def rational_arith(a, b, op: str) -> Fraction:
    """Exact ``a op b`` for op in + - * / (unicode minus/times/divide accepted)."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    a, b = Fraction(a), Fraction(b)
    if fn is operator.truediv and b == 0:
        raise ZeroDivisionError("division by zero")
    return fn(a, b)


def _strip(coeffs) -> tuple:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


Scalar = Union[int, Fraction]


class Polynomial:
    """Univariate polynomial with rational coefficients, lowest degree first.

    >>> p = Polynomial([1, 0, 3])
    >>> p.render("z")
    '1 + 3z^2'
    >>> p(Fraction(1, 2))
    Fraction(7, 4)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return cls((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        """Division with remainder over Q."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / other.lc
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            quot[i - dq] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * y
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive (0 for zero)."""
        if not self.coeffs:
            return Fraction(0)
        den = reduce(math.lcm, (c.denominator for c in self.coeffs))
        num = reduce(math.gcd, (c.numerator * (den // c.denominator) for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> "Polynomial":
        if not self.coeffs:
            return self
        k = self.content()
        return Polynomial(c / k for c in self.coeffs)

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        inv = 1 / self.lc
        return Polynomial(c * inv for c in self.coeffs)

    def pseudo_rem(self, other: "Polynomial") -> "Polynomial":
        """lc(other)**(deg self - deg other + 1) * self mod other, computed fraction-free."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero polynomial")
        rem = list(self.coeffs)
        dq, lq = other.degree, other.lc
        while len(rem) - 1 >= dq and rem:
            shift = len(rem) - 1 - dq
            lr = rem[-1]
            rem = [lq * c for c in rem]
            for j, y in enumerate(other.coeffs):
                rem[shift + j] -= lr * y
            rem = list(_strip(rem))
        # the unused powers of lc(other) only scale the result
        return Polynomial(rem)

    def render(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for deg, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                mono = var if deg == 1 else f"{var}^{deg}"
                body = mono if mag == 1 else f"{mag}{mono}" if mag.denominator == 1 else f"({mag}){mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the primitive pseudo-remainder sequence.

    >>> z = Polynomial.x()
    >>> poly_gcd(z**2 - 1, z - 1).render("z")
    '-1 + z'
    """
    p, q = Polynomial._coerce(p), Polynomial._coerce(q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if q.is_zero():
        return p.monic()
    if p.is_zero():
        return q.monic()
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, r.primitive()
    return a.monic()


class RationalFunction:
    """Canonical quotient of two polynomials in one formal variable.

    ``var`` only affects rendering; equality compares the canonical
    numerator and denominator.
    """

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=1, var: str = "x", *, _canonical: bool = False):
        num = Polynomial._coerce(num)
        den = Polynomial._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("numerator and denominator must be polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            num, den = self._normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _normalize(num: Polynomial, den: Polynomial):
        if num.is_zero():
            return Polynomial(), Polynomial((1,))
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        # one scalar puts both parts on integer, content-free coefficients
        coeffs = num.coeffs + den.coeffs
        lcd = reduce(math.lcm, (c.denominator for c in coeffs))
        content = reduce(math.gcd, (int(c * lcd) for c in coeffs))
        s = Fraction(lcd, content)
        if den.lc < 0:
            s = -s
        return num * s, den * s

    @classmethod
    def variable(cls, var: str = "x") -> "RationalFunction":
        return cls(Polynomial.x(), 1, var, _canonical=True)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Fraction(other), 1, self.var)
        if isinstance(other, Polynomial):
            return RationalFunction(other, 1, self.var)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den, self.var, _canonical=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den, self.var
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num, self.var)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return self.num(x) / d

    def normalized(self) -> "RationalFunction":
        return RationalFunction(self.num, self.den, self.var)

    def __str__(self):
        return f"({self.num.render(self.var)})/({self.den.render(self.var)})"

    def __repr__(self):
        return f"RationalFunction({self})"
