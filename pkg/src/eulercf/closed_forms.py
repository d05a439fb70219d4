"""Exact closed forms of the terminating continued fractions.

For integer exponents the symmetric, tangent-multiple and binomial
fractions halt after finitely many levels. Running the backward
recurrence over a formal variable then yields a rational function,
which is compared with the binomial expansion of the closed-form side.
"""

from __future__ import annotations

from .engine import detect_termination, eval_fixed
from .errors import NoTerminationError
from .exact import Polynomial, RationalFunction
from .families import lagrange_binomial, symmetric_ratio, tan_multiple, uniform_binomial

__all__ = ["cf_closed_form", "lhs_closed_form", "check_negation_symmetry", "MAX_EXPONENT"]

MAX_EXPONENT = 24

_CF_FAMILIES = {
    "symmetric": (symmetric_ratio, "z"),
    "tanmult": (tan_multiple, "t"),
    "lagrange": (lagrange_binomial, "x"),
    "uniform": (uniform_binomial, "x"),
}


def _check_n(n, bound):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n == 0:
        raise ValueError("n must be nonzero")
    if abs(n) > bound:
        raise ValueError(f"|n| = {abs(n)} exceeds the bound {bound}")


def cf_closed_form(family: str, n: int, bound: int = MAX_EXPONENT) -> RationalFunction:
    """Value of a terminating family as a canonical rational function.

    >>> str(cf_closed_form("symmetric", 3))
    '(3 + 9z^2)/(3 + z^2)'
    """
    _check_n(n, bound)
    try:
        ctor, var = _CF_FAMILIES[family]
    except KeyError:
        raise ValueError(f"no closed form for family {family!r}") from None
    stream = ctor(n, RationalFunction.variable(var)).stream
    k = detect_termination(stream, 2 * abs(n) + 2)
    if k is None:
        raise NoTerminationError(f"no termination found for {family} with n={n}")
    value = eval_fixed(stream, k - 1)
    if not isinstance(value, RationalFunction):
        value = RationalFunction(value, 1, var)
    return value


def lhs_closed_form(family: str, n: int, bound: int = MAX_EXPONENT) -> RationalFunction:
    """Binomial expansion of the closed-form side.

    For the symmetric family with n = -m < 0, numerator and denominator are
    multiplied by (1 - z^2)^m, which turns (1+z)^-m into (1-z)^m and
    (1-z)^-m into (1+z)^m and keeps everything polynomial.
    """
    _check_n(n, bound)
    m = abs(n)
    if family == "symmetric":
        z = Polynomial.x()
        plus, minus = (1 + z) ** m, (1 - z) ** m
        if n > 0:
            return RationalFunction(n * z * (plus + minus), plus - minus, "z")
        return RationalFunction(n * z * (minus + plus), minus - plus, "z")
    if family == "lagrange":
        power = (1 + Polynomial.x()) ** m
        if n > 0:
            return RationalFunction(power, 1, "x")
        return RationalFunction(1, power, "x")
    raise ValueError(f"no closed-form side for family {family!r}")


def check_negation_symmetry(n: int, bound: int = MAX_EXPONENT) -> bool:
    """True when the symmetric closed form is unchanged by n -> -n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return lhs_closed_form("symmetric", n, bound) == lhs_closed_form("symmetric", -n, bound)
