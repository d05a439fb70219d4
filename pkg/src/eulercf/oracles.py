"""Reference values for the closed-form sides of each continued fraction.

Where a quantity can be computed two independent ways (a library
function and a power series with a remainder bound) both routes run and
must agree; a mismatch raises :class:`OracleDisagreement`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, OracleDisagreement, PoleProximityError

__all__ = [
    "OracleResult",
    "binomial_power",
    "symmetric_lhs",
    "tan_lhs",
    "tangent",
    "log_lhs",
    "vcoth_series",
    "arctan_oracle",
    "tan_addition",
    "vcoth_exp",
    "near_tan_pole",
    "SERIES_REL_STOP",
]

EPS = 2.220446049250313e-16
SERIES_REL_STOP = 1e-18
POLE_GUARD = 1e-6
VCOTH_AGREEMENT = 1e-13
_VCOTH_SERIES_LIMIT = 700.0


@dataclass(frozen=True)
class OracleResult:
    value: float
    method: str
    est_error: float


def _is_integral(n) -> bool:
    if isinstance(n, int):
        return True
    if isinstance(n, Fraction):
        return n.denominator == 1
    return float(n).is_integer()


def _check(label, a, b, bound):
    if not abs(a - b) <= bound:
        raise OracleDisagreement(f"{label}: {a!r} vs {b!r} (bound {bound:.3e})")


def binomial_power(n, x) -> OracleResult:
    """(1 + x)**n on the principal real branch.

    Integer exponents use exact repeated multiplication (in Fractions when
    ``x`` is rational). Otherwise ``exp(n log(1+x))``, checked against the
    binomial series when |x| < 0.9.
    """
    if not 1 + x > 0:
        raise DomainError(f"domain: binomial power needs 1 + x > 0, got x={x}")
    if _is_integral(n):
        m = int(n)
        base = Fraction(x) + 1 if isinstance(x, (int, Fraction)) else 1.0 + float(x)
        acc = base ** 0
        for _ in range(abs(m)):
            acc = acc * base
        if m < 0:
            acc = 1 / acc
        value = float(acc)
        exact = isinstance(acc, Fraction)
        err = 0.0 if exact else 2 * (abs(m) + 1) * EPS * abs(value)
        return OracleResult(value, "exact-product" if exact else "repeated-product", err)

    n, x = float(n), float(x)
    value = math.exp(n * math.log1p(x))
    err = 4 * EPS * abs(value) * (1 + abs(n * math.log1p(x)))
    if abs(x) < 0.9:
        total, term, k = 1.0, 1.0, 0
        magnitude = 1.0  # sum of |terms| bounds the rounding of an alternating sum
        while True:
            term *= (n - k) / (k + 1) * x
            k += 1
            total += term
            magnitude += abs(term)
            ratio = abs(x) * max(1.0, abs(k - n) / (k + 1))
            if abs(term) <= SERIES_REL_STOP * abs(total) and k > n and ratio < 1:
                break
        tail = abs(term) * ratio / (1 - ratio)
        _check("binomial series", total, value, tail + (k + 8) * EPS * magnitude + err)
        err = max(err, tail)
    return OracleResult(value, "exp-log", err)


def symmetric_lhs(n, z) -> OracleResult:
    """n z [(1+z)^n + (1-z)^n] / [(1+z)^n - (1-z)^n], with value 1 at z = 0."""
    n, z = float(n), float(z)
    if not abs(z) < 1:
        raise DomainError(f"domain: |z| < 1 required, got z={z}")
    if n == 0:
        raise DomainError("domain: n = 0 is the logarithmic limit (use log_lhs)")
    if z == 0:
        return OracleResult(1.0, "continuity", 0.0)
    lp, lm = n * math.log1p(z), n * math.log1p(-z)
    plus, minus = math.exp(lp), math.exp(lm)
    # (1+z)^n - (1-z)^n without cancellation
    diff = minus * math.expm1(lp - lm)
    value = n * z * (plus + minus) / diff
    return OracleResult(value, "ratio", 16 * EPS * abs(value) * (1 + abs(lp - lm)))


def near_tan_pole(angle: float, guard: float = POLE_GUARD) -> bool:
    """True when ``angle`` lies within ``guard`` of an odd multiple of pi/2."""
    m = round((angle - math.pi / 2) / math.pi)
    return abs(angle - (math.pi / 2 + m * math.pi)) < guard


def tan_lhs(n, t) -> OracleResult:
    """tan(n arctan t)."""
    angle = float(n) * math.atan(float(t))
    if near_tan_pole(angle):
        raise PoleProximityError(f"pole proximity: n*arctan(t) = {angle!r}")
    value = math.tan(angle)
    return OracleResult(value, "tan-atan", 4 * EPS * (1 + value * value) * (1 + abs(angle)))


def tangent(theta) -> OracleResult:
    """tan theta, with the same pole guard as :func:`tan_lhs`."""
    theta = float(theta)
    if near_tan_pole(theta):
        raise PoleProximityError(f"pole proximity: theta = {theta!r}")
    value = math.tan(theta)
    return OracleResult(value, "tan", 4 * EPS * (1 + value * value) * (1 + abs(theta)))


def log_lhs(z) -> OracleResult:
    """log((1+z)/(1-z)) from the library and from 2(z + z^3/3 + z^5/5 + ...)."""
    z = float(z)
    if not abs(z) < 1:
        raise DomainError(f"domain: |z| < 1 required, got z={z}")
    value = 2 * math.atanh(z)
    zz = z * z
    power, total, k = 2 * z, 0.0, 0
    while True:
        term = power / (2 * k + 1)
        total += term
        k += 1
        power *= zz
        if abs(power) / (2 * k + 1) <= SERIES_REL_STOP * abs(total):
            break
    tail = abs(power) / (2 * k + 1) / (1 - zz)
    _check("log series", total, value, tail + (k + 8) * EPS * abs(value))
    return OracleResult(value, "atanh+series", max(tail, 2 * EPS * abs(value)))


def vcoth_exp(v: float) -> float:
    """v (e^{2v} + 1)/(e^{2v} - 1) evaluated through expm1; 1 at v = 0."""
    if v == 0:
        return 1.0
    a = abs(v)
    # 2/(e^{2a} - 1) written with e^{-2a} so large |v| cannot overflow
    return a * (1 - 2 * math.exp(-2 * a) / math.expm1(-2 * a))


def vcoth_series(v) -> OracleResult:
    """v coth v as the ratio of the even series

        (1 + v^2/2! + v^4/4! + ...) / (1 + v^2/3! + v^4/5! + ...)

    cross-checked against v (e^{2v} + 1)/(e^{2v} - 1). Past |v| = 700 the
    series terms overflow and only the exponential form is used.
    """
    v = float(v)
    if not math.isfinite(v):
        raise DomainError(f"domain: v must be finite, got {v}")
    closed = vcoth_exp(v)
    if abs(v) > _VCOTH_SERIES_LIMIT:
        return OracleResult(closed, "exp-form", 2 * EPS * closed)
    vv = v * v
    c = 1.0
    num, den = 1.0, 1.0
    k = 0
    while True:
        k += 1
        c *= vv / ((2 * k - 1) * (2 * k))
        num += c
        den += c / (2 * k + 1)
        ratio = vv / ((2 * k + 1) * (2 * k + 2))
        if c <= SERIES_REL_STOP * num and ratio < 0.5:
            break
    # tails of both series are bounded by the next cosh term over (1 - ratio)
    tail = c * ratio / (1 - ratio)
    value = num / den
    err = tail * (1 + value) / den + (k + 4) * EPS * value
    if not abs(value - closed) <= VCOTH_AGREEMENT * max(1.0, abs(closed)):
        raise OracleDisagreement(
            f"internal oracle disagreement at v={v!r}: series {value!r} vs exp {closed!r}"
        )
    return OracleResult(value, "series-ratio", err)


def arctan_oracle(t) -> OracleResult:
    """Inverse tangent from the library, checked by a reduced alternating series.

    |t| > 1 is reflected through pi/2 - arctan(1/t), then the angle is halved
    with u -> u/(1 + sqrt(1 + u^2)) until |u| <= 1/4.
    """
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"domain: t must be finite, got {t}")
    value = math.atan(t)
    if t == 0:
        return OracleResult(0.0, "atan+series", 0.0)
    u = abs(t)
    reflect = u > 1
    if reflect:
        u = 1 / u
    halvings = 0
    while u > 0.25:
        u = u / (1 + math.sqrt(1 + u * u))
        halvings += 1
    uu = u * u
    power, total, k = u, 0.0, 0
    while True:
        total += (-1) ** k * power / (2 * k + 1)
        k += 1
        power *= uu
        if power / (2 * k + 1) <= SERIES_REL_STOP * total:
            break
    bound = power / (2 * k + 1) * 2**halvings
    series = total * 2**halvings
    if reflect:
        series = math.pi / 2 - series
    series = math.copysign(series, t)
    _check("arctan series", series, value, bound + 16 * EPS * abs(value))
    return OracleResult(value, "atan+series", max(bound, 2 * EPS * abs(value)))


def tan_addition(n: int, t):
    """Exact tan(n phi) from t = tan(phi) by T_k = (T_{k-1} + t)/(1 - t T_{k-1}).

    Raises ZeroDivisionError when an intermediate multiple lands on a pole.
    """
    t = Fraction(t)
    acc = Fraction(0)
    for _ in range(abs(n)):
        acc = (acc + t) / (1 - t * acc)
    return acc if n >= 0 else -acc
