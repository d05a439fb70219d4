"""Euler's continued-fraction families, each bound to its closed-form side.

Every constructor returns a :class:`CFFamily`. Arguments may be floats,
ints/Fractions (exact evaluation) or a
:class:`~eulercf.exact.RationalFunction` formal variable (symbolic
evaluation); domain checks apply to real numeric arguments only.

=============  ==========================================  ===================
name           continued fraction                          closed form
=============  ==========================================  ===================
lagrange       1 + nx/(1 + (1-n)x/(2 + (1+n)x/(3 + ...)))  (1+x)^n
uniform        same, one level per pair of the above       (1+x)^n
symmetric      1 + (n^2-1)z^2/(3 + (n^2-4)z^2/(5 + ...))   nz coth(n atanh z)
tanmult        nt/(1 - (n^2-1)t^2/(3 - ...))               tan(n arctan t)
arctan         t/(1 + t^2/(3 + 4t^2/(5 + ...)))            arctan t
tan            theta/(1 - theta^2/(3 - theta^2/(5 - ...)))   tan theta
logcf          2z/(1 - z^2/(3 - 4z^2/(5 - ...)))           log((1+z)/(1-z))
vcoth          1 + v^2/(3 + v^2/(5 + v^2/(7 + ...)))       v coth v
=============  ==========================================  ===================
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Any, Callable, Mapping

from . import oracles
from .engine import DEFAULT_MAX_DEPTH, EvalReport, TermStream, eval_adaptive
from .errors import DomainError, PoleProximityError

__all__ = [
    "CFFamily",
    "lagrange_binomial",
    "uniform_binomial",
    "symmetric_ratio",
    "tan_multiple",
    "arctan_cf",
    "tan_cf",
    "atanh_log_cf",
    "vcoth_cf",
    "REGISTRY",
    "make_family",
]


@dataclass(frozen=True)
class CFFamily:
    name: str
    params: Mapping[str, Any]
    stream: TermStream
    lhs: Callable[[], oracles.OracleResult] = field(repr=False)
    domain: Callable[..., bool] = field(repr=False)

    def terms(self, k: int) -> tuple:
        return self.stream.terms(k)

    def in_domain(self) -> bool:
        return self.domain(**self.params)

    def evaluate(self, tol: float = 1e-15, max_depth: int = DEFAULT_MAX_DEPTH, **kw) -> EvalReport:
        return eval_adaptive(self.stream, tol, max_depth, **kw)

    def oracle(self) -> oracles.OracleResult:
        return self.lhs()


def _real(x) -> bool:
    return isinstance(x, Real)


def _div(x, m: int):
    """x / m, kept exact for integers."""
    if isinstance(x, int):
        return Fraction(x, m)
    return x / m


def _finite(x) -> bool:
    return not _real(x) or math.isfinite(x)


def lagrange_binomial(n, x) -> CFFamily:
    """Lagrange's interrupted continued fraction for (1+x)^n.

    Terms: a_1 = nx, b_1 = 1; a_{2j} = (j-n)x, b_{2j} = 2;
    a_{2j+1} = (j+n)x, b_{2j+1} = 2j+1. For integer n it halts at k = 2n
    (n > 0) or k = 2|n|+1 (n < 0).
    """

    def term(k):
        if k == 1:
            return n * x, 1
        j = k // 2
        if k % 2 == 0:
            return (j - n) * x, 2
        return (j + n) * x, 2 * j + 1

    return CFFamily(
        "lagrange",
        {"n": n, "x": x},
        TermStream(1, term),
        lambda: oracles.binomial_power(n, x),
        lambda n, x: 1 + x > 0,
    )


def uniform_binomial(n, x) -> CFFamily:
    """The same expansion with one uniform level per pair of Lagrange levels.

    b_0 = 1, a_1 = nx, b_1 = 1 + (1-n)x/2, and for k >= 2
    a_k = (n^2 - (k-1)^2) x^2 / 4, b_k = (2k-1)(1 + x/2).
    """
    half = 1 + _div(x, 2)
    if _real(x) and half == 0:
        raise DomainError("degenerate denominator: 1 + x/2 = 0 at x = -2")
    xx4 = _div(x * x, 4)
    b1 = 1 + (1 - n) * _div(x, 2)

    def term(k):
        if k == 1:
            return n * x, b1
        return (n * n - (k - 1) ** 2) * xx4, (2 * k - 1) * half

    return CFFamily(
        "uniform",
        {"n": n, "x": x},
        TermStream(1, term),
        lambda: oracles.binomial_power(n, x),
        lambda n, x: 1 + x > 0,
    )


def symmetric_ratio(n, z) -> CFFamily:
    """1 + (n^2-1)z^2/(3 + (n^2-4)z^2/(5 + ...)); halts at k = |n| for integer n.

    The closed form nz[(1+z)^n + (1-z)^n]/[(1+z)^n - (1-z)^n] is taken as 1 at
    z = 0; at n = 0 it degenerates to 2z / log((1+z)/(1-z)).
    """
    if _real(z):
        if isinstance(z, (int, Fraction)):
            if abs(z) == 1:
                raise DomainError(f"symmetric ratio undefined at z = {z}")
        elif not abs(z) < 1:
            raise DomainError(f"outside convergence domain: |z| < 1 required, got z={z}")
    zz = z * z
    nn = n * n

    def term(k):
        return (nn - k * k) * zz, 2 * k + 1

    def lhs():
        if n == 0:
            if z == 0:
                return oracles.OracleResult(1.0, "continuity", 0.0)
            log = oracles.log_lhs(z)
            value = 2 * float(z) / log.value
            return oracles.OracleResult(value, "log-limit", abs(value) * log.est_error / abs(log.value))
        return oracles.symmetric_lhs(n, z)

    return CFFamily(
        "symmetric", {"n": n, "z": z}, TermStream(1, term), lhs, lambda n, z: abs(z) < 1
    )


def _tan_pole_check(angle: float, label: str):
    if oracles.near_tan_pole(angle):
        raise PoleProximityError(f"pole proximity: {label} = {angle!r} is near an odd multiple of pi/2")


def tan_multiple(n, t) -> CFFamily:
    """tan(n phi) in terms of t = tan(phi).

    b_0 = 0, a_1 = nt, b_1 = 1; a_k = -(n^2 - (k-1)^2) t^2, b_k = 2k-1.
    """
    if _real(t) and _real(n):
        _tan_pole_check(float(n) * math.atan(float(t)), "n*arctan(t)")
    tt = t * t
    nn = n * n

    def term(k):
        if k == 1:
            return n * t, 1
        return -(nn - (k - 1) ** 2) * tt, 2 * k - 1

    return CFFamily(
        "tanmult",
        {"n": n, "t": t},
        TermStream(0, term),
        lambda: oracles.tan_lhs(n, t),
        lambda n, t: not oracles.near_tan_pole(float(n) * math.atan(float(t))),
    )


def arctan_cf(t) -> CFFamily:
    """arctan t = t/(1 + t^2/(3 + 4t^2/(5 + 9t^2/(7 + ...)))); the n -> 0 limit of tanmult."""
    if not _finite(t):
        raise DomainError(f"t must be finite, got {t}")
    tt = t * t

    def term(k):
        if k == 1:
            return t, 1
        return (k - 1) ** 2 * tt, 2 * k - 1

    return CFFamily(
        "arctan",
        {"t": t},
        TermStream(0, term),
        lambda: oracles.arctan_oracle(t),
        lambda t: math.isfinite(t),
    )


def tan_cf(theta) -> CFFamily:
    """tan theta = theta/(1 - theta^2/(3 - theta^2/(5 - ...)))."""
    if _real(theta):
        if not math.isfinite(theta):
            raise DomainError(f"theta must be finite, got {theta}")
        _tan_pole_check(float(theta), "theta")
    tt = theta * theta

    def term(k):
        if k == 1:
            return theta, 1
        return -tt, 2 * k - 1

    return CFFamily(
        "tan",
        {"theta": theta},
        TermStream(0, term),
        lambda: oracles.tangent(theta),
        lambda theta: not oracles.near_tan_pole(float(theta)),
    )


def atanh_log_cf(z) -> CFFamily:
    """log((1+z)/(1-z)) = 2z/(1 - z^2/(3 - 4z^2/(5 - ...))) for |z| < 1."""
    if _real(z) and not abs(z) < 1:
        raise DomainError(f"outside convergence domain: |z| < 1 required, got z={z}")
    zz = z * z

    def term(k):
        if k == 1:
            return 2 * z, 1
        return -((k - 1) ** 2) * zz, 2 * k - 1

    return CFFamily(
        "logcf",
        {"z": z},
        TermStream(0, term),
        lambda: oracles.log_lhs(z),
        lambda z: abs(z) < 1,
    )


def vcoth_cf(v) -> CFFamily:
    """v coth v = 1 + v^2/(3 + v^2/(5 + v^2/(7 + ...)))."""
    if not _finite(v):
        raise DomainError(f"v must be finite, got {v}")
    vv = v * v

    def term(k):
        return vv, 2 * k + 1

    return CFFamily(
        "vcoth",
        {"v": v},
        TermStream(1, term),
        lambda: oracles.vcoth_series(v),
        lambda v: math.isfinite(v),
    )


# CLI identifiers -> (constructor, parameter names in call order)
REGISTRY: dict[str, tuple[Callable[..., CFFamily], tuple[str, ...]]] = {
    "lagrange": (lagrange_binomial, ("n", "x")),
    "uniform": (uniform_binomial, ("n", "x")),
    "symmetric": (symmetric_ratio, ("n", "z")),
    "tanmult": (tan_multiple, ("n", "t")),
    "arctan": (arctan_cf, ("t",)),
    "tan": (tan_cf, ("theta",)),
    "logcf": (atanh_log_cf, ("z",)),
    "vcoth": (vcoth_cf, ("v",)),
}


def make_family(name: str, **params) -> CFFamily:
    """Build a registered family by name; raises KeyError/TypeError on bad input."""
    ctor, names = REGISTRY[name]
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise TypeError(
            f"family {name!r} takes parameters {', '.join(names)}"
            + (f"; missing {', '.join(missing)}" if missing else "")
            + (f"; unknown {', '.join(extra)}" if extra else "")
        )
    return ctor(*(params[p] for p in names))
