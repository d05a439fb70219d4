"""Verification suites behind ``eulercf verify``.

Each suite returns a list of :class:`Case` in a fixed order; randomized
suites draw from ``random.Random(seed)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import oracles
from .closed_forms import MAX_EXPONENT, cf_closed_form, check_negation_symmetry, lhs_closed_form
from .errors import OracleDisagreement
from .exact import RationalFunction
from .families import lagrange_binomial, symmetric_ratio, uniform_binomial

__all__ = ["Case", "SUITES", "run_suite", "stated_symmetric_form", "stated_tangent_form"]

FLOAT_TOL = 1e-12
SERIES_TOL = 1e-13
TANGENT_POINTS = 20
SERIES_POINTS = 50
VARIABLE_CHANGE_N = (Fraction(1, 2), Fraction(5, 2), Fraction(-3, 2))
VARIABLE_CHANGE_X = (Fraction(1, 5), Fraction(1, 3), Fraction(1, 2))


@dataclass(frozen=True)
class Case:
    name: str
    passed: bool
    detail: str


def stated_symmetric_form(n: int) -> RationalFunction:
    """Values 1, 1 + z^2 and 3(1 + 3z^2)/(3 + z^2) for n = +-1, +-2, +-3."""
    z = RationalFunction.variable("z")
    forms = {1: RationalFunction(1, 1, "z"), 2: 1 + z * z, 3: 3 * (1 + 3 * z * z) / (3 + z * z)}
    return forms[abs(n)]


def stated_tangent_form(n: int) -> RationalFunction:
    """tan 2phi = 2t/(1 - t^2) and tan 3phi = (3t - t^3)/(1 - 3t^2)."""
    t = RationalFunction.variable("t")
    forms = {2: 2 * t / (1 - t * t), 3: (3 * t - t * t * t) / (1 - 3 * t * t)}
    return forms[n]


def _close(a, b, tol):
    return abs(a - b) <= tol


def _signed_range(bound):
    for m in range(1, bound + 1):
        yield m
        yield -m


def integer_n(bound: int, seed: int = 0) -> list[Case]:
    cases = []
    for n in _signed_range(bound):
        cf = cf_closed_form("symmetric", n)
        ok = cf == lhs_closed_form("symmetric", n)
        if abs(n) <= 3:
            ok = ok and cf == stated_symmetric_form(n)
        cases.append(Case(f"integer-n n={n}", ok, str(cf)))
    return cases


def negation(bound: int, seed: int = 0) -> list[Case]:
    return [
        Case(f"negation n={n}", check_negation_symmetry(n), str(lhs_closed_form("symmetric", n)))
        for n in range(1, bound + 1)
    ]


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-60, 60), rng.randint(1, 40))


def tangent_closed_forms(bound: int, seed: int = 0) -> list[Case]:
    rng = random.Random(seed)
    cases = []
    for n in range(1, bound + 1):
        cf = cf_closed_form("tanmult", n)
        ok = True
        detail = str(cf)
        if n in (2, 3) and cf != stated_tangent_form(n):
            ok = False
        checked = 0
        while checked < TANGENT_POINTS and ok:
            t = _random_rational(rng)
            try:
                expected = oracles.tan_addition(n, t)
                got = cf(t)
            except ZeroDivisionError:
                continue
            checked += 1
            if got != expected:
                ok = False
                detail = f"{cf} at t={t}: {got} != {expected}"
        cases.append(Case(f"tangent-closed-forms n={n}", ok, detail))
    return cases


def variable_change(bound: int = 0, seed: int = 0) -> list[Case]:
    """lagrange, uniform and symmetric (at z = x/(2+x)) all reproduce (1+x)^n."""
    cases = []
    for n in VARIABLE_CHANGE_N:
        for x in VARIABLE_CHANGE_X:
            nf, xf = float(n), float(x)
            target = oracles.binomial_power(nf, xf).value
            lag = lagrange_binomial(nf, xf).evaluate().value
            uni = uniform_binomial(nf, xf).evaluate().value
            z = xf / (2 + xf)
            sym = symmetric_ratio(nf, z).evaluate().value
            # S = nz(R+1)/(R-1) with R = ((1+z)/(1-z))^n = (1+x)^n
            recovered = (sym + nf * z) / (sym - nf * z)
            lhs = oracles.symmetric_lhs(nf, z).value
            ok = (
                _close(lag, target, FLOAT_TOL)
                and _close(uni, target, FLOAT_TOL)
                and _close(recovered, target, FLOAT_TOL)
                and _close(sym, lhs, FLOAT_TOL)
            )
            detail = f"(1+x)^n={target!r} lagrange={lag!r} uniform={uni!r} symmetric={recovered!r}"
            cases.append(Case(f"variable-change n={n} x={x}", ok, detail))
    return cases


def series_xiv(bound: int = 0, seed: int = 0) -> list[Case]:
    rng = random.Random(seed)
    cases = []
    for _ in range(SERIES_POINTS):
        v = rng.uniform(-5.0, 5.0)
        closed = oracles.vcoth_exp(v)
        try:
            series = oracles.vcoth_series(v).value
            ok = _close(series, closed, SERIES_TOL)
            detail = f"series={series!r} exp={closed!r}"
        except OracleDisagreement as exc:
            ok, detail = False, str(exc)
        cases.append(Case(f"series-xiv v={v!r}", ok, detail))
    return cases


SUITES = {
    "integer-n": integer_n,
    "negation": negation,
    "tangent-closed-forms": tangent_closed_forms,
    "variable-change": variable_change,
    "series-xiv": series_xiv,
}


def run_suite(name: str, bound: int = 5, seed: int = 0) -> list[Case]:
    if name not in SUITES:
        raise KeyError(name)
    if not 1 <= bound <= MAX_EXPONENT:
        raise ValueError(f"bound must be in 1..{MAX_EXPONENT}, got {bound}")
    return SUITES[name](bound, seed)
