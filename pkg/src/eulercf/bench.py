"""Continued-fraction depth versus Taylor-series length at a target accuracy."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import count
from typing import Callable, Iterator, Optional

from .engine import convergents, eval_adaptive
from .families import CFFamily

__all__ = ["BenchReport", "ComparatorUnavailable", "taylor_terms", "bench", "TAYLOR_CAP"]

TAYLOR_CAP = 100_000


class ComparatorUnavailable(LookupError):
    pass


@dataclass(frozen=True)
class _Series:
    terms: Callable[[], Iterator[float]]
    tail_bound: Optional[Callable[[int], float]] = None
    diverges: bool = False


@lru_cache(maxsize=None)
def _tan_coeffs(k_max: int) -> tuple:
    # odd coefficients of tan x from tan' = 1 + tan^2
    c = {1: Fraction(1)}
    for k in range(1, k_max):
        m = 2 * k
        c[m + 1] = sum(c[i] * c[m - i] for i in range(1, m, 2)) / (m + 1)
    return tuple(float(c[2 * k + 1]) for k in range(k_max))


@lru_cache(maxsize=None)
def _vcoth_coeffs(k_max: int) -> tuple:
    # v coth v = cosh-series / sinhc-series, divided as power series in v^2
    fact = [Fraction(1)]
    for j in range(1, 2 * k_max + 2):
        fact.append(fact[-1] * j)
    d = []
    for k in range(k_max):
        acc = 1 / fact[2 * k]
        for i in range(k):
            acc -= d[i] / fact[2 * (k - i) + 1]
        d.append(acc)
    return tuple(float(x) for x in d)


def _grow(cache_fn, start=64):
    size = start
    while True:
        coeffs = cache_fn(size)
        for c in coeffs[size // 2 if size > start else 0:]:
            yield c
        size *= 2


def _series_for(family: CFFamily) -> _Series:
    p = {k: float(v) for k, v in family.params.items()}
    name = family.name
    if name == "logcf":
        z = p["z"]

        def terms():
            for k in count():
                yield 2 * z ** (2 * k + 1) / (2 * k + 1)

        return _Series(terms, lambda K: 2 * abs(z) ** (2 * K + 1) / (2 * K + 1) / (1 - z * z))
    if name == "arctan":
        t = p["t"]

        def terms():
            for k in count():
                yield (-1) ** k * t ** (2 * k + 1) / (2 * k + 1)

        return _Series(terms, lambda K: abs(t) ** (2 * K + 1) / (2 * K + 1), diverges=abs(t) > 1)
    if name == "tan":
        th = p["theta"]

        def terms():
            for k, c in enumerate(_grow(_tan_coeffs)):
                yield c * th ** (2 * k + 1)

        return _Series(terms, diverges=abs(th) >= math.pi / 2)
    if name == "vcoth":
        v = p["v"]

        def terms():
            for k, c in enumerate(_grow(_vcoth_coeffs)):
                yield c * v ** (2 * k)

        return _Series(terms, diverges=abs(v) >= math.pi)
    if name in ("lagrange", "uniform"):
        n, x = p["n"], p["x"]
        finite = n.is_integer() and n >= 0

        def terms():
            term = 1.0
            for k in count():
                yield term
                term *= (n - k) / (k + 1) * x
                if finite and k >= n:
                    return

        return _Series(terms, diverges=not finite and abs(x) >= 1)
    raise ComparatorUnavailable(f"comparator unavailable for family {name!r}")


def _reached(approx, target, tol):
    return abs(approx - target) <= tol * abs(target) if target != 0 else abs(approx) <= tol


def taylor_terms(family: CFFamily, tol: float, target: float, cap: int = TAYLOR_CAP):
    """(term count, method): summed directly up to ``cap`` terms, else solved from the tail bound.

    Returns (None, "diverges") outside the radius of convergence.
    """
    series = _series_for(family)
    if series.diverges:
        return None, "diverges"
    total = 0.0
    for k, term in enumerate(series.terms(), start=1):
        total += term
        if _reached(total, target, tol):
            return k, "summed"
        if k >= cap:
            break
    else:
        return None, "exhausted"
    if series.tail_bound is None:
        return None, "capped"
    goal = tol * abs(target)
    hi = cap
    while series.tail_bound(hi) > goal:
        hi *= 2
    lo = cap
    while lo < hi:
        mid = (lo + hi) // 2
        if series.tail_bound(mid) <= goal:
            hi = mid
        else:
            lo = mid + 1
    return lo, "tail-bound"


def cf_depth(family: CFFamily, tol: float, target: float, max_depth: int = 500) -> Optional[int]:
    for c in convergents(family.stream, max_depth):
        if c.denominator != 0 and _reached(float(c.value), target, tol):
            return c.index
    return None


@dataclass(frozen=True)
class BenchReport:
    family: str
    params: dict
    tol: float
    oracle: float
    cf_depth: Optional[int]
    taylor_terms: Optional[int]
    taylor_method: str
    cf_seconds: float
    taylor_seconds: Optional[float]


def _median_time(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def bench(family: CFFamily, tol: float, max_depth: int = 500, repeats: int = 5) -> BenchReport:
    target = family.oracle().value
    terms, method = taylor_terms(family, tol, target)
    depth = cf_depth(family, tol, target, max_depth)
    cf_t = _median_time(lambda: eval_adaptive(family.stream, tol, max_depth, strict=False), repeats)
    taylor_t = None
    if method == "summed":
        series = _series_for(family)

        def run():
            total = 0.0
            for _, term in zip(range(terms), series.terms()):
                total += term
            return total

        taylor_t = _median_time(run, repeats)
    return BenchReport(
        family.name,
        {k: str(v) for k, v in family.params.items()},
        tol,
        target,
        depth,
        terms,
        method,
        cf_t,
        taylor_t,
    )
