"""Generic continued-fraction machinery.

A continued fraction

    b0 + a1/(b1 + a2/(b2 + a3/(b3 + ...)))

is held as a :class:`TermStream`: the leading term ``b0`` plus a function
returning the partial numerator/denominator pair ``(a_k, b_k)`` for
``k >= 1``. Scalars can be floats, :class:`fractions.Fraction`, or any
exact field type with the usual arithmetic (the symbolic checks feed
:class:`eulercf.exact.RationalFunction` through the same code).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Complex
from typing import Any, Callable, Optional, Sequence

from .errors import (
    BackwardDivisionError,
    ConvergenceError,
    IndeterminateConvergent,
    PoleError,
)

__all__ = [
    "TermStream",
    "Convergent",
    "EvalReport",
    "convergents",
    "eval_fixed",
    "eval_adaptive",
    "detect_termination",
    "equivalence_transform",
    "is_floating",
    "TINY",
    "FLOAT_ZERO",
    "DEFAULT_MAX_DEPTH",
]

TINY = 1e-30
FLOAT_ZERO = 1e-300
DEFAULT_MAX_DEPTH = 500
NEAR_ZERO = 1e-10
RESCALE_EXP = 512
_RESCALE_LIMIT = 2.0 ** RESCALE_EXP
POLE_MAGNITUDE = 1e250


def is_floating(x: Any) -> bool:
    """True for inexact scalars (float, complex, numpy floats)."""
    if isinstance(x, (int, Fraction)):
        return False
    return isinstance(x, Complex)


def _div(a, b):
    # int / int must stay exact
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _is_zero(a: Any) -> bool:
    if is_floating(a):
        return abs(a) <= FLOAT_ZERO
    return a == 0


@dataclass(frozen=True)
class TermStream:
    """Leading term ``b0`` and a deterministic generator ``term(k) -> (a_k, b_k)``.

    The stream is conceptually infinite. A finite continued fraction is one
    whose ``a_k`` vanishes at some index.
    """

    b0: Any
    term: Callable[[int], tuple]

    def terms(self, k: int) -> tuple:
        if k < 1:
            raise IndexError(f"term index must be >= 1, got {k}")
        return self.term(k)

    def take(self, depth: int) -> list[tuple]:
        return [self.term(k) for k in range(1, depth + 1)]

    @classmethod
    def from_terms(cls, b0, pairs: Sequence[tuple]) -> "TermStream":
        """Finite stream; indices past the end yield ``(0, 1)``."""
        pairs = tuple(pairs)

        def term(k):
            if k <= len(pairs):
                return pairs[k - 1]
            return (0, 1)

        return cls(b0, term)


@dataclass(frozen=True)
class Convergent:
    numerator: Any
    denominator: Any
    index: int

    @property
    def value(self):
        if self.denominator == 0:
            raise IndeterminateConvergent(self.index)
        return _div(self.numerator, self.denominator)


@dataclass(frozen=True)
class EvalReport:
    value: Any
    depth_used: int
    converged: bool
    terminated_finitely: bool
    est_error: Optional[float] = None


def convergents(stream: TermStream, depth: int) -> list[Convergent]:
    """Convergents 0..depth from the three-term recurrence.

    In floating mode the running pairs are rescaled by 2**-512 whenever a
    magnitude passes 2**512; the values A_k/B_k are unaffected.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    a_prev, b_prev = 1, 0
    a_cur, b_cur = stream.b0, 1
    out = [Convergent(a_cur, b_cur, 0)]
    for k in range(1, depth + 1):
        ak, bk = stream.terms(k)
        a_next = bk * a_cur + ak * a_prev
        b_next = bk * b_cur + ak * b_prev
        a_prev, b_prev, a_cur, b_cur = a_cur, b_cur, a_next, b_next
        if is_floating(a_cur) or is_floating(b_cur):
            if max(abs(a_cur), abs(b_cur)) > _RESCALE_LIMIT:
                a_cur = math.ldexp(a_cur, -RESCALE_EXP)
                b_cur = math.ldexp(b_cur, -RESCALE_EXP)
                a_prev = math.ldexp(a_prev, -RESCALE_EXP)
                b_prev = math.ldexp(b_prev, -RESCALE_EXP)
        out.append(Convergent(a_cur, b_cur, k))
    return out


def eval_fixed(stream: TermStream, depth: int):
    """Value of the depth-``depth`` truncation by backward recurrence (tail 0).

    Exact for exact scalar types.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    tail = 0
    for k in range(depth, 0, -1):
        ak, bk = stream.terms(k)
        den = bk + tail
        if den == 0:
            raise BackwardDivisionError(k)
        try:
            tail = _div(ak, den)
        except ZeroDivisionError:
            raise BackwardDivisionError(k) from None
    return stream.b0 + tail


def _changed(new, old):
    if abs(old) < NEAR_ZERO:
        return abs(new - old)
    return abs(new - old) / abs(old)


def eval_adaptive(
    stream: TermStream,
    tol: float = 1e-15,
    max_depth: int = DEFAULT_MAX_DEPTH,
    *,
    tiny: float = TINY,
    pole_magnitude: float = POLE_MAGNITUDE,
    strict: bool = True,
) -> EvalReport:
    """Evaluate forward until successive convergents agree to ``tol``.

    Floating streams use the modified Lentz product form, with vanishing
    intermediates replaced by ``tiny``. Exact streams (int/Fraction) run
    the three-term recurrence exactly. A zero partial numerator stops the
    iteration with ``terminated_finitely=True``.

    With ``strict=True`` (default) a :class:`ConvergenceError` is raised when
    ``max_depth`` is exhausted; otherwise the unconverged report is returned.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")

    b0 = stream.b0
    floating = is_floating(b0) or is_floating(stream.terms(1)[0]) or is_floating(
        stream.terms(1)[1]
    )
    if floating:
        return _lentz(stream, tol, max_depth, tiny, pole_magnitude, strict)
    return _exact_forward(stream, tol, max_depth, strict)


def _lentz(stream, tol, max_depth, tiny, pole_magnitude, strict):
    value = stream.b0 + 0.0
    f = value if value != 0 else tiny
    c, d = f, 0.0
    change = math.inf
    growing = 0
    for k in range(1, max_depth + 1):
        ak, bk = stream.terms(k)
        if _is_zero(ak):
            return EvalReport(value, k - 1, True, True, 0.0)
        d = bk + ak * d
        if d == 0:
            d = tiny
        c = bk + ak / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        f_new = f * c * d
        if not math.isfinite(abs(f_new)):
            raise PoleError(k, f_new)
        if abs(f_new) > pole_magnitude and abs(f_new) > abs(f):
            growing += 1
            if growing >= 3:
                raise PoleError(k, f_new)
        else:
            growing = 0
        change = _changed(f_new, value)
        f = value = f_new
        if change <= tol:
            return EvalReport(value, k, True, False, float(change))
    report = EvalReport(value, max_depth, False, False, float(change))
    if strict:
        raise ConvergenceError(report)
    return report


def _exact_forward(stream, tol, max_depth, strict):
    a_prev, b_prev = 1, 0
    a_cur, b_cur = stream.b0, 1
    value = Fraction(stream.b0)
    change = math.inf
    for k in range(1, max_depth + 1):
        ak, bk = stream.terms(k)
        if ak == 0:
            return EvalReport(value, k - 1, True, True, 0.0)
        a_prev, b_prev, a_cur, b_cur = (
            a_cur,
            b_cur,
            bk * a_cur + ak * a_prev,
            bk * b_cur + ak * b_prev,
        )
        if b_cur == 0:
            continue
        new = Fraction(a_cur, 1) / b_cur
        change = _changed(new, value)
        value = new
        if change <= tol:
            return EvalReport(value, k, True, False, float(change))
    report = EvalReport(value, max_depth, False, False, float(change))
    if strict:
        raise ConvergenceError(report)
    return report


def detect_termination(stream: TermStream, scan_depth: int) -> Optional[int]:
    """Smallest k <= scan_depth with a_k == 0, or None.

    Exact scalars are compared exactly; floats against ``|a_k| <= 1e-300``.
    """
    if scan_depth < 1:
        raise ValueError("scan_depth must be >= 1")
    for k in range(1, scan_depth + 1):
        if _is_zero(stream.terms(k)[0]):
            return k
    return None


def equivalence_transform(stream: TermStream, scale: Callable[[int], Any]) -> TermStream:
    """Rescale terms by nonzero factors c_k, leaving every convergent value intact.

    a_k -> c_k c_{k-1} a_k and b_k -> c_k b_k, with c_0 = 1.
    """

    def factor(k):
        if k == 0:
            return 1
        c = scale(k)
        if c == 0:
            raise ValueError(f"zero scale factor at k={k}")
        return c

    def term(k):
        ak, bk = stream.terms(k)
        ck = factor(k)
        return ak * ck * factor(k - 1), bk * ck

    return TermStream(stream.b0, term)
