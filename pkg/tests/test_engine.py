import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulercf import (
    BackwardDivisionError,
    ConvergenceError,
    IndeterminateConvergent,
    PoleError,
    TermStream,
    convergents,
    detect_termination,
    equivalence_transform,
    eval_adaptive,
    eval_fixed,
)
from eulercf.families import (
    atanh_log_cf,
    lagrange_binomial,
    symmetric_ratio,
    tan_cf,
    uniform_binomial,
    vcoth_cf,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
nonzero_rationals = rationals.filter(lambda q: q != 0)


@st.composite
def rational_streams(draw, depth=12):
    b0 = draw(rationals)
    pairs = draw(st.lists(st.tuples(rationals, rationals), min_size=depth, max_size=depth))
    return TermStream.from_terms(b0, pairs)


# -- convergents --------------------------------------------------------------


def test_convergents_tan_at_zero_are_zero():
    cs = convergents(tan_cf(0.0).stream, 3)
    assert [c.value for c in cs] == [0, 0, 0, 0]


def test_convergent_symmetric_n2_half():
    c = convergents(symmetric_ratio(2, Fraction(1, 2)).stream, 1)[1]
    assert c.value == Fraction(5, 4)


@given(rational_streams(depth=1))
def test_determinant_base_case(stream):
    c0, c1 = convergents(stream, 1)
    assert c1.numerator * c0.denominator - c0.numerator * c1.denominator == stream.terms(1)[0]


@settings(max_examples=150)
@given(rational_streams())
def test_determinant_identity_exact(stream):
    cs = convergents(stream, 12)
    prod = Fraction(1)
    for k in range(1, 13):
        prod *= stream.terms(k)[0]
        det = cs[k].numerator * cs[k - 1].denominator - cs[k - 1].numerator * cs[k].denominator
        assert det == (-1) ** (k - 1) * prod


def test_float_rescaling_keeps_values():
    # b_k = 1e100 overflows the unscaled recurrence by k = 4
    stream = TermStream(1.0, lambda k: (1.0, 1e100))
    cs = convergents(stream, 20)
    for c in cs:
        assert math.isfinite(c.numerator) and math.isfinite(c.denominator)
    assert cs[20].value == pytest.approx(eval_fixed(stream, 20), rel=1e-15)
    assert cs[20].value == pytest.approx(1.0 + 1e-100, rel=1e-15)


def test_indeterminate_convergent():
    stream = TermStream.from_terms(1, [(1, 0)])
    c = convergents(stream, 1)[1]
    assert c.denominator == 0
    with pytest.raises(IndeterminateConvergent):
        c.value


def test_negative_depth_rejected():
    with pytest.raises(ValueError):
        convergents(vcoth_cf(1.0).stream, -1)
    with pytest.raises(ValueError):
        eval_fixed(vcoth_cf(1.0).stream, -1)


# -- eval_fixed ---------------------------------------------------------------


@pytest.mark.parametrize("depth", [2, 3, 5, 10])
@pytest.mark.parametrize("x", [Fraction(7, 10), Fraction(-1, 3), Fraction(5)])
def test_eval_fixed_lagrange_n1(x, depth):
    assert eval_fixed(lagrange_binomial(1, x).stream, depth) == 1 + x


@pytest.mark.parametrize("depth", [4, 5, 9])
def test_eval_fixed_lagrange_n2(depth):
    assert eval_fixed(lagrange_binomial(2, 1).stream, depth) == 4


@pytest.mark.parametrize("depth", [0, 1, 7, 40])
def test_eval_fixed_vcoth_zero(depth):
    assert eval_fixed(vcoth_cf(0).stream, depth) == 1


def test_eval_fixed_division_by_zero():
    stream = TermStream.from_terms(0, [(1, 0)])
    with pytest.raises(BackwardDivisionError, match="backward pass"):
        eval_fixed(stream, 1)


# -- eval_adaptive ------------------------------------------------------------


def test_adaptive_symmetric_terminates_exactly():
    report = eval_adaptive(symmetric_ratio(3, Fraction(1, 2)).stream, 1e-15)
    assert report.terminated_finitely and report.converged
    assert report.value == Fraction(21, 13)
    report = eval_adaptive(symmetric_ratio(3, 0.5).stream, 1e-15)
    assert report.terminated_finitely
    assert report.value == pytest.approx(21 / 13, rel=1e-15)


def test_adaptive_log3():
    report = eval_adaptive(atanh_log_cf(0.5).stream, 1e-13)
    assert report.converged and not report.terminated_finitely
    assert report.value == pytest.approx(1.0986122886681098, rel=1e-13)
    assert report.est_error <= 1e-13


def test_adaptive_vcoth1():
    report = eval_adaptive(vcoth_cf(1.0).stream, 1e-13)
    assert report.value == pytest.approx(1.3130352854993312, rel=1e-13)


def test_adaptive_not_converged():
    stream = atanh_log_cf(0.99).stream
    with pytest.raises(ConvergenceError) as info:
        eval_adaptive(stream, 1e-15, max_depth=5)
    report = info.value.report
    assert not report.converged and report.depth_used == 5
    assert report.est_error > 1e-15
    loose = eval_adaptive(stream, 1e-15, max_depth=5, strict=False)
    assert loose == report


def test_adaptive_pole_detected():
    # convergents of tan climb monotonically toward tan(1.5707) ~ 1.1e4
    stream = tan_cf(1.5707).stream
    with pytest.raises(PoleError):
        eval_adaptive(stream, 1e-15, pole_magnitude=100.0)


def test_adaptive_tiny_substitution_b0_zero():
    # b0 = 0 must not poison the product form
    report = eval_adaptive(tan_cf(1e-20).stream, 1e-15)
    assert report.value == pytest.approx(1e-20, rel=1e-15)


def test_adaptive_argument_checks():
    with pytest.raises(ValueError):
        eval_adaptive(vcoth_cf(1.0).stream, 0.0)
    with pytest.raises(ValueError):
        eval_adaptive(vcoth_cf(1.0).stream, 1e-10, max_depth=0)


# -- termination --------------------------------------------------------------


def test_detect_termination_symmetric_n4():
    assert detect_termination(symmetric_ratio(4, 0.3).stream, 20) == 4
    assert detect_termination(symmetric_ratio(4, Fraction(3, 10)).stream, 20) == 4


@pytest.mark.parametrize("n", [m for m in range(-12, 13) if m])
def test_detect_termination_lagrange_index(n):
    stream = lagrange_binomial(n, Fraction(2, 7)).stream
    brute = next(k for k in range(1, 100) if stream.terms(k)[0] == 0)
    expected = 2 * n if n > 0 else 2 * abs(n) + 1
    assert brute == expected
    assert detect_termination(stream, 60) == expected


def test_detect_termination_lagrange_n3():
    assert detect_termination(lagrange_binomial(3, 0.25).stream, 20) == 6


@pytest.mark.parametrize("z", [0.5, -0.3, Fraction(1, 9)])
def test_detect_termination_log_absent(z):
    assert detect_termination(atanh_log_cf(z).stream, 200) is None


@settings(max_examples=60, deadline=None)
@given(
    st.integers(-8, 8).filter(bool),
    st.fractions(min_value=Fraction(-19, 20), max_value=Fraction(19, 20), max_denominator=30).filter(bool),
    st.integers(0, 6),
)
def test_fixed_value_stable_after_termination(n, z, extra):
    stream = symmetric_ratio(n, z).stream
    k = detect_termination(stream, 40)
    assert k == abs(n)
    assert eval_fixed(stream, k - 1 + extra) == eval_fixed(stream, k - 1)


# -- equivalence transform ----------------------------------------------------


def test_equivalence_identity():
    stream = vcoth_cf(Fraction(3, 2)).stream
    same = equivalence_transform(stream, lambda k: 1)
    assert same.take(10) == stream.take(10)
    assert same.b0 == stream.b0


def test_equivalence_uniform_scaling_exact():
    x = Fraction(1, 5)
    stream = uniform_binomial(Fraction(1, 2), x).stream
    c = 1 / (1 + x / 2)
    scaled = equivalence_transform(stream, lambda k: c if k >= 2 else 1)
    # every b_k (k >= 2) loses its (1 + x/2) factor
    assert scaled.terms(3)[1] == 5
    base, new = convergents(stream, 8), convergents(scaled, 8)
    for a, b in zip(base[1:], new[1:]):
        assert a.value == b.value


@settings(max_examples=100)
@given(rational_streams(depth=8), st.lists(nonzero_rationals, min_size=8, max_size=8))
def test_equivalence_preserves_values_and_scales_determinants(stream, factors):
    scaled = equivalence_transform(stream, lambda k: factors[k - 1])
    base, new = convergents(stream, 8), convergents(scaled, 8)
    for k in range(1, 9):
        if base[k].denominator != 0:
            assert new[k].value == base[k].value
        det = base[k].numerator * base[k - 1].denominator - base[k - 1].numerator * base[k].denominator
        det_new = new[k].numerator * new[k - 1].denominator - new[k - 1].numerator * new[k].denominator
        factor = math.prod(factors[:k]) * math.prod(factors[: k - 1])
        assert det_new == det * factor


def test_equivalence_zero_scale():
    scaled = equivalence_transform(vcoth_cf(1.0).stream, lambda k: 0 if k == 3 else 2)
    scaled.terms(2)
    with pytest.raises(ValueError, match="zero scale factor"):
        scaled.terms(3)


# -- fixed vs adaptive --------------------------------------------------------

_FAMILY_SAMPLES = st.one_of(
    st.floats(-0.9, 0.9).map(atanh_log_cf),
    st.floats(-5, 5).map(vcoth_cf),
    st.floats(-1.3, 1.3).map(tan_cf),
    st.tuples(st.floats(-4, 4), st.floats(-0.8, 0.8)).map(lambda p: symmetric_ratio(*p)),
)


@settings(max_examples=200, deadline=None)
@given(_FAMILY_SAMPLES, st.sampled_from([1e-8, 1e-11, 1e-14]))
def test_fixed_and_adaptive_agree(family, tol):
    report = eval_adaptive(family.stream, tol)
    assert report.converged
    if report.est_error is not None:
        assert report.est_error <= tol
    fixed = eval_fixed(family.stream, report.depth_used)
    assert abs(fixed - report.value) <= 10 * tol * max(1.0, abs(report.value))
