"""Acceptance checks, one test per criterion, each with its wall-clock limit."""

import io
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from eulercf import (
    RationalFunction,
    TermStream,
    cf_closed_form,
    check_negation_symmetry,
    convergents,
    detect_termination,
    equivalence_transform,
    eval_adaptive,
    eval_fixed,
    lhs_closed_form,
)
from eulercf import cli, verify
from eulercf.families import (
    arctan_cf,
    atanh_log_cf,
    lagrange_binomial,
    symmetric_ratio,
    tan_cf,
    uniform_binomial,
    vcoth_cf,
)
from eulercf.oracles import binomial_power, symmetric_lhs, tan_addition, vcoth_exp, vcoth_series


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def nonzero(lo, hi):
    return [n for n in range(lo, hi + 1) if n]


@pytest.mark.criterion(1, "integer-n closed forms")
def test_integer_n_closed_forms():
    z = RationalFunction.variable("z")
    stated = {1: RationalFunction(1, 1, "z"), 2: 1 + z * z, 3: 3 * (1 + 3 * z * z) / (3 + z * z)}
    with within(5):
        for n in nonzero(-3, 3):
            assert cf_closed_form("symmetric", n) == stated[abs(n)]
        for n in nonzero(-12, 12):
            if abs(n) >= 4:
                assert cf_closed_form("symmetric", n) == lhs_closed_form("symmetric", n)


@pytest.mark.criterion(2, "tangent closed forms")
def test_tangent_closed_forms():
    t = RationalFunction.variable("t")
    rng = random.Random(11)
    with within(5):
        assert cf_closed_form("tanmult", 2) == 2 * t / (1 - t * t)
        assert cf_closed_form("tanmult", 3) == (3 * t - t * t * t) / (1 - 3 * t * t)
        for n in range(1, 13):
            form = cf_closed_form("tanmult", n)
            checked = 0
            while checked < 20:
                q = F(rng.randint(-99, 99), rng.randint(1, 40))
                try:
                    expected = tan_addition(n, q)
                except ZeroDivisionError:
                    continue
                assert form(q) == expected, (n, q)
                checked += 1


@pytest.mark.criterion(3, "negation symmetry")
def test_negation_symmetry():
    rng = random.Random(7)
    with within(5):
        for n in range(1, 13):
            assert check_negation_symmetry(n)
        for _ in range(200):
            n = rng.uniform(-5, 5)
            z = rng.uniform(-0.9, 0.9)
            plus, minus = symmetric_lhs(n, z).value, symmetric_lhs(-n, z).value
            assert abs(plus - minus) <= 1e-13
            cf_plus = symmetric_ratio(n, z).evaluate().value
            cf_minus = symmetric_ratio(-n, z).evaluate().value
            assert abs(cf_plus - cf_minus) <= 1e-13


@pytest.mark.criterion(4, "finite termination of the Lagrange fraction")
def test_finite_termination():
    rng = random.Random(4)
    with within(5):
        for n in nonzero(-12, 12):
            predicted = 2 * n if n > 0 else 2 * abs(n) + 1
            for _ in range(10):
                x = F(rng.randint(-60, 60), rng.randint(1, 30))
                if x in (0, -1):
                    x = F(1, 7)
                stream = lagrange_binomial(n, x).stream
                assert detect_termination(stream, 4 * abs(n) + 4) == predicted
                # a zero partial numerator makes the fraction equal its previous convergent;
                # A/B is used since the backward pass may meet a vanishing inner tail
                cs = convergents(stream, predicted + 5)
                exact = cs[predicted - 1].value
                assert exact == (1 + x) ** n, (n, x)
                # later convergents are the terminal one times a tail continuant, which may vanish
                assert all(c.value == exact for c in cs[predicted:] if c.denominator != 0)


@pytest.mark.criterion(5, "transcendental families against oracles")
def test_transcendental_families():
    rng = random.Random(5)
    cases = [
        (tan_cf, -1.3, 1.3),
        (arctan_cf, -10.0, 10.0),
        (atanh_log_cf, -0.95, 0.95),
        (vcoth_cf, -5.0, 5.0),
    ]
    with within(30):
        for ctor, lo, hi in cases:
            for _ in range(200):
                family = ctor(rng.uniform(lo, hi))
                value = family.evaluate(1e-15).value
                oracle = family.oracle().value
                assert abs(value - oracle) <= 1e-12, (family.name, family.params, value, oracle)


@pytest.mark.criterion(6, "dual series and exponential representations of v coth v")
def test_vcoth_dual_representation():
    rng = random.Random(6)
    with within(5):
        for _ in range(200):
            v = rng.uniform(-5, 5)
            assert abs(vcoth_series(v).value - vcoth_exp(v)) <= 1e-13


@pytest.mark.criterion(7, "variable-change consistency")
def test_variable_change():
    with within(5):
        for n in (0.5, 2.5, -1.5):
            for x in (1 / 5, 1 / 3, 1 / 2):
                target = binomial_power(n, x).value
                assert abs(lagrange_binomial(n, x).evaluate().value - target) <= 1e-12
                assert abs(uniform_binomial(n, x).evaluate().value - target) <= 1e-12
                z = x / (2 + x)
                sym = symmetric_ratio(n, z).evaluate().value
                assert abs(sym - symmetric_lhs(n, z).value) <= 1e-12
                assert abs((sym + n * z) / (sym - n * z) - target) <= 1e-12


def _random_stream(rng, depth):
    def q():
        return F(rng.randint(-30, 30), rng.randint(1, 12))

    return TermStream.from_terms(q(), [(q(), q()) for _ in range(depth)])


@pytest.mark.criterion(8, "engine properties")
def test_engine_properties():
    rng = random.Random(8)
    with within(10):
        for _ in range(100):
            stream = _random_stream(rng, 12)
            cs = convergents(stream, 12)
            prod = F(1)
            for k in range(1, 13):
                prod *= stream.terms(k)[0]
                det = cs[k].numerator * cs[k - 1].denominator - cs[k - 1].numerator * cs[k].denominator
                assert det == (-1) ** (k - 1) * prod

            factors = [F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)) for _ in range(12)]
            scaled = equivalence_transform(stream, lambda k: factors[k - 1])
            for a, b in zip(cs, convergents(scaled, 12)):
                if a.denominator != 0:
                    assert a.value == b.value

        samples = [vcoth_cf(rng.uniform(-5, 5)) for _ in range(50)]
        samples += [atanh_log_cf(rng.uniform(-0.9, 0.9)) for _ in range(50)]
        samples += [tan_cf(rng.uniform(-1.3, 1.3)) for _ in range(50)]
        for family in samples:
            for tol in (1e-8, 1e-11, 1e-14):
                report = eval_adaptive(family.stream, tol)
                fixed = eval_fixed(family.stream, report.depth_used)
                assert abs(fixed - report.value) <= 10 * tol * max(1.0, abs(report.value))


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return cli.main(list(argv), out, err), out.getvalue()


@pytest.mark.criterion(9, "CLI determinism and exit codes")
def test_cli_determinism_and_exit_codes(monkeypatch):
    configs = [
        ("table", "--family", "tan", "--param", "theta=1.0", "--depths", "1..20"),
        ("table", "--family", "symmetric", "--param", "n=4", "--param", "z=0.3", "--depths", "1..10"),
        ("table", "--family", "vcoth", "--param", "v=2", "--depths", "0..15", "--format", "json"),
    ]
    for argv in configs:
        first, second = _cli(*argv), _cli(*argv)
        assert first[0] == 0
        assert first[1].encode() == second[1].encode()

    assert _cli("eval", "--family", "vcoth", "--param", "v=1")[0] == 0
    assert _cli("verify", "--suite", "negation", "--bound", "4")[0] == 0
    assert _cli("eval", "--family", "logcf", "--param", "z=1.5")[0] == 1
    assert _cli("eval", "--family", "bogus", "--param", "v=1")[0] == 1
    assert _cli("verify", "--suite", "integer-n", "--bound", "99")[0] == 1
    assert _cli("bench", "--family", "symmetric", "--param", "n=2.5", "--param", "z=0.4")[0] == 1
    assert _cli("eval", "--family", "logcf", "--param", "z=0.99", "--max-depth", "5")[0] == 2

    monkeypatch.setattr(verify, "check_negation_symmetry", lambda n: n != 2)
    assert _cli("verify", "--suite", "negation", "--bound", "4")[0] == 3
