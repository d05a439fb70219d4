"""
When a continued fraction stops
================================

Lagrange's fraction for (1+x)^n carries partial numerators (j - n)x and
(j + n)x. For a whole number n one of them is zero, the fraction halts,
and its last convergent is the polynomial (1+x)^n itself.
"""

from fractions import Fraction

from eulercf import convergents, detect_termination, lagrange_binomial

x = Fraction(2, 7)
for n in (1, 2, 3, -2):
    family = lagrange_binomial(n, x)
    k = detect_termination(family.stream, 40)
    value = convergents(family.stream, k - 1)[-1].value
    print(f"n={n:>2}  a_{k} = 0  value={value}  (1+x)^n={(1 + x) ** n}")

# a fractional exponent never halts, so we evaluate adaptively instead
report = lagrange_binomial(0.5, 0.2).evaluate(tol=1e-13)
print("sqrt(1.2) ~", report.value, "after", report.depth_used, "levels")
