"""
Closed forms by running the fraction on polynomials
===================================================

The engine is generic over the scalar type, so feeding it rational
functions of z instead of numbers produces the closed form of the
symmetric ratio n z [(1+z)^n + (1-z)^n] / [(1+z)^n - (1-z)^n].
"""

from eulercf import cf_closed_form, check_negation_symmetry, lhs_closed_form

for n in range(1, 6):
    print(f"n={n}:", cf_closed_form("symmetric", n))

# the fraction only sees n^2, so n and -n give the same function
print(all(check_negation_symmetry(n) for n in range(1, 9)))
print(cf_closed_form("symmetric", -4) == lhs_closed_form("symmetric", 4))
