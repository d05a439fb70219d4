"""
Tangents of multiple angles
===========================

Putting z = t sqrt(-1) in the symmetric ratio turns it into a fraction for
tan(n arctan t). Whole n give the multiple-angle formulas; letting n shrink
gives arctan, and letting n grow with n*arctan(t) fixed gives tan.
"""

import math

from eulercf import arctan_cf, cf_closed_form, tan_cf, tan_multiple

print("tan 2phi =", cf_closed_form("tanmult", 2))
print("tan 3phi =", cf_closed_form("tanmult", 3))

t = 0.3
print(tan_multiple(2.5, t).evaluate().value, math.tan(2.5 * math.atan(t)))
print(arctan_cf(t).evaluate().value, math.atan(t))
print(tan_cf(1.0).evaluate().value, math.tan(1.0))
