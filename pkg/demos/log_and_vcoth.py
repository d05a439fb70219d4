"""
Logarithms and v coth v
=======================

The n -> 0 limit of the symmetric ratio gives a fraction for
log((1+z)/(1-z)); a second limit gives v coth v, which also equals a ratio
of two even factorial series.
"""

import math

from eulercf import atanh_log_cf, vcoth_cf
from eulercf.oracles import vcoth_exp, vcoth_series

for z in (0.1, 0.5, 0.9):
    report = atanh_log_cf(z).evaluate(tol=1e-14)
    print(f"z={z}: {report.value!r} in {report.depth_used} levels, log ratio {math.log((1 + z) / (1 - z))!r}")

for v in (0.1, 1.0, 4.0):
    print(v, vcoth_cf(v).evaluate().value, vcoth_series(v).value, vcoth_exp(v))
