"""
Convergence tables and a Taylor comparison
==========================================

The command line writes plot-ready tables of convergent against closed
form, and counts how many Taylor terms the same accuracy would take.
"""

from eulercf.cli import main

main(["table", "--family", "tan", "--param", "theta=1.0", "--depths", "1..10"])

# the fraction reaches 1e-12 at z = 0.9 long before the series does
main(["bench", "--family", "logcf", "--param", "z=0.9", "--tol", "1e-12", "--repeats", "3"])
main(["bench", "--family", "arctan", "--param", "t=1", "--tol", "1e-10", "--repeats", "1"])
