"""Euler's continued fractions for binomial powers, tan, arctan, log and v coth v."""

from .closed_forms import cf_closed_form, check_negation_symmetry, lhs_closed_form
from .engine import (
    Convergent,
    EvalReport,
    TermStream,
    convergents,
    detect_termination,
    equivalence_transform,
    eval_adaptive,
    eval_fixed,
)
from .errors import (
    BackwardDivisionError,
    CFError,
    ConvergenceError,
    DomainError,
    IndeterminateConvergent,
    NoTerminationError,
    OracleDisagreement,
    PoleError,
    PoleProximityError,
)
from .exact import BigRational, Polynomial, RationalFunction, poly_gcd, rational_arith
from .families import (
    REGISTRY,
    CFFamily,
    arctan_cf,
    atanh_log_cf,
    lagrange_binomial,
    make_family,
    symmetric_ratio,
    tan_cf,
    tan_multiple,
    uniform_binomial,
    vcoth_cf,
)
from .oracles import OracleResult

__version__ = "0.1.0"
