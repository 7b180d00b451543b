"""Exact arithmetic in Q, Q[q], Q(q) and the cyclotomic fields Q(zeta_N)."""
from .cyclo import CycloElement, RootPoleError, to_cyclo
from .local import CycloFraction
from .poly import QPoly, poly_gcd, poly_xgcd
from .qnumbers import (
    cyclotomic_polynomial,
    euler_phi,
    q_binomial,
    q_binomial_quotient,
    q_factorial,
    q_integer,
)
from .ratfunc import PoleError, RatFunc, specialize_q1
from .serialize import (
    cyclo_from_json,
    cyclo_to_json,
    ratfunc_from_json,
    ratfunc_to_json,
)

__all__ = [
    "CycloElement",
    "CycloFraction",
    "PoleError",
    "QPoly",
    "RatFunc",
    "RootPoleError",
    "cyclo_from_json",
    "cyclo_to_json",
    "cyclotomic_polynomial",
    "euler_phi",
    "poly_gcd",
    "poly_xgcd",
    "q_binomial",
    "q_binomial_quotient",
    "q_factorial",
    "q_integer",
    "ratfunc_from_json",
    "ratfunc_to_json",
    "specialize_q1",
    "to_cyclo",
]
