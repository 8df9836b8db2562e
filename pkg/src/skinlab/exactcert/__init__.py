"""Exact and certified-interval arithmetic for the inequalities behind the
non-monotonicity argument."""

from .elementary import (
    acos_enclosure,
    acosh_enclosure,
    atan_enclosure,
    cos_enclosure,
    exp_enclosure,
    log_enclosure,
    pi_enclosure,
)
from .interval import RatInterval, sqrt_enclosure, sqrt_interval
from .lemmas import (
    CHECK_IDS,
    CHECKS,
    PROVED,
    REFUTED,
    UNDECIDED,
    CertEntry,
    CertReport,
    alpha_enclosure,
    beta0_enclosure,
    path_constants,
    verify_all,
)
from .surd import Ordering, QuadSurd, surd_compare, surd_pow

from fractions import Fraction as BigRational

__all__ = [
    "BigRational",
    "CHECK_IDS",
    "CHECKS",
    "CertEntry",
    "CertReport",
    "Ordering",
    "PROVED",
    "QuadSurd",
    "REFUTED",
    "RatInterval",
    "UNDECIDED",
    "acos_enclosure",
    "acosh_enclosure",
    "alpha_enclosure",
    "atan_enclosure",
    "beta0_enclosure",
    "cos_enclosure",
    "exp_enclosure",
    "log_enclosure",
    "path_constants",
    "pi_enclosure",
    "sqrt_enclosure",
    "sqrt_interval",
    "surd_compare",
    "surd_pow",
    "verify_all",
]
