"""The nine certified inequalities and the report that collects them.

Each check produces enclosures of its two sides at a given precision.  The
precision starts at START_BITS and doubles until the enclosures separate or
CAP_BITS is passed.  A check is "proved" only on strict separation in the
stated direction; strict separation the other way is "refuted".
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .elementary import acos_enclosure, acosh_enclosure, cos_enclosure, pi_enclosure
from .interval import RatInterval, exact_sqrt, sqrt_interval
from .surd import CAP_BITS, START_BITS, Ordering, QuadSurd, surd_compare_bits, surd_pow

PROVED = "proved"
REFUTED = "refuted"
UNDECIDED = "undecided-at-precision"

_FLIP = {"<": ">", ">": "<"}


def p1(t: Fraction) -> Fraction:
    return 1 + 8 * t**2 + 21 * t**4 - 2 * t**6


def p2(t: Fraction) -> Fraction:
    return 2 * t**2 * (1 + t**2) ** 2


def p3(t: Fraction) -> Fraction:
    return 4 * t**5 * (3 - t**2)


@dataclass(frozen=True)
class PathConstants:
    """Exact values at a rational parameter: cos theta, cosh(ell/2) and 1/cosh L."""

    t: Fraction
    cos_theta: Fraction
    cosh_half_ell: Fraction
    sech_big_l: Fraction


def path_constants(t) -> PathConstants:
    t = Fraction(t)
    c1 = p1(t) / p2(t)
    # cosh^2 L = (1 + cosh 2L) / 2 with 2L = ell / 2
    cosh_l = exact_sqrt((1 + c1) / 2)
    return PathConstants(t, p3(t) / p2(t), c1, 1 / cosh_l)


def alpha_enclosure(t, bits: int) -> RatInterval:
    """(pi + acos(p3/p2)) / acosh(p1/p2), which equals (pi + theta) / (2L)."""
    c = path_constants(t)
    num = pi_enclosure(bits) + acos_enclosure(RatInterval.point(c.cos_theta), bits)
    return num / acosh_enclosure(RatInterval.point(c.cosh_half_ell), bits)


def beta0_enclosure(t, bits: int) -> RatInterval:
    """beta(0, t) = 2 acos(1/cosh L) / acosh(p1/p2)."""
    c = path_constants(t)
    num = 2 * acos_enclosure(RatInterval.point(c.sech_big_l), bits)
    return num / acosh_enclosure(RatInterval.point(c.cosh_half_ell), bits)


def _cos_pi_multiple(q: Fraction, bits: int) -> RatInterval:
    return cos_enclosure((pi_enclosure(bits) * q).rounded(bits + 8), bits=bits)


# -- side evaluators: bits -> (left, right) -------------------------------


def _t0_sides(bits: int) -> tuple[RatInterval, RatInterval]:
    # enclose sqrt 3, then the inner sum, then the outer root
    r3 = sqrt_interval(RatInterval.point(3), bits)
    inner = sqrt_interval((44 + 26 * r3).rounded(bits), bits)
    return (5 + 3 * r3 - inner) / 2, RatInterval.point(Fraction(2, 5))


def _cos_lemma(const: Fraction, q: Fraction) -> Callable[[int], tuple[RatInterval, RatInterval]]:
    def sides(bits: int):
        return RatInterval.point(const), _cos_pi_multiple(q, bits)

    return sides


def _alpha_1_sides(bits: int):
    return alpha_enclosure(Fraction(1, 2), bits), alpha_enclosure(Fraction(1), bits)


def _alpha_beta_sides(bits: int):
    half, two_fifths = Fraction(1, 2), Fraction(2, 5)
    left = alpha_enclosure(half, bits) - alpha_enclosure(two_fifths, bits)
    right = beta0_enclosure(half, bits) - beta0_enclosure(two_fifths, bits)
    return left, right


A5_LEFT = QuadSurd.rational(25**20, 5) * surd_pow(QuadSurd(7, 3, 5), 27)
A5_RIGHT = QuadSurd.rational(2**27, 14) * surd_pow(QuadSurd(137, 36, 14), 20)
A7_LEFT = QuadSurd.rational(6728**43, 14) * surd_pow(QuadSurd(137, 36, 14), 46)
A7_RIGHT = QuadSurd.rational(25**46, 37169) * surd_pow(QuadSurd(43897, 225, 37169), 43)


@dataclass(frozen=True)
class Check:
    id: str
    left_text: str
    relation: str  # "<" or ">"
    right_text: str
    sides: Callable[[int], tuple[RatInterval, RatInterval]] | None = None
    surds: tuple[QuadSurd, QuadSurd] | None = None

    @property
    def statement(self) -> str:
        return f"{self.left_text} {self.relation} {self.right_text}"

    def negated(self) -> "Check":
        return Check(self.id, self.left_text, _FLIP[self.relation], self.right_text, self.sides, self.surds)


CHECKS: tuple[Check, ...] = (
    Check("t0", "(5 + 3*sqrt(3) - sqrt(44 + 26*sqrt(3)))/2", "<", "2/5", sides=_t0_sides),
    Check("A1", "11/25", "<", "cos(7*pi/20)", sides=_cos_lemma(Fraction(11, 25), Fraction(7, 20))),
    Check("A2", "1136/4205", ">", "cos(5*pi/12)", sides=_cos_lemma(Fraction(1136, 4205), Fraction(5, 12))),
    Check("A3", "5/9", ">", "cos(19*pi/60)", sides=_cos_lemma(Fraction(5, 9), Fraction(19, 60))),
    Check("A4", "116/225", "<", "cos(13*pi/40)", sides=_cos_lemma(Fraction(116, 225), Fraction(13, 40))),
    Check("A5", "25^20 (7 + 3*sqrt(5))^27", ">", "2^27 (137 + 36*sqrt(14))^20", surds=(A5_LEFT, A5_RIGHT)),
    Check(
        "A7",
        "6728^43 (137 + 36*sqrt(14))^46",
        "<",
        "25^46 (43897 + 225*sqrt(37169))^43",
        surds=(A7_LEFT, A7_RIGHT),
    ),
    Check("alpha_1", "alpha(1/2)", ">", "alpha(1)", sides=_alpha_1_sides),
    Check(
        "alpha_beta_2_5",
        "alpha(1/2) - alpha(2/5)",
        ">",
        "beta(0, 1/2) - beta(0, 2/5)",
        sides=_alpha_beta_sides,
    ),
)

CHECK_IDS = tuple(c.id for c in CHECKS)


@dataclass
class CertEntry:
    id: str
    statement: str
    verdict: str
    precision_bits: int
    elapsed_ms: float
    left_width: float | None = None
    right_width: float | None = None

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "verdict": self.verdict,
            "precision_bits": self.precision_bits,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class CertReport:
    entries: list[CertEntry] = field(default_factory=list)

    @property
    def all_proved(self) -> bool:
        return bool(self.entries) and all(e.verdict == PROVED for e in self.entries)

    def failures(self) -> list[str]:
        return [e.id for e in self.entries if e.verdict != PROVED]

    def verdicts(self) -> dict[str, str]:
        return {e.id: e.verdict for e in self.entries}

    def to_json(self) -> str:
        return json.dumps([e.as_json() for e in self.entries], indent=2)

    def as_records(self) -> list[dict]:
        return [asdict(e) for e in self.entries]


def _verdict(relation: str, order: Ordering) -> str:
    if order is Ordering.UNDECIDED or order is Ordering.EQUAL:
        return UNDECIDED
    holds = (order is Ordering.LESS) == (relation == "<")
    return PROVED if holds else REFUTED


def run_check(check: Check) -> CertEntry:
    start = time.perf_counter()
    lw = rw = None
    if check.surds is not None:
        order, bits = surd_compare_bits(*check.surds)
    else:
        bits = START_BITS
        order = Ordering.UNDECIDED
        while bits <= CAP_BITS:
            left, right = check.sides(bits)
            lw, rw = float(left.width()), float(right.width())
            if left.strictly_below(right):
                order = Ordering.LESS
                break
            if left.strictly_above(right):
                order = Ordering.GREATER
                break
            bits *= 2
        bits = min(bits, CAP_BITS)
    elapsed = (time.perf_counter() - start) * 1000
    return CertEntry(check.id, check.statement, _verdict(check.relation, order), bits, round(elapsed, 3), lw, rw)


def verify_all(only: Iterable[str] | None = None, negate: Iterable[str] = ()) -> CertReport:
    """Run the checks (all, or the ids in ``only``) in fixed id order.

    Ids in ``negate`` are run with the relation reversed, which should turn
    a proof into a refutation.
    """
    wanted = set(CHECK_IDS if only is None else only)
    unknown = (wanted | set(negate)) - set(CHECK_IDS)
    if unknown:
        raise KeyError(f"unknown check ids: {sorted(unknown)}")
    flip = set(negate)
    report = CertReport()
    for check in CHECKS:
        if check.id not in wanted:
            continue
        report.entries.append(run_check(check.negated() if check.id in flip else check))
    return report
