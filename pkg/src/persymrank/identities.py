"""Summation identities over a rank distribution and the solution count R_{q,n}^{(k)}.

All arithmetic is exact (``int`` / ``Fraction``); nothing is compared with a
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import closedform
from .census import RankDistribution, census
from .poly import ExactPoly, Y, frac_str

Gammas = Union[RankDistribution, Sequence[int]]


class InconsistentGammas(ArithmeticError):
    """A quantity that must be an integer came out fractional."""


class UnsupportedSource(ValueError):
    pass


def _counts(g: Gammas) -> tuple[int, ...]:
    return g.counts if isinstance(g, RankDistribution) else tuple(g)


def _p2(e: int) -> Fraction:
    return Fraction(2) ** e


def moment(dist: Gammas, weight_exponent: int) -> Fraction:
    """``sum_i Gamma_i * 2^(weight_exponent * i)``, exactly."""
    return sum((g * _p2(weight_exponent * i) for i, g in enumerate(_counts(dist))), Fraction(0))


def r_qnk(q: int, n: int, k: int, gammas: Gammas) -> int:
    """Number of solutions of the q-fold bilinear system, from the rank counts."""
    if q < 1:
        raise ValueError("q must be >= 1")
    counts = _counts(gammas)
    if isinstance(gammas, RankDistribution) and (gammas.n, gammas.k) != (n, k):
        raise ValueError(f"distribution is for (n,k)=({gammas.n},{gammas.k}), not ({n},{k})")
    val = _p2(q * (2 * n + k) - (k + 1) * n) * moment(counts, -q)
    if val.denominator != 1:
        raise InconsistentGammas(f"R_{{{q},{n}}}^({k}) = {val} is not an integer")
    return val.numerator


# ---------------------------------------------------------------------------
# right-hand sides
# ---------------------------------------------------------------------------


def rhs_tuple_count(n: int, k: int) -> int:
    return 2 ** ((k + 1) * n)


def rhs_r1(n: int, k: int) -> int:
    return 2 ** (2 * n) + 2**k - 1


def rhs_first_moment(n: int, k: int) -> Fraction:
    return _p2(n + k * (n - 1)) + _p2((k - 1) * n) - _p2((k - 1) * n - k)


def rhs_second_moment(n: int, k: int) -> Fraction:
    return (
        _p2(n + k * (n - 2))
        + _p2(-n + k * (n - 2)) * (3 * 2**k - 3)
        + _p2(-2 * n + k * (n - 2)) * (6 * _p2(k - 1) - 6)
        + _p2(-3 * n + k * n)
        - 6 * _p2(n * (k - 3) - k)
        + 8 * _p2(-3 * n + k * (n - 2))
    )


def rhs_k10(n: int) -> tuple[int, int, int]:
    """The three k = 10 identities, as stated (not derived from the general ones)."""
    Yv = 2**n
    return (
        Yv**11,
        Yv**11 + 1023 * Yv**9,
        Yv**11 + 3069 * Yv**9 + 3066 * Yv**8 + 1042440 * Yv**7,
    )


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": frac_str(self.lhs), "rhs": frac_str(self.rhs),
                "pass": self.passed}


@dataclass
class MomentReport:
    n: int
    k: int
    source: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "source": self.source, "pass": self.passed,
                "checks": [c.to_json() for c in self.checks]}


def gammas_from(n: int, k: int, source: str, workers: int | None = None) -> tuple[int, ...]:
    if source == "census":
        return census(n, k, workers=workers).counts
    if source == "closedform":
        try:
            return closedform.closedform_counts(n, k)
        except closedform.FormulaNotAsserted as exc:
            raise UnsupportedSource(f"closed forms do not cover (n,k)=({n},{k}): {exc}") from exc
    raise UnsupportedSource(f"unknown source {source!r}")


def verify_moments(n: int, k: int, source: str = "census", workers: int | None = None) -> MomentReport:
    g = gammas_from(n, k, source, workers)
    rep = MomentReport(n, k, source)
    rep.checks.append(Check("tuple_count", moment(g, 0), Fraction(rhs_tuple_count(n, k))))
    rep.checks.append(Check("r1_solution_count", Fraction(r_qnk(1, n, k, g)),
                            Fraction(rhs_r1(n, k))))
    rep.checks.append(Check("first_moment", moment(g, -1), rhs_first_moment(n, k)))
    rep.checks.append(Check("second_moment", moment(g, -2), rhs_second_moment(n, k)))
    if k == 10:
        lhs = (
            sum(g),
            sum(c * 2 ** (10 - i) for i, c in enumerate(g)),
            sum(c * 2 ** (20 - 2 * i) for i, c in enumerate(g)),
        )
        for line, (a, b) in enumerate(zip(lhs, rhs_k10(n)), start=1):
            rep.checks.append(Check(f"k10_weighted_sum_{line}", Fraction(a), Fraction(b)))
    return rep


# ---------------------------------------------------------------------------
# R_{4,n}^{(10)} as a polynomial, and the two conflicting printed coefficients
# ---------------------------------------------------------------------------


def r4_k10_poly() -> ExactPoly:
    """R_{4,n}^{(10)} as a polynomial in Y, from the k = 10 rank table."""
    s = sum((closedform.K10_TABLE[i] * 2 ** (40 - 4 * i) for i in range(11)), ExactPoly())
    coeffs = s.y_coeffs()
    if any(coeffs[:3]):
        raise InconsistentGammas("2^40 * sum Gamma_i 2^-4i is not divisible by Y^3")
    return ExactPoly.from_y_coeffs(coeffs[3:])


R4_TARGETS = {1: 587 * 2**31, 2: 6361 * 2**28, 3: 1552553 * 2**21}


def _printed_r4(c2: int) -> ExactPoly:
    return (
        Y**8 + 15345 * Y**6 + 107310 * Y**5 + 37128000 * Y**4 + 329001120 * Y**3
        + c2 * 2**8 * Y**2 + 26043255 * 2**12 * Y + 2**16 * 14881860
    )


def _bracket_y5(gamma7_y5: int) -> Fraction:
    """Coefficient of Y^2 in R_{4,n}^{(10)} from the printed 2^{5n} bracket."""
    return 2**40 * (
        Fraction(-45028608, 2**40) + Fraction(78214752, 2**36) - Fraction(38376240, 2**32)
        + Fraction(gamma7_y5, 2**28) + Fraction(72723, 2**24) + Fraction(63, 2**20)
    )


@dataclass
class TypoReport:
    """Which of two printed variants agrees with the recomputed R_{4,n}^{(10)}."""

    label: str
    candidates: dict[int, bool]
    detail: dict[int, str]

    @property
    def consistent(self) -> list[int]:
        return [c for c, ok in self.candidates.items() if ok]

    def to_json(self) -> dict:
        return {"label": self.label,
                "candidates": {str(c): ok for c, ok in self.candidates.items()},
                "consistent": [str(c) for c in self.consistent],
                "detail": {str(c): d for c, d in self.detail.items()}}


def adjudicate_r4_typos() -> list[TypoReport]:
    """Recompute R_{4,1}^{(10)} and test each printed variant against 587 * 2^31."""
    poly = r4_k10_poly()
    y2 = poly.coeff(0, 2)
    gamma7 = closedform.K10_TABLE[7].coeff(0, 5)

    coef_ok, coef_detail = {}, {}
    for c2 in (670888385, 67088385):
        printed = _printed_r4(c2)
        val = int(printed(y=2))
        coef_ok[c2] = val == R4_TARGETS[1] and printed == poly
        coef_detail[c2] = (f"R_4,1 = {val} (target {R4_TARGETS[1]}); "
                           f"recomputed Y^2 coefficient {frac_str(y2)} = {frac_str(y2 / 256)}*2^8")

    g7_ok, g7_detail = {}, {}
    for g in (5117310, 51117310):
        b = _bracket_y5(g)
        g7_ok[g] = b == y2 and g == gamma7
        g7_detail[g] = (f"bracket gives Y^2 coefficient {frac_str(b)}; recomputed {frac_str(y2)}; "
                        f"k=10 table Gamma_7 Y^5 coefficient {frac_str(gamma7)}")
    return [
        TypoReport("Y^2 coefficient of R_4,n^(10) (x 2^8)", coef_ok, coef_detail),
        TypoReport("Gamma_7 Y^5 coefficient inside the 2^{5n} bracket", g7_ok, g7_detail),
    ]
