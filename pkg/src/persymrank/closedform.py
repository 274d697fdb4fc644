"""Closed-form rank counts Gamma_i for the persymmetric family.

Every formula is an :class:`~persymrank.poly.ExactPoly` in ``X = 2^k`` and
``Y = 2^n``.  Constants that are naturally written as ``c * 2^m`` are built
from ``(c, m)`` pairs and checked at import against a second, plain-integer
transcription.
"""

from __future__ import annotations

from fractions import Fraction as F

from .poly import X, Y, ExactPoly


class FormulaNotAsserted(ValueError):
    """Requested (i, n, k) lies outside the range where a formula is known."""


def _p2(c: int, m: int) -> int:
    return c * 2**m


# (c, m) -> plain integer; every scaled constant used below must appear here.
_SCALED = {
    (436135, 14): 7145635840,
    (242795, 16): 15911813120,
    (4445, 21): 9321840640,
    (200235, 16): 13122600960,
    (106680, 18): 27965521920,
    (480, 25): 16106127360,
    (27432, 18): 7191134208,
    (57344, 18): 15032385536,
    (256, 25): 8589934592,
    (1466315, 13): 12012052480,
    (11373, 13): 93167616,
    (293263, 16): 19219283968,
    (96649567, 8): 24742289152,
    (4637778, 13): 37992677376,
    (917, 7): 117376,
    (311, 13): 2547712,
}


def _check_scaled() -> None:
    for (c, m), plain in _SCALED.items():
        if _p2(c, m) != plain:
            raise AssertionError(f"transcription mismatch: {c}*2^{m} != {plain}")


_check_scaled()


def s(c: int, m: int) -> int:
    """``c * 2^m``, restricted to the double-entered constants."""
    if (c, m) not in _SCALED:
        raise KeyError(f"{c}*2^{m} has no plain-integer cross-entry")
    return _SCALED[(c, m)]


# ---------------------------------------------------------------------------
# general-k formulas, ranks 0..7
# ---------------------------------------------------------------------------

# Gamma_7 = 255 Y^7 + a(k) Y^6 + ... + g(k)
A7 = F(2667, 16) * X - 43053
B7 = F(465, 32) * X**2 - F(190341, 16) * X + 2062014
C7 = F(31, 168) * X**3 - F(45229, 96) * X**2 + F(6262403, 24) * X - F(817168432, 21)
D7 = -F(465, 168) * X**3 + F(231105, 48) * X**2 - F(4605205, 2) * X + F(2247886880, 7)
E7 = F(155, 12) * X**3 - F(233585, 12) * X**2 + F(26162884, 3) * X - F(3534612736, 3)
F7 = (
    -F(155, 7) * X**3 + 31310 * X**2 - 13600384 * X
    + F(s(1466315, 13), 7) + s(11373, 13)
)
G7 = F(248, 21) * X**3 - F(48608, 3) * X**2 + F(20798464, 3) * X - F(s(293263, 16), 21)

GAMMA7_COEFFS = {"a": A7, "b": B7, "c": C7, "d": D7, "e": E7, "f": F7, "g": G7}

# the factored form: (Y-1)(Y-2)(Y-4)(Y-8) [255 Y^3 + alpha Y^2 + beta Y + gamma]
ALPHA7 = F(2667, 16) * X - 39228
BETA7 = F(465, 32) * X**2 - 9396 * X + 1455744
GAMMA7 = F(31, 168) * X**3 - F(1519, 6) * X**2 + F(324976, 3) * X - F(300301312, 21)

GAMMA7_FACTORS = {"alpha": ALPHA7, "beta": BETA7, "gamma": GAMMA7}

_GENERAL: dict[int, ExactPoly] = {
    0: ExactPoly.const(1),
    1: 3 * (Y - 1),
    2: 7 * Y**2 + (2 * X - 25) * Y - 2 * X + 18,
    3: 15 * Y**3 + (7 * X - 133) * Y**2 + (294 - 21 * X) * Y - 176 + 14 * X,
    4: (
        31 * Y**4
        + (35 * X - 1210) / 2 * Y**3
        + (4 * X**2 - 783 * X + 19028) / 6 * Y**2
        + (-2 * X**2 + 269 * X - 5744) * Y
        + (4 * X**2 - 117 * 4 * X + 9440) / 3
    ),
    5: (
        63 * Y**5
        + (F(155, 4) * X - 2573) * Y**4
        + (F(5, 2) * X**2 - F(2565, 4) * X + 29150) * Y**3
        + F(1, 2) * (-35 * X**2 + 6265 * X - 247520) * Y**2
        + (35 * X**2 - 5490 * X + 203872) * Y
        - 20 * X**2 + 2960 * X - 106752
    ),
    6: (
        127 * Y**6
        + (651 * X / 8 - 10605) * Y**5
        + (F(155, 3) * X**2 / 8 - 22661 * X / 8 + F(748154, 3)) * Y**4
        + F(1, 168) * (8 * X**3 - 16723 * X**2 + 5026378 * X - 382091648) * Y**3
        + (-F(1, 3) * X**3 + F(5649, 12) * X**2 - F(368711, 3) * X + 8753120) * Y**2
        + (F(2, 3) * X**3 - F(2437, 3) * X**2 + F(597736, 3) * X - F(41276672, 3)) * Y
        - 8 * (F(1, 21) * X**3 - F(163, 3) * X**2 + F(38816, 3) * X - F(18483200, 21))
    ),
    7: (
        255 * Y**7 + A7 * Y**6 + B7 * Y**5 + C7 * Y**4
        + D7 * Y**3 + E7 * Y**2 + F7 * Y + G7
    ),
}

# smallest k for which each general-k row is asserted
VALIDITY_MIN_K = {0: 1, 1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: 7, 7: 8}

# Gamma_7 regrouped by powers of X (second printed form of the postulate)
GAMMA7_BY_X = (
    F(31, 168) * (Y**4 - 15 * Y**3 + 70 * Y**2 - 120 * Y + 64) * X**3
    + F(1, 96) * (1395 * Y**5 - 45229 * Y**4 + 462210 * Y**3 - 1868680 * Y**2
                  + 3005760 * Y - 1555456) * X**2
    + F(1, 48) * (8001 * Y**6 - 571023 * Y**5 + 12524806 * Y**4 - 110524920 * Y**3
                  + 418606144 * Y**2 - 652818432 * Y + 332775424) * X
    + F(1, 21) * (5355 * Y**7 - 904113 * Y**6 + 43302294 * Y**5 - 817168432 * Y**4
                  + 6743660640 * Y**3 - s(96649567, 8) * Y**2 + s(4637778, 13) * Y
                  - s(293263, 16))
)

# ---------------------------------------------------------------------------
# special cases of Gamma_7
# ---------------------------------------------------------------------------

# by block count n (polynomials in X)
GAMMA7_BY_N: dict[int, ExactPoly] = {
    0: ExactPoly(),
    1: ExactPoly(),
    2: ExactPoly(),
    3: ExactPoly(),
    4: 3720 * X**3 - 416640 * X**2 + 13332480 * X - 121896960,
    5: 115320 * (X**3 + 1148 * X**2 - s(917, 7) * X + s(311, 13)),
}

# by column count k (polynomials in Y)
GAMMA7_BY_K: dict[int, ExactPoly] = {
    8: (
        255 * Y**7 - 381 * Y**6 - 31122 * Y**5 + 105648 * Y**4
        + 758880 * Y**3 - 4617984 * Y**2 + 7913472 * Y - 4128768
    ),
    9: (
        255 * Y**7 + 42291 * Y**6 - 219618 * Y**5 - 4053808 * Y**4
        + 32840160 * Y**3 - 82168576 * Y**2 + 81543168 * Y - 27983872
    ),
}

# ---------------------------------------------------------------------------
# k = 10 table, all ranks (Y-polynomials with integer coefficients)
# ---------------------------------------------------------------------------


def _ypoly_desc(*coeffs: int) -> ExactPoly:
    """Y-polynomial from coefficients listed highest degree first."""
    return ExactPoly.from_y_coeffs(list(reversed(coeffs)))


K10_TABLE: dict[int, ExactPoly] = {
    0: _ypoly_desc(1),
    1: _ypoly_desc(3, -3),
    2: _ypoly_desc(7, 2023, -2030),
    3: _ypoly_desc(15, 7035, -21210, 14160),
    4: _ypoly_desc(31, 17315, 568590, -1827440, 1241504),
    5: _ypoly_desc(63, 37107, 1993950, -15266160, 31282272, -18047232),
    6: _ypoly_desc(127, 72723, 4120830, -24883824, 18602976, 54302976, -52215808),
    7: _ypoly_desc(255, 127635, 5117310, -67607280, 39863520, 1210256640, -3062415360,
                   1874657280),
    8: _ypoly_desc(511, 171955, -897890, -38376240, 323250144, 271514880,
                   -s(436135, 14), s(242795, 16), -s(4445, 21)),
    9: _ypoly_desc(1023, -1533, -517650, 1798320, 78214752, -559464192, -783237120,
                   s(200235, 16), -s(106680, 18), s(480, 25)),
    10: _ypoly_desc(1, 0, -1023, 1022, 345440, -1028192, -45028608, 299663360, 494731264,
                    -s(27432, 18), s(57344, 18), -s(256, 25)),
}


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def eval_cleared(poly: ExactPoly, n: int, k: int | None = None) -> int:
    """Evaluate at ``X = 2^k`` then ``Y = 2^n``, demanding an integer result.

    After substituting X the Y-coefficients are scaled by their common
    denominator; the integer polynomial is evaluated and must divide exactly.
    """
    ypoly = poly.subs_x(2**k) if k is not None else poly
    if ypoly.x_degree() > 0:
        raise ValueError("k is required for an X-dependent formula")
    den = ypoly.denominator_lcm()
    cleared = [int(c * den) for c in ypoly.y_coeffs()]
    yv = 2**n
    total = sum(c * yv**j for j, c in enumerate(cleared))
    q, r = divmod(total, den)
    if r:
        raise ArithmeticError(f"non-integral value {total}/{den} at n={n}, k={k}")
    return q


def gamma_formula(i: int) -> ExactPoly:
    if i not in _GENERAL:
        raise FormulaNotAsserted(f"no general-k formula for rank {i}")
    return _GENERAL[i]


def gamma_general(i: int, n: int, k: int) -> int:
    """Gamma_i for the 2n x k family from the general-k formulas (ranks 0..7)."""
    if i not in _GENERAL:
        raise FormulaNotAsserted(f"no general-k formula for rank {i}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < VALIDITY_MIN_K[i]:
        raise FormulaNotAsserted(
            f"Gamma_{i} formula is asserted only for k >= {VALIDITY_MIN_K[i]}, got k={k}"
        )
    return eval_cleared(_GENERAL[i], n, k)


def gamma7_special(n: int | None = None, k: int | None = None):
    """Gamma_7 from the special-case tables.

    With ``n <= 5`` the per-n table is used (``k`` required).  Otherwise
    ``k`` must be 8 or 9: the per-k polynomial in Y is returned, or its value
    when ``n`` is also given.
    """
    if n is not None and n < 0:
        raise ValueError("n must be >= 0")
    if n is not None and n in GAMMA7_BY_N:
        if k is None:
            raise FormulaNotAsserted("the per-n table needs k")
        if n >= 4 and k < VALIDITY_MIN_K[7]:
            raise FormulaNotAsserted(f"Gamma_7 at n={n} is asserted only for k >= 8")
        return eval_cleared(GAMMA7_BY_N[n], 0, k)
    if k in GAMMA7_BY_K:
        poly = GAMMA7_BY_K[k]
        return poly if n is None else eval_cleared(poly, n)
    raise FormulaNotAsserted(f"no special-case Gamma_7 formula for n={n}, k={k}")


def gamma_k10(i: int, n: int) -> int:
    """Gamma_i for the 2n x 10 family, any rank 0..10."""
    if i not in K10_TABLE:
        raise ValueError(f"rank must be in 0..10 for k=10, got {i}")
    if n < 0:
        raise ValueError("n must be >= 0")
    return eval_cleared(K10_TABLE[i], n)


def closedform_counts(n: int, k: int) -> tuple[int, ...]:
    """Gamma_0..Gamma_min(2n,k) from formulas, when every needed rank is covered."""
    top = min(2 * n, k)
    if k == 10:
        return tuple(gamma_k10(i, n) for i in range(top + 1))
    return tuple(gamma_general(i, n, k) for i in range(top + 1))
