"""Exact polynomials in X = 2^k and Y = 2^n with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Mapping, Union

Scalar = Union[int, Fraction]


class ExactPoly:
    """Sparse bivariate polynomial, stored as ``{(x_deg, y_deg): Fraction}``.

    Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        self._terms = clean

    # constructors -----------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "ExactPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "ExactPoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_y_coeffs(cls, coeffs) -> "ExactPoly":
        """``coeffs[j]`` multiplies ``Y**j``."""
        return cls({(0, j): c for j, c in enumerate(coeffs)})

    @classmethod
    def from_x_coeffs(cls, coeffs) -> "ExactPoly":
        return cls({(j, 0): c for j, c in enumerate(coeffs)})

    # arithmetic -------------------------------------------------------------
    @staticmethod
    def _lift(other) -> "ExactPoly":
        if isinstance(other, ExactPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return ExactPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return ExactPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar):
        if isinstance(other, ExactPoly):
            raise TypeError("only division by scalars is supported")
        d = Fraction(other)
        return ExactPoly({key: c / d for key, c in self._terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers not supported")
        out = ExactPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # inspection -------------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def coeff(self, x_deg: int, y_deg: int) -> Fraction:
        return self._terms.get((x_deg, y_deg), Fraction(0))

    def y_degree(self) -> int:
        return max((b for _, b in self._terms), default=-1)

    def x_degree(self) -> int:
        return max((a for a, _ in self._terms), default=-1)

    def y_part(self, y_deg: int) -> "ExactPoly":
        """Coefficient of ``Y**y_deg`` as a polynomial in X."""
        return ExactPoly({(a, 0): c for (a, b), c in self._terms.items() if b == y_deg})

    def x_part(self, x_deg: int) -> "ExactPoly":
        return ExactPoly({(0, b): c for (a, b), c in self._terms.items() if a == x_deg})

    def y_coeffs(self) -> list[Fraction]:
        """Coefficients of a polynomial in Y alone, lowest degree first."""
        if self.x_degree() > 0:
            raise ValueError("polynomial still depends on X")
        return [self.coeff(0, j) for j in range(self.y_degree() + 1)]

    def x_coeffs(self) -> list[Fraction]:
        if self.y_degree() > 0:
            raise ValueError("polynomial still depends on Y")
        return [self.coeff(j, 0) for j in range(self.x_degree() + 1)]

    def subs_x(self, xv: Scalar) -> "ExactPoly":
        terms: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self._terms.items():
            terms[(0, b)] = terms.get((0, b), Fraction(0)) + c * Fraction(xv) ** a
        return ExactPoly(terms)

    def subs_y(self, yv: Scalar) -> "ExactPoly":
        terms: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self._terms.items():
            terms[(a, 0)] = terms.get((a, 0), Fraction(0)) + c * Fraction(yv) ** b
        return ExactPoly(terms)

    def __call__(self, x: Scalar = 0, y: Scalar = 0) -> Fraction:
        return sum(
            (c * Fraction(x) ** a * Fraction(y) ** b for (a, b), c in self._terms.items()),
            Fraction(0),
        )

    def denominator_lcm(self) -> int:
        return lcm(1, *(c.denominator for c in self._terms.values()))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def __repr__(self) -> str:
        if not self._terms:
            return "ExactPoly(0)"
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda t: (-t[0][1], -t[0][0])):
            mono = "*".join(s for s in (f"X^{a}" if a else "", f"Y^{b}" if b else "") if s)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return "ExactPoly(" + " + ".join(parts) + ")"


X = ExactPoly.x()
Y = ExactPoly.y()


def frac_str(c: Fraction) -> str:
    """``"p/q"`` for non-integers, plain decimal otherwise."""
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
