"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


class UniPoly:
    """Immutable polynomial over Q, coefficients stored ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # degree of 0 is -1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reverse_sign(self) -> "UniPoly":
        """p(-m) as a polynomial in m."""
        return UniPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __repr__(self):
        return f"UniPoly({self.format()!r})"

    def format(self, var: str = "m") -> str:
        """Human-readable form, e.g. '1 + 11/3 m + 9 m^2'."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                coef = "" if mag == 1 else f"{mag} "
                term = f"{coef}{var}" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


def from_values(values: Sequence, xs: Sequence | None = None) -> UniPoly:
    """Lagrange interpolation through (xs[i], values[i]); xs defaults to 0..k."""
    k = len(values)
    if xs is None:
        xs = list(range(k))
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(v) for v in values]
    total = UniPoly([0])
    for i in range(k):
        num = UniPoly([1])
        den = Fraction(1)
        for j in range(k):
            if j == i:
                continue
            num = num * UniPoly([-xs[j], 1])
            den *= xs[i] - xs[j]
        total = total + num * (ys[i] / den)
    return total


def binom_poly(shift: int, d: int) -> UniPoly:
    """C(m + shift, d) as a polynomial in m."""
    if d == 0:
        return UniPoly([1])
    p = UniPoly([1])
    for i in range(d):
        p = p * UniPoly([Fraction(shift - i), Fraction(1)])
    return p * Fraction(1, math.factorial(d))


def poly_to_json(p: UniPoly):
    return [f"{c.numerator}/{c.denominator}" for c in p.coeffs]


def poly_from_json(data) -> UniPoly:
    return UniPoly([Fraction(s) for s in data])
