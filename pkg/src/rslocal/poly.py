"""Dense univariate polynomials over an arbitrary commutative coefficient ring.

Coefficients may be ints, Fractions, complex numbers, LaurentPoly values, or
another Poly (for nested polynomial rings such as Q[q^-1][u]).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _is_zero(c) -> bool:
    if isinstance(c, Poly):
        return c.is_zero()
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence = (), var: str = "T"):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "T") -> "Poly":
        return cls([0] * k + [c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly) and other.var == self.var:
            return other
        return Poly([other], self.var)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly([1], self.var)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other], self.var)
        n = max(len(self.coeffs), len(other.coeffs))
        return all(_is_zero(self[i] - other[i]) for i in range(n))

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division by a polynomial whose leading coefficient is +-1
        (or invertible in the coefficient ring)."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        dq = divisor.degree
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq]
            if _is_zero(c):
                continue
            q = c * _unit_inverse(lead)
            quot[k] = q
            for i, d in enumerate(divisor.coeffs):
                rem[k + i] = rem[k + i] - q * d
        return Poly(quot, self.var), Poly(rem, self.var)

    def divexact(self, divisor: "Poly") -> "Poly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, f) -> "Poly":
        return Poly([f(c) for c in self.coeffs], self.var)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = f"({c})" if isinstance(c, Poly) or not isinstance(c, int) else str(c)
            parts.append(cs if k == 0 else f"{cs}*{self.var}^{k}")
        return " + ".join(parts)


def _unit_inverse(c):
    if isinstance(c, int):
        if c in (1, -1):
            return c
        return Fraction(1, c)
    if isinstance(c, Poly):
        if c.degree == 0:
            return Poly([_unit_inverse(c.coeffs[0])], c.var)
        raise ArithmeticError(f"{c} is not a unit")
    if hasattr(c, "inverse"):
        return c.inverse()
    return 1 / c
