"""Sparse multivariate Laurent polynomials with exact integer/rational coefficients.

A polynomial is a mapping from integer exponent tuples to nonzero coefficients.
With ``sl=True`` exponents are reduced modulo (1, ..., 1), i.e. the product of
all variables is identified with 1; the canonical representative of an exponent
vector is obtained by subtracting its minimum entry.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


class ExactDivisionError(ArithmeticError):
    """Raised when a Laurent polynomial division leaves a remainder."""


def sl_reduce(e: Exponent) -> Exponent:
    m = min(e)
    return tuple(x - m for x in e) if m else tuple(e)


class LaurentPoly:
    __slots__ = ("nvars", "sl", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable = (), sl: bool = False):
        self.nvars = nvars
        self.sl = sl
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if sl:
                e = sl_reduce(e)
            acc[e] = acc.get(e, 0) + c
        self.terms = {e: c for e, c in acc.items() if c != 0}

    # constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c=1, sl: bool = False) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c}, sl=sl)

    @classmethod
    def monomial(cls, exponent: Exponent, c=1, sl: bool = False) -> "LaurentPoly":
        return cls(len(exponent), {tuple(exponent): c}, sl=sl)

    @classmethod
    def gens(cls, nvars: int, sl: bool = False) -> list["LaurentPoly"]:
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls.monomial(tuple(e), sl=sl))
        return out

    # helpers --------------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars or other.sl != self.sl:
                raise ValueError("incompatible Laurent polynomial rings")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.nvars, other, sl=self.sl)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def degree_bounds(self) -> tuple[Exponent, Exponent]:
        """Per-variable minimum and maximum exponents (Newton box)."""
        if not self.terms:
            raise ValueError("zero polynomial has no support")
        cols = list(zip(*self.terms))
        return tuple(min(c) for c in cols), tuple(max(c) for c in cols)

    # ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out, sl=self.sl)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()}, sl=self.sl)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out, sl=self.sl)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentPoly":
        """Inverse of a monomial with unit coefficient (+-1)."""
        if not self.is_monomial():
            raise ExactDivisionError("only monomials are invertible")
        (e, c), = self.terms.items()
        if c not in (1, -1):
            raise ExactDivisionError(f"coefficient {c} is not a unit")
        return LaurentPoly(self.nvars, {tuple(-x for x in e): c}, sl=self.sl)

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            return self.divexact(other)
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.nvars, {e: Fraction(c) / other for e, c in self.terms.items()}, sl=self.sl)
        return NotImplemented

    def __rtruediv__(self, other):
        return LaurentPoly.constant(self.nvars, other, sl=self.sl).divexact(self)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.constant(self.nvars, 1, sl=self.sl)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.nvars, other, sl=self.sl)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.sl == other.sl and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.sl, frozenset(self.terms.items())))

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises ExactDivisionError on a remainder.

        Lex-leading-term division. Quotient terms are produced in strictly
        decreasing lex order, so a heap tracks the remainder's leading term.
        The Newton box of the quotient is bounded by those of the operands,
        which guarantees termination when the division is not exact.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.sl:
            raise ExactDivisionError("exact division is only supported without sl reduction")
        if self.is_zero():
            return LaurentPoly(self.nvars, {}, sl=self.sl)
        lead_e = max(other.terms)
        lead_c = other.terms[lead_e]
        lo_f, hi_f = self.degree_bounds()
        lo_g, hi_g = other.degree_bounds()
        lo = tuple(a - b for a, b in zip(lo_f, lo_g))
        hi = tuple(a - b for a, b in zip(hi_f, hi_g))

        rem = dict(self.terms)
        heap = [tuple(-x for x in e) for e in rem]
        heapq.heapify(heap)
        quotient: dict[Exponent, int] = {}
        while heap:
            key = heapq.heappop(heap)
            e = tuple(-x for x in key)
            c = rem.pop(e, 0)
            if c == 0:
                continue
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < l or x > h for x, l, h in zip(qe, lo, hi)):
                raise ExactDivisionError("nonzero remainder in Laurent division")
            qc = Fraction(c, lead_c) if not isinstance(c, Fraction) else c / lead_c
            if qc.denominator == 1:
                qc = int(qc)
            quotient[qe] = qc
            for ge, gc in other.terms.items():
                if ge == lead_e:
                    continue
                t = tuple(a + b for a, b in zip(qe, ge))
                if t not in rem:
                    heapq.heappush(heap, tuple(-x for x in t))
                rem[t] = rem.get(t, 0) - qc * gc
        return LaurentPoly(self.nvars, quotient, sl=self.sl)

    # evaluation -----------------------------------------------------------

    def evaluate(self, point):
        """Substitute values (numbers or other ring elements) for the variables."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * _power(x, k)
            total = total + term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        names = [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"{n}^{k}" if k != 1 else n for n, k in zip(names, e) if k)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


def _power(x, k: int):
    if k >= 0:
        return x ** k
    if isinstance(x, int):
        return Fraction(1, x) ** (-k)
    return x ** k
