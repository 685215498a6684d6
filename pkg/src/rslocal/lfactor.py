"""Local Euler factors attached to Satake classes.

An :class:`EulerFactor` stores the inverse polynomial det(1 - rho(g) T) in the
single formal variable T = q^-s. Coefficients are exact (int, Fraction,
LaurentPoly in the torus symbols) or complex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .laurent import LaurentPoly
from .poly import Poly
from .satake import SatakeClassA3, SatakeClassC2, _inv, symbolic_class

__all__ = [
    "EulerFactor",
    "SatakeClassA3",
    "SatakeClassC2",
    "euler_factor",
    "local_zeta",
    "spin_factor",
    "std_eigenvalues",
    "std_twisted_factor",
    "symbolic_class",
    "wedge2_eigenvalues",
    "wedge2_factor",
    "wedge2_factor_inert_via_spin",
    "wedge2_factor_inert_via_std",
]


@dataclass(frozen=True)
class EulerFactor:
    poly: Poly
    q: object = field(default=None, compare=False)

    @property
    def coefficients(self) -> tuple:
        return self.poly.coeffs

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def constant_term(self):
        return self.poly[0]

    def __mul__(self, other: "EulerFactor") -> "EulerFactor":
        return EulerFactor(self.poly * other.poly, self.q if self.q is not None else other.q)

    def inverse_value(self, T, point=None):
        """det(1 - rho(g) T) at numeric T; ``point`` substitutes torus symbols."""
        if point is not None:
            return self.poly.map_coeffs(lambda c: _substitute(c, point))(T)
        return self.poly(T)

    def value(self, T, point=None):
        """The L-factor itself, 1 / det(1 - rho(g) T)."""
        return 1 / self.inverse_value(T, point)

    def at(self, s, q=None, point=None):
        """L-factor at complex s, with T = q^-s."""
        q = self.q if q is None else q
        if q is None:
            raise ValueError("a prime size q is required to evaluate at s")
        return self.value(complex(q) ** (-s), point)


def _substitute(c, point):
    if isinstance(c, LaurentPoly):
        return c.evaluate(point)
    return c


def euler_factor(eigs: Iterable, q=None) -> EulerFactor:
    """prod (1 - lambda T) over the eigenvalue multiset."""
    p = Poly([1])
    for lam in eigs:
        if lam == 0:
            raise ValueError("eigenvalues must be nonzero")
        p = p * Poly([1, -lam])
    return EulerFactor(p, q)


def local_zeta(k: int = 1, q=None) -> EulerFactor:
    """Inverse of zeta_v(k s) in T = q^-s, i.e. 1 - T^k."""
    return EulerFactor(Poly([1] + [0] * (k - 1) + [-1]), q)


def wedge2_eigenvalues(s: SatakeClassA3) -> tuple:
    return tuple(x * y for x, y in combinations(s.eigenvalues, 2))


def wedge2_factor(s: SatakeClassA3, q=None) -> EulerFactor:
    return euler_factor(wedge2_eigenvalues(s), q)


def spin_factor(s: SatakeClassC2, q=None) -> EulerFactor:
    return euler_factor(s.eigenvalues4(), q)


def std_eigenvalues(s: SatakeClassC2) -> tuple:
    """Eigenvalues of the 5-dimensional representation: ab, a/b, 1, b/a, 1/(ab)."""
    a, b = s.a, s.b
    ia, ib = _inv(a), _inv(b)
    one = a * ia
    return (a * b, a * ib, one, b * ia, ia * ib)


def std_twisted_factor(s: SatakeClassC2, sign: int = -1, q=None) -> EulerFactor:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return euler_factor((sign * x for x in std_eigenvalues(s)), q)


def wedge2_factor_inert_via_spin(s: SatakeClassC2, q=None) -> EulerFactor:
    """Exterior-square factor at an inert place as L(Spin) * zeta(2s)."""
    return spin_factor(s, q) * local_zeta(2, q)


def wedge2_factor_inert_via_std(s: SatakeClassC2, q=None) -> EulerFactor:
    """Exterior-square factor at an inert place as L(std x chi) * zeta(s)."""
    return std_twisted_factor(s, -1, q) * local_zeta(1, q)
