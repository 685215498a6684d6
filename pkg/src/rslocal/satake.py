"""Satake classes (Frobenius eigenvalue data) for SL4 and Sp4 = Spin5."""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly
from .lie import A3, C2, RootSystemId

NUMERIC_PRODUCT_TOL = 1e-9


def _inv(x):
    if isinstance(x, LaurentPoly):
        return x.inverse()
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def _is_zero(x) -> bool:
    if isinstance(x, LaurentPoly):
        return x.is_zero()
    return x == 0


@dataclass(frozen=True)
class SatakeClassA3:
    """Four eigenvalues with product 1 (exact symbols, rationals or complex)."""

    eigenvalues: tuple

    system = A3

    def __post_init__(self):
        eigs = tuple(self.eigenvalues)
        object.__setattr__(self, "eigenvalues", eigs)
        if len(eigs) != 4:
            raise ValueError(f"an SL4 Satake class needs 4 eigenvalues, got {len(eigs)}")
        if any(_is_zero(x) for x in eigs):
            raise ValueError("Satake eigenvalues must be nonzero")
        prod = eigs[0] * eigs[1] * eigs[2] * eigs[3]
        if isinstance(prod, complex) or isinstance(prod, float):
            if abs(prod - 1) > NUMERIC_PRODUCT_TOL:
                raise ValueError(f"eigenvalue product is {prod}, expected 1")
        elif prod != 1:
            raise ValueError(f"eigenvalue product is {prod}, expected 1")

    @property
    def torus(self) -> tuple:
        return self.eigenvalues

    @classmethod
    def identity(cls) -> "SatakeClassA3":
        return cls((1, 1, 1, 1))

    @classmethod
    def from_angles(cls, angles) -> "SatakeClassA3":
        """Unit-modulus class exp(2 pi i t_k); the angles must sum to an integer."""
        angles = [Fraction(t) for t in angles]
        if sum(angles).denominator != 1:
            raise ValueError("angles must sum to an integer for a determinant-one class")
        return cls(tuple(cmath.exp(2j * cmath.pi * float(t)) for t in angles))

    def numeric(self) -> "SatakeClassA3":
        return SatakeClassA3(tuple(complex(x) for x in self.eigenvalues))


@dataclass(frozen=True)
class SatakeClassC2:
    """A pair (a, b); the 4-dimensional eigenvalues are {a, b, 1/b, 1/a}."""

    a: object
    b: object

    system = C2

    def __post_init__(self):
        if _is_zero(self.a) or _is_zero(self.b):
            raise ValueError("Satake eigenvalues must be nonzero")

    @property
    def torus(self) -> tuple:
        return (self.a, self.b)

    def eigenvalues4(self) -> tuple:
        return (self.a, self.b, _inv(self.b), _inv(self.a))

    def as_sl4(self) -> SatakeClassA3:
        """The class viewed inside SL4 through (a, b, 1/b, 1/a)."""
        return SatakeClassA3(self.eigenvalues4())

    @classmethod
    def identity(cls) -> "SatakeClassC2":
        return cls(1, 1)

    @classmethod
    def from_angles(cls, angles) -> "SatakeClassC2":
        ta, tb = (float(t) for t in angles)
        return cls(cmath.exp(2j * cmath.pi * ta), cmath.exp(2j * cmath.pi * tb))

    def numeric(self) -> "SatakeClassC2":
        return SatakeClassC2(complex(self.a), complex(self.b))


def symbolic_class(system: RootSystemId):
    """Generic class whose eigenvalues are the torus symbols themselves."""
    if system is A3:
        return SatakeClassA3(tuple(LaurentPoly.gens(4, sl=True)))
    a, b = LaurentPoly.gens(2)
    return SatakeClassC2(a, b)
