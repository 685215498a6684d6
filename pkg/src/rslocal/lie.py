"""Root systems A3 and C2, dominant weights and irreducible characters.

Ambient coordinates
-------------------
A3 (SL4): weights live in Z^4 modulo (1,1,1,1). Highest weight (a, b, c) in the
fundamental basis corresponds to the partition (a+b+c, b+c, c, 0). Torus weights
are stored canonically by subtracting the minimum entry.

C2 (Sp4 = Spin5): weights live in Z^2 (exponents of a, b on the torus
diag(a, b, b^-1, a^-1)). Internal coordinates (p, q) mean p * (4-dim fundamental)
+ q * (5-dim fundamental), i.e. the ambient vector (p+q, q). The indexing
W(m, n) = m*std5 + n*spin4 used in the local computations maps to internal
(n, m); use :func:`W` and :meth:`DominantWeight.label_coords` at the boundary.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .laurent import ExactDivisionError, LaurentPoly, sl_reduce

DEFAULT_COORD_BOUND = 12


class RootSystemId(enum.Enum):
    A3 = "A3"
    C2 = "C2"

    @property
    def rank(self) -> int:
        return 3 if self is RootSystemId.A3 else 2

    @property
    def ambient_dim(self) -> int:
        return 4 if self is RootSystemId.A3 else 2

    @property
    def weyl_order(self) -> int:
        return len(weyl_group(self))


A3 = RootSystemId.A3
C2 = RootSystemId.C2


class CharacterError(RuntimeError):
    """Internal inconsistency in a character computation."""


# ---------------------------------------------------------------------------
# root data


_POSITIVE_ROOTS = {
    A3: tuple(
        tuple(1 if k == i else -1 if k == j else 0 for k in range(4))
        for i in range(4) for j in range(i + 1, 4)
    ),
    C2: ((1, -1), (1, 1), (2, 0), (0, 2)),
}

_RHO = {A3: (3, 2, 1, 0), C2: (2, 1)}

# rho for A3 shifted to be orthogonal to (1,1,1,1), doubled to stay integral
_HEIGHT_VECTOR = {A3: (3, 1, -1, -3), C2: (2, 1)}


def positive_roots(system: RootSystemId) -> tuple[tuple[int, ...], ...]:
    return _POSITIVE_ROOTS[system]


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _add(u, v, k: int = 1) -> tuple[int, ...]:
    return tuple(a + k * b for a, b in zip(u, v))


@lru_cache(maxsize=None)
def weyl_group(system: RootSystemId) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Weyl group elements as signed permutations: entry i is (source index, sign)."""
    n = system.ambient_dim
    elems = []
    for perm in itertools.permutations(range(n)):
        if system is A3:
            elems.append(tuple((p, 1) for p in perm))
        else:
            for signs in itertools.product((1, -1), repeat=n):
                elems.append(tuple(zip(perm, signs)))
    return tuple(elems)


def weyl_sign(g) -> int:
    perm = [p for p, _ in g]
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    for _, s in g:
        sign *= s
    return sign


def weyl_act(g, v) -> tuple[int, ...]:
    return tuple(s * v[p] for p, s in g)


def weyl_generators(system: RootSystemId):
    """Simple reflections, as signed permutations."""
    if system is A3:
        gens = []
        for i in range(3):
            perm = list(range(4))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            gens.append(tuple((p, 1) for p in perm))
        return gens
    return [((1, 1), (0, 1)), ((0, 1), (1, -1))]


def dominant_representative(system: RootSystemId, v) -> tuple[int, ...]:
    if system is A3:
        return tuple(sorted(v, reverse=True))
    return tuple(sorted((abs(x) for x in v), reverse=True))


def canonical_torus(system: RootSystemId, v) -> tuple[int, ...]:
    return sl_reduce(tuple(v)) if system is A3 else tuple(v)


def height(system: RootSystemId, v) -> int:
    return _dot(v, _HEIGHT_VECTOR[system])


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True, order=True)
class DominantWeight:
    system: RootSystemId = field(compare=False)
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.system.rank:
            raise ValueError(f"{self.system.value} weights need {self.system.rank} coordinates, got {coords}")
        if any(c < 0 for c in coords):
            raise ValueError(f"dominant weight coordinates must be nonnegative, got {coords}")

    def __eq__(self, other):
        return isinstance(other, DominantWeight) and self.system is other.system and self.coords == other.coords

    def __hash__(self):
        return hash((self.system.value, self.coords))

    @property
    def ambient(self) -> tuple[int, ...]:
        """Highest weight in ambient coordinates (partition form for A3)."""
        if self.system is A3:
            a, b, c = self.coords
            return (a + b + c, b + c, c, 0)
        p, q = self.coords
        return (p + q, q)

    @classmethod
    def from_ambient(cls, system: RootSystemId, v) -> "DominantWeight":
        if system is A3:
            return cls(A3, (v[0] - v[1], v[1] - v[2], v[2] - v[3]))
        return cls(C2, (v[0] - v[1], v[1]))

    def label_coords(self) -> tuple[int, ...]:
        """(std5, spin4) order for C2; identity for A3."""
        if self.system is C2:
            return (self.coords[1], self.coords[0])
        return self.coords

    def __repr__(self):
        if self.system is A3:
            return "V(%d,%d,%d)" % self.coords
        return "W(%d,%d)" % self.label_coords()


def V(a: int, b: int, c: int) -> DominantWeight:
    """SL4 irreducible with highest weight a w1 + b w2 + c w3."""
    return DominantWeight(A3, (a, b, c))


def W(m: int, n: int) -> DominantWeight:
    """Spin5 irreducible with highest weight m*(std5) + n*(spin4)."""
    return DominantWeight(C2, (n, m))


def weyl_dimension(w: DominantWeight) -> int:
    lam = w.ambient
    rho = _RHO[w.system]
    lr = _add(lam, rho)
    num = Fraction(1)
    for alpha in positive_roots(w.system):
        num *= Fraction(_dot(lr, alpha), _dot(rho, alpha))
    if num.denominator != 1:
        raise CharacterError(f"non-integral Weyl dimension for {w}")
    return int(num)


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class WeightMultisetCharacter:
    """Formal character: canonical torus weight -> multiplicity."""

    system: RootSystemId
    mults: Mapping[tuple[int, ...], int]

    def __post_init__(self):
        clean = {}
        for k, v in self.mults.items():
            k = canonical_torus(self.system, k)
            clean[k] = clean.get(k, 0) + v
        object.__setattr__(self, "mults", {k: v for k, v in clean.items() if v != 0})

    @classmethod
    def trivial(cls, system: RootSystemId) -> "WeightMultisetCharacter":
        return cls(system, {(0,) * system.ambient_dim: 1})

    def mass(self) -> int:
        return sum(self.mults.values())

    def __eq__(self, other):
        return (
            isinstance(other, WeightMultisetCharacter)
            and self.system is other.system
            and self.mults == other.mults
        )

    def _check(self, other):
        if not isinstance(other, WeightMultisetCharacter) or other.system is not self.system:
            raise ValueError("characters belong to different root systems")

    def __add__(self, other):
        self._check(other)
        out = dict(self.mults)
        for k, v in other.mults.items():
            out[k] = out.get(k, 0) + v
        return WeightMultisetCharacter(self.system, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k: int) -> "WeightMultisetCharacter":
        return WeightMultisetCharacter(self.system, {w: k * m for w, m in self.mults.items()})

    def __mul__(self, other):
        """Pointwise product (tensor product of representations)."""
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for w1, m1 in self.mults.items():
            for w2, m2 in other.mults.items():
                w = canonical_torus(self.system, _add(w1, w2))
                out[w] = out.get(w, 0) + m1 * m2
        return WeightMultisetCharacter(self.system, out)

    __rmul__ = __mul__

    def adams(self, k: int) -> "WeightMultisetCharacter":
        return WeightMultisetCharacter(
            self.system, {tuple(k * x for x in w): m for w, m in self.mults.items()}
        )

    def weyl_image(self, g) -> "WeightMultisetCharacter":
        return WeightMultisetCharacter(self.system, {weyl_act(g, w): m for w, m in self.mults.items()})

    def is_weyl_invariant(self) -> bool:
        return all(self.weyl_image(g) == self for g in weyl_generators(self.system))

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly(self.system.ambient_dim, self.mults, sl=self.system is A3)


def _check_bound(w: DominantWeight, bound: int | None):
    bound = DEFAULT_COORD_BOUND if bound is None else bound
    if max(w.coords, default=0) > bound:
        raise ValueError(f"{w} exceeds the coordinate bound {bound}")


def dominant_weights_below(w: DominantWeight) -> list[tuple[int, ...]]:
    """Dominant ambient weights mu <= lambda, sorted by decreasing height."""
    lam = w.ambient
    out = []
    if w.system is A3:
        total = sum(lam)
        for m1 in range(lam[0], -1, -1):
            for m2 in range(min(m1, total - m1), -1, -1):
                for m3 in range(min(m2, total - m1 - m2), -1, -1):
                    m4 = total - m1 - m2 - m3
                    if m4 < 0 or m4 > m3:
                        continue
                    if m1 + m2 <= lam[0] + lam[1] and m1 + m2 + m3 <= lam[0] + lam[1] + lam[2]:
                        out.append((m1, m2, m3, m4))
    else:
        s = lam[0] + lam[1]
        for x in range(lam[0], -1, -1):
            for y in range(x, -1, -1):
                if x + y <= s and (s - x - y) % 2 == 0:
                    out.append((x, y))
    out.sort(key=lambda v: height(w.system, v), reverse=True)
    return out


def _orbit(system: RootSystemId, v) -> set[tuple[int, ...]]:
    return {weyl_act(g, v) for g in weyl_group(system)}


@lru_cache(maxsize=4096)
def _freudenthal_cached(w: DominantWeight) -> WeightMultisetCharacter:
    system = w.system
    lam = w.ambient
    rho = _RHO[system]
    roots = positive_roots(system)
    target = _dot(_add(lam, rho), _add(lam, rho))
    dominant = dominant_weights_below(w)
    mult: dict[tuple[int, ...], int] = {}
    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        total = 0
        for alpha in roots:
            k = 1
            while True:
                nu = _add(mu, alpha, k)
                m = mult.get(dominant_representative(system, nu))
                if not m:
                    break
                total += m * _dot(nu, alpha)
                k += 1
        mu_rho = _add(mu, rho)
        denom = target - _dot(mu_rho, mu_rho)
        if denom <= 0 or (2 * total) % denom:
            raise CharacterError(f"Freudenthal recursion failed at {mu} for {w}")
        m = 2 * total // denom
        if m:
            mult[mu] = m
    full: dict[tuple[int, ...], int] = {}
    for mu, m in mult.items():
        for nu in _orbit(system, mu):
            full[canonical_torus(system, nu)] = m
    return WeightMultisetCharacter(system, full)


def character_freudenthal(w: DominantWeight, bound: int | None = None) -> WeightMultisetCharacter:
    """Irreducible character via Freudenthal's multiplicity recursion."""
    _check_bound(w, bound)
    return _freudenthal_cached(w)


def alternant(system: RootSystemId, v) -> LaurentPoly:
    return LaurentPoly(
        system.ambient_dim,
        [(weyl_act(g, v), weyl_sign(g)) for g in weyl_group(system)],
    )


def character_alternant(w: DominantWeight, bound: int | None = None) -> WeightMultisetCharacter:
    """Irreducible character as the exact quotient of Weyl alternants."""
    _check_bound(w, bound)
    rho = _RHO[w.system]
    try:
        quotient = alternant(w.system, _add(w.ambient, rho)).divexact(alternant(w.system, rho))
    except ExactDivisionError as exc:
        raise CharacterError(f"alternant division left a remainder for {w}") from exc
    if any(not isinstance(c, int) or c <= 0 for c in quotient.terms.values()):
        raise CharacterError(f"alternant quotient for {w} is not a character")
    return WeightMultisetCharacter(w.system, quotient.terms)


def irreducible_character(w: DominantWeight) -> WeightMultisetCharacter:
    return _freudenthal_cached(w)


def iter_weights(system: RootSystemId, bound: int) -> Iterator[DominantWeight]:
    for coords in itertools.product(range(bound + 1), repeat=system.rank):
        yield DominantWeight(system, coords)


# ---------------------------------------------------------------------------
# evaluation


def _monomial_value(eigs, weight):
    term = 1
    for x, k in zip(eigs, weight):
        if k:
            term = term * _pow(x, k)
    return term


def _pow(x, k: int):
    if k >= 0:
        return x ** k
    if isinstance(x, LaurentPoly):
        return x.inverse() ** (-k)
    if isinstance(x, int):
        return Fraction(1, x) ** (-k)
    return x ** k


def torus_point(satake) -> tuple:
    """Torus coordinates of a Satake class: 4 eigenvalues (A3) or (a, b) (C2)."""
    return tuple(satake.torus)


def evaluate_character(w: DominantWeight, satake=None, mode: str = "exact"):
    """Trace of the Satake class on the irreducible of highest weight ``w``.

    With ``satake=None`` the generic symbolic class is used and the result is a
    LaurentPoly in the torus symbols (reduced modulo x1x2x3x4 = 1 for A3).
    """
    from .satake import symbolic_class

    if satake is None:
        satake = symbolic_class(w.system)
    if satake.system is not w.system:
        raise ValueError(f"Satake class for {satake.system.value} used with {w.system.value} weight")
    chi = irreducible_character(w)
    point = torus_point(satake)
    if mode == "numeric":
        point = tuple(complex(x) for x in point)
    elif mode != "exact":
        raise ValueError(f"unknown evaluation mode {mode!r}")
    total = 0
    for mu, m in chi.mults.items():
        total = total + m * _monomial_value(point, mu)
    return total


def _complete_homogeneous(values, kmax: int) -> list:
    """h_0..h_kmax of the given variables, via the elementary-symmetric recursion."""
    n = len(values)
    e = [1] + [0] * n
    for x in values:
        for j in range(n, 0, -1):
            e[j] = e[j] + e[j - 1] * x
    h = [1] + [0] * kmax
    for k in range(1, kmax + 1):
        acc = 0
        for i in range(1, min(k, n) + 1):
            term = e[i] * h[k - i]
            acc = acc + term if i % 2 else acc - term
        h[k] = acc
    return h


def _det(rows) -> object:
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i, p in enumerate(perm):
            term = term * rows[i][p]
        total = total + term
    return total


class TraceEvaluator:
    """Fast trace values at one Satake class via determinantal formulas.

    A3 uses Jacobi-Trudi on the four eigenvalues; C2 uses the Koike-Terada
    symplectic determinant on (a, b, b^-1, a^-1). The complete homogeneous
    polynomials are computed once and reused across weights.
    """

    def __init__(self, satake, kmax: int = 256):
        self.system = satake.system
        if self.system is A3:
            self.variables = tuple(satake.torus)
        else:
            a, b = satake.torus
            self.variables = (a, b, _pow(b, -1), _pow(a, -1))
        self.h = _complete_homogeneous(self.variables, kmax + 8)

    def _hk(self, k: int):
        if k < 0:
            return 0
        if k >= len(self.h):
            self.h = _complete_homogeneous(self.variables, 2 * k)
        return self.h[k]

    def __call__(self, w: DominantWeight):
        if w.system is not self.system:
            raise ValueError("weight and Satake class belong to different systems")
        lam = w.ambient
        n = len(lam)
        if self.system is A3:
            rows = [[self._hk(lam[i] - i + j) for j in range(n)] for i in range(n)]
            return _det(rows)
        rows = []
        for i in range(n):
            row = [self._hk(lam[i] - i)]
            for j in range(1, n):
                row.append(self._hk(lam[i] - i + j) + self._hk(lam[i] - i - j))
            rows.append(row)
        return _det(rows)
