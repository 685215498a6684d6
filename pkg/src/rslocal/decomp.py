"""Representation-ring arithmetic: tensor products, symmetric powers, branching.

Each closed-form decomposition (``tensor_formula_split``, ``tensor_formula_inert``,
``sym_wedge2_split``, ``branch_a3_to_c2``) has an independent oracle here:
Littlewood-Richardson enumeration, character products, the Newton recursion for
symmetric powers, and eigenvalue restriction followed by highest-weight
stripping.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .lie import (
    A3,
    C2,
    DominantWeight,
    RootSystemId,
    V,
    W,
    WeightMultisetCharacter,
    dominant_representative,
    height,
    irreducible_character,
    weyl_dimension,
)

DEFAULT_SYM_BUDGET = 10 ** 9


class NotACharacterError(ValueError):
    """Raised when a weight multiset has no nonnegative decomposition."""


class BudgetExceeded(RuntimeError):
    pass


class RepRingElement:
    """Finite Z-combination of irreducibles of one root system."""

    __slots__ = ("system", "terms")

    def __init__(self, system: RootSystemId, terms: Mapping[DominantWeight, int] | Iterable = ()):
        self.system = system
        acc: dict[DominantWeight, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, m in items:
            if w.system is not system:
                raise ValueError(f"{w} does not belong to {system.value}")
            acc[w] = acc.get(w, 0) + m
        self.terms = {w: m for w, m in acc.items() if m != 0}

    @classmethod
    def irreducible(cls, w: DominantWeight, mult: int = 1) -> "RepRingElement":
        return cls(w.system, {w: mult})

    @classmethod
    def one(cls, system: RootSystemId) -> "RepRingElement":
        return cls(system, {DominantWeight(system, (0,) * system.rank): 1})

    @classmethod
    def zero(cls, system: RootSystemId) -> "RepRingElement":
        return cls(system, {})

    def is_zero(self) -> bool:
        return not self.terms

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self.terms.values())

    def dim(self) -> int:
        return sum(m * weyl_dimension(w) for w, m in self.terms.items())

    def character(self) -> WeightMultisetCharacter:
        out = WeightMultisetCharacter(self.system, {})
        for w, m in self.terms.items():
            out = out + irreducible_character(w).scale(m)
        return out

    def _scalar(self):
        """The integer c if self == c * [trivial], else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (w, m), = self.terms.items()
            if not any(w.coords):
                return m
        return None

    def _coerce(self, other) -> "RepRingElement":
        if isinstance(other, RepRingElement):
            if other.system is not self.system:
                raise ValueError("representation ring elements of different systems")
            return other
        if isinstance(other, int):
            return RepRingElement.one(self.system) * other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, m in other.terms.items():
            out[w] = out.get(w, 0) + m
        return RepRingElement(self.system, out)

    __radd__ = __add__

    def __neg__(self):
        return RepRingElement(self.system, {w: -m for w, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return RepRingElement(self.system, {w: m * other for w, m in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = other._scalar()
        if c is not None:
            return self * c
        c = self._scalar()
        if c is not None:
            return other * c
        out: dict[DominantWeight, int] = {}
        for w1, m1 in self.terms.items():
            for w2, m2 in other.terms.items():
                for w, m in tensor_irreducibles(w1, w2).terms.items():
                    out[w] = out.get(w, 0) + m * m1 * m2
        return RepRingElement(self.system, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = RepRingElement.one(self.system) * other
        if not isinstance(other, RepRingElement):
            return NotImplemented
        return self.system is other.system and self.terms == other.terms

    def __hash__(self):
        return hash((self.system.value, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: w.label_coords()):
            m = self.terms[w]
            parts.append(repr(w) if m == 1 else f"{m}*{w!r}")
        return " + ".join(parts)


def tensor_irreducibles(a: DominantWeight, b: DominantWeight) -> RepRingElement:
    """Decomposition of a tensor product of two irreducibles (LR for A3, characters for C2)."""
    if a.system is A3:
        return lr_tensor(a, b)
    return _c2_tensor(a, b)


@lru_cache(maxsize=None)
def _c2_tensor(a: DominantWeight, b: DominantWeight) -> RepRingElement:
    return decompose_character(irreducible_character(a) * irreducible_character(b))


# ---------------------------------------------------------------------------
# Littlewood-Richardson


def _horizontal_strips(shape: tuple[int, ...], k: int, first_row: int, max_rows: int):
    """All ways to add k boxes as a horizontal strip using rows >= first_row.

    Yields (new_shape, added) with added[r] = boxes appended to row r.
    """
    rows = list(shape) + [0] * (max_rows - len(shape))

    def rec(r, remaining, added):
        if r == max_rows:
            if remaining == 0:
                yield tuple(added)
            return
        if r < first_row:
            yield from rec(r + 1, remaining, added + [0])
            return
        cap = remaining if r == 0 else min(remaining, rows[r - 1] - rows[r])
        for x in range(cap, -1, -1):
            yield from rec(r + 1, remaining - x, added + [x])

    for added in rec(0, k, []):
        new = tuple(a + b for a, b in zip(rows, added))
        yield new, added


def _is_lattice(fillings: list[tuple[int, ...]], nrows: int) -> bool:
    """Reverse reading word condition; fillings[i][r] = number of (i+1)'s in row r.

    Within a row the entries increase left to right, so reading right to left
    meets the larger letters first.
    """
    counts = [0] * (len(fillings) + 1)
    for r in range(nrows):
        for letter in range(len(fillings) - 1, -1, -1):
            n = fillings[letter][r]
            if not n:
                continue
            if letter > 0 and counts[letter] + n > counts[letter - 1]:
                return False
            counts[letter] += n
    return True


@lru_cache(maxsize=None)
def lr_coefficients(lam: tuple[int, ...], mu: tuple[int, ...], max_rows: int = 4) -> dict[tuple[int, ...], int]:
    """c^nu_{lam, mu} for all nu with at most max_rows rows, by LR tableau enumeration."""
    mu = tuple(x for x in mu if x)
    result: dict[tuple[int, ...], int] = {}

    def rec(shape, letter, fillings):
        if letter == len(mu):
            if _is_lattice(fillings, max_rows):
                nu = tuple(x for x in shape if x)
                result[nu] = result.get(nu, 0) + 1
            return
        for new, added in _horizontal_strips(shape, mu[letter], letter, max_rows):
            rec(new, letter + 1, fillings + [added])

    rec(tuple(lam) + (0,) * (max_rows - len(lam)), 0, [])
    return result


def _a3_partition(w: DominantWeight) -> tuple[int, ...]:
    return w.ambient


@lru_cache(maxsize=None)
def lr_tensor(a: DominantWeight, b: DominantWeight) -> RepRingElement:
    """V_a (x) V_b for SL4 via LR coefficients, reducing full columns of height 4."""
    if a.system is not A3 or b.system is not A3:
        raise ValueError("lr_tensor is defined for A3 weights")
    out: dict[DominantWeight, int] = {}
    for nu, c in lr_coefficients(_a3_partition(a), _a3_partition(b)).items():
        nu = tuple(nu) + (0,) * (4 - len(nu))
        w = DominantWeight.from_ambient(A3, nu)
        out[w] = out.get(w, 0) + c
    return RepRingElement(A3, out)


# ---------------------------------------------------------------------------
# closed forms


def compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def tensor_formula_split(n: int, m: int) -> RepRingElement:
    """V(0,n,0) (x) V(0,m,0) as a sum over triples (m1, m2, m3) of m with m2 + m3 <= n."""
    out = RepRingElement.zero(A3)
    for m1, m2, m3 in compositions(m, 3):
        if m2 + m3 <= n:
            out = out + RepRingElement.irreducible(V(m2, n + m1 - m2 - m3, m2))
    return out


def tensor_formula_inert(n: int, m: int) -> RepRingElement:
    """W(0,n) (x) W(0,m) as a sum over (m1, m2) with m1 + m2 = m, m2 <= n, and s <= m2."""
    out = RepRingElement.zero(C2)
    for m2 in range(min(m, n) + 1):
        m1 = m - m2
        for s in range(m2 + 1):
            out = out + RepRingElement.irreducible(W(s, n + m1 - m2))
    return out


def sym_wedge2_split(k: int) -> RepRingElement:
    """Sym^k of the SL4 exterior square: V(0,k,0) + V(0,k-2,0) + ..."""
    return RepRingElement(A3, {V(0, k - 2 * i, 0): 1 for i in range(k // 2 + 1)})


def branch_a3_to_c2(u: int, v: int, w: int) -> RepRingElement:
    """Restriction of V(u,v,w) from SL4 to Sp4 by the explicit double-sum law."""
    out = RepRingElement.zero(C2)
    for s in range(v + 1):
        for t in range(min(w, u) + 1):
            out = out + RepRingElement.irreducible(W(s + t, u + w - 2 * t))
    return out


# ---------------------------------------------------------------------------
# oracles


def sym_power_character(base: DominantWeight | WeightMultisetCharacter, k: int,
                        budget: int = DEFAULT_SYM_BUDGET) -> WeightMultisetCharacter:
    """Character of Sym^k via k h_k = sum_j psi^j(chi) h_{k-j}."""
    chi = base if isinstance(base, WeightMultisetCharacter) else irreducible_character(base)
    if chi.mass() ** k > budget:
        raise BudgetExceeded(f"dim^k = {chi.mass()}^{k} exceeds the budget {budget}")
    h = [WeightMultisetCharacter.trivial(chi.system)]
    adams = [None] + [chi.adams(j) for j in range(1, k + 1)]
    for n in range(1, k + 1):
        acc = WeightMultisetCharacter(chi.system, {})
        for j in range(1, n + 1):
            acc = acc + adams[j] * h[n - j]
        if any(m % n for m in acc.mults.values()):
            raise ArithmeticError("Newton recursion produced a non-integral multiplicity")
        h.append(WeightMultisetCharacter(chi.system, {w: m // n for w, m in acc.mults.items()}))
    return h[k]


def _is_dominant(system: RootSystemId, v) -> bool:
    if system is A3:
        return all(v[i] >= v[i + 1] for i in range(3))
    return v[0] >= v[1] >= 0


def _dominant_key(system: RootSystemId, v) -> tuple:
    w = DominantWeight.from_ambient(system, v)
    return (height(system, v), w.coords)


def decompose_character(c: WeightMultisetCharacter) -> RepRingElement:
    """Strip highest weights until nothing is left."""
    system = c.system
    rest = dict(c.mults)
    out: dict[DominantWeight, int] = {}
    while rest:
        if any(m < 0 for m in rest.values()):
            raise NotACharacterError("negative multiplicity encountered")
        top = max(rest, key=lambda v: height(system, v))
        if not _is_dominant(system, top):
            raise NotACharacterError(f"maximal weight {top} is not dominant")
        dominant = [v for v in rest if _is_dominant(system, v)]
        top = max(dominant, key=lambda v: _dominant_key(system, v))
        w = DominantWeight.from_ambient(system, top)
        m = rest[top]
        out[w] = m
        for mu, k in irreducible_character(w).mults.items():
            left = rest.get(mu, 0) - m * k
            if left:
                rest[mu] = left
            else:
                rest.pop(mu, None)
    return RepRingElement(system, out)


def restrict_a3_to_c2(c: WeightMultisetCharacter) -> WeightMultisetCharacter:
    """Eigenvalue specialisation (x1, x2, x3, x4) -> (a, b, 1/b, 1/a)."""
    if c.system is not A3:
        raise ValueError("restriction expects an A3 character")
    out: dict[tuple[int, int], int] = {}
    for e, m in c.mults.items():
        key = (e[0] - e[3], e[1] - e[2])
        out[key] = out.get(key, 0) + m
    return WeightMultisetCharacter(C2, out)


def sym_power(base: DominantWeight, k: int) -> RepRingElement:
    """Sym^k decomposed into irreducibles through the plethysm oracle."""
    return _sym_power_cached(base, k)


@lru_cache(maxsize=None)
def _sym_power_cached(base: DominantWeight, k: int) -> RepRingElement:
    return decompose_character(sym_power_character(base, k))
