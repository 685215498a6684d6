"""Truncated bivariate series in X = q^-s, Y = q^-z and the unramified local integral.

Coefficients of a :class:`TruncatedSeries2` live in one of the domains listed
in ``DOMAINS``. Representation-ring coefficients are formal traces, so an
identity between such series holds for every Satake class at once.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .decomp import RepRingElement, sym_power
from .lfactor import wedge2_factor, wedge2_factor_inert_via_spin
from .lie import A3, C2, DominantWeight, TraceEvaluator, V, W, weyl_dimension
from .poly import Poly
from .satake import SatakeClassA3, SatakeClassC2

QINV = "q^-1"


def _qinv_poly(coeffs) -> Poly:
    return Poly([Fraction(c) for c in coeffs], QINV)


DOMAINS: dict[str, tuple[Callable[[], object], Callable[[], object]]] = {
    "integer": (lambda: 0, lambda: 1),
    "rational": (lambda: Fraction(0), lambda: Fraction(1)),
    "qinv": (lambda: _qinv_poly([]), lambda: _qinv_poly([1])),
    "complex": (lambda: 0j, lambda: 1 + 0j),
    "repring-A3": (lambda: RepRingElement.zero(A3), lambda: RepRingElement.one(A3)),
    "repring-C2": (lambda: RepRingElement.zero(C2), lambda: RepRingElement.one(C2)),
}


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


class SeriesMismatch(ValueError):
    pass


class TruncatedSeries2:
    """sum c[m, n] X^m Y^n over m + n <= order."""

    __slots__ = ("order", "domain", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[tuple[int, int], object] = (), domain: str = "integer"):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if domain not in DOMAINS:
            raise ValueError(f"unknown coefficient domain {domain!r}")
        self.order = order
        self.domain = domain
        clean = {}
        for (m, n), c in dict(coeffs).items():
            if m < 0 or n < 0:
                raise ValueError(f"negative exponent ({m}, {n})")
            if m + n > order:
                continue
            if not _is_zero(c):
                clean[(m, n)] = c
        self.coeffs = clean

    @property
    def zero(self):
        return DOMAINS[self.domain][0]()

    @property
    def one(self):
        return DOMAINS[self.domain][1]()

    def __getitem__(self, key: tuple[int, int]):
        m, n = key
        if m < 0 or n < 0 or m + n > self.order:
            raise IndexError(f"({m}, {n}) is outside the truncation order {self.order}")
        return self.coeffs.get(key, self.zero)

    def indices(self):
        for total in range(self.order + 1):
            for m in range(total + 1):
                yield m, total - m

    def _check(self, other: "TruncatedSeries2"):
        if not isinstance(other, TruncatedSeries2):
            raise SeriesMismatch("operand is not a truncated series")
        if other.domain != self.domain or other.order != self.order:
            raise SeriesMismatch(
                f"series mismatch: ({self.domain}, N={self.order}) vs ({other.domain}, N={other.order})"
            )

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return TruncatedSeries2(self.order, out, self.domain)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] - c if k in out else -c
        return TruncatedSeries2(self.order, out, self.domain)

    def __mul__(self, other):
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries2):
            return NotImplemented
        return (self.order, self.domain) == (other.order, other.domain) and not (self - other).coeffs

    def first_difference(self, other: "TruncatedSeries2"):
        """Lowest index where the two series differ, with both coefficients."""
        self._check(other)
        for key in self.indices():
            a, b = self[key], other[key]
            if not _is_zero(a - b):
                return key, a, b
        return None

    def map(self, f, domain: str) -> "TruncatedSeries2":
        return TruncatedSeries2(self.order, {k: f(c) for k, c in self.coeffs.items()}, domain)

    def __repr__(self):
        return f"TruncatedSeries2(order={self.order}, domain={self.domain!r}, terms={len(self.coeffs)})"


def series_mul(a: TruncatedSeries2, b: TruncatedSeries2) -> TruncatedSeries2:
    """Cauchy product, truncated at the common order."""
    a._check(b)
    N = a.order
    out: dict[tuple[int, int], object] = {}
    for (i, j), c in a.coeffs.items():
        for (k, l), d in b.coeffs.items():
            if i + j + k + l > N:
                continue
            key = (i + k, j + l)
            p = c * d
            out[key] = out[key] + p if key in out else p
    return TruncatedSeries2(N, out, a.domain)


def zeta_series(i: int, j: int, N: int, domain: str = "integer") -> TruncatedSeries2:
    """sum_k (X^i Y^j)^k, truncated at order N."""
    if i < 0 or j < 0 or (i, j) == (0, 0):
        raise ValueError("zeta_series needs a nonconstant monomial")
    one = DOMAINS[domain][1]()
    coeffs = {}
    k = 0
    while k * (i + j) <= N:
        coeffs[(k * i, k * j)] = one
        k += 1
    return TruncatedSeries2(N, coeffs, domain)


# ---------------------------------------------------------------------------
# unipotent inner integral, as polynomials in u = q^(z-s) over Q[q^-1]


def unit_shell_integral(k: int) -> Poly:
    """Integral of psi(varpi^k b) over |b| = 1 for psi of conductor O, in Q[q^-1]."""
    if k >= 0:
        return _qinv_poly([1, -1])
    if k == -1:
        return _qinv_poly([0, -1])
    return _qinv_poly([])


def unipotent_inner_sum(n: int) -> Poly:
    """1 + sum_{l>=1} u^l * (unit-shell integral of psi(varpi^{n-l} b)); finitely many terms survive."""
    if n < 0:
        raise ValueError("valuation must be nonnegative")
    coeffs = [_qinv_poly([1])]
    for ell in range(1, n + 2):
        coeffs.append(unit_shell_integral(n - ell))
    return Poly(coeffs, "u")


def unipotent_closed_form(n: int) -> Poly:
    """(1 - u^(n+1)) (1 - q^-1 u) / (1 - u), computed by exact polynomial division."""
    if n < 0:
        raise ValueError("valuation must be nonnegative")
    one = _qinv_poly([1])
    numerator = (Poly([one], "u") - Poly.monomial(n + 1, one, "u")) * Poly([one, _qinv_poly([0, -1])], "u")
    return numerator.divexact(Poly([one, -one], "u"))


# ---------------------------------------------------------------------------
# local data


@dataclass(frozen=True)
class CSCase:
    """A split place (SL4 class) or an inert place (Sp4 class).

    ``satake=None`` means the generic class: coefficients stay formal.
    """

    kind: str
    satake: SatakeClassA3 | SatakeClassC2 | None = None

    def __post_init__(self):
        if self.kind not in ("split", "inert"):
            raise ValueError(f"kind must be 'split' or 'inert', got {self.kind!r}")
        if self.satake is not None:
            want = SatakeClassA3 if self.kind == "split" else SatakeClassC2
            if not isinstance(self.satake, want):
                raise TypeError(f"{self.kind} case needs a {want.__name__}")

    @classmethod
    def split(cls, satake: SatakeClassA3 | None = None) -> "CSCase":
        return cls("split", satake)

    @classmethod
    def inert(cls, satake: SatakeClassC2 | None = None) -> "CSCase":
        return cls("inert", satake)

    @property
    def domain(self) -> str:
        return "repring-A3" if self.kind == "split" else "repring-C2"

    def whittaker_weight(self, m: int, n: int) -> DominantWeight:
        return V(m, n, m) if self.kind == "split" else W(m, n)

    def base_weight(self) -> DominantWeight:
        return V(0, 1, 0) if self.kind == "split" else W(0, 1)

    def l_factor(self, q=None):
        """The exterior-square Euler factor at this place."""
        if self.satake is None:
            raise ValueError("a Satake class is required")
        if self.kind == "split":
            return wedge2_factor(self.satake, q)
        return wedge2_factor_inert_via_spin(self.satake, q)


@dataclass(frozen=True)
class CSValue:
    """Normalised Whittaker value q^q_power * trace."""

    q_power: int
    trace: object

    def at(self, q):
        return q ** self.q_power * self.trace if self.q_power >= 0 else self.trace / q ** (-self.q_power)


def cs_value(case: CSCase, m: int, n: int, evaluator: TraceEvaluator | None = None) -> CSValue:
    if m < 0 or n < 0:
        raise ValueError("Whittaker values vanish off the dominant cone")
    w = case.whittaker_weight(m, n)
    if case.satake is None:
        trace = RepRingElement.irreducible(w)
    else:
        evaluator = evaluator or TraceEvaluator(case.satake)
        trace = evaluator(w)
    return CSValue(-(3 * m + 2 * n), trace)


def localform_monomial(m: int, n: int) -> tuple[int, int]:
    """(X, Y) exponents of the (m, n) term after absorbing delta^(1/2).

    Exponents of q are linear forms (coef of s, coef of z, constant); the
    constant part must cancel exactly.
    """
    torus = (-m, -m - n, 3 * m + 2 * n)
    delta_half = (0, 0, -(3 * m + 2 * n))
    total = tuple(a + b for a, b in zip(torus, delta_half))
    if total[2] != 0:
        raise AssertionError(f"q-power bookkeeping failed at ({m}, {n}): {total}")
    return -total[0], -total[1]


def raw_local_series(case: CSCase, N: int) -> TruncatedSeries2:
    """sum_{m,n} [rep(m,n)] X^m Y^(m+n) sum_{alpha<=n} (X/Y)^alpha, truncated."""
    if N < 1:
        raise ValueError("order must be at least 1")
    coeffs: dict[tuple[int, int], RepRingElement] = {}
    for m in range(N // 2 + 1):
        for n in range(N - 2 * m + 1):
            xe, ye = localform_monomial(m, n)
            rep = cs_value(CSCase(case.kind), m, n).trace
            for alpha in range(n + 1):
                key = (xe + alpha, ye - alpha)
                coeffs[key] = coeffs[key] + rep if key in coeffs else rep
    return TruncatedSeries2(N, coeffs, case.domain)


def _accumulate(coeffs, key, w: DominantWeight, N: int):
    if key[0] + key[1] > N:
        return
    rep = RepRingElement.irreducible(w)
    coeffs[key] = coeffs[key] + rep if key in coeffs else rep


def optimal_form_series(case: CSCase, N: int) -> TruncatedSeries2:
    """Direct tuple enumeration of the fully multiplied-out generating function."""
    if N < 1:
        raise ValueError("order must be at least 1")
    coeffs: dict[tuple[int, int], RepRingElement] = {}
    if case.kind == "split":
        # [V(a, c+e, a)] X^(a+b+c+2d) Y^(a+b+e+2f)
        for a in range(N // 2 + 1):
            for b in range(N // 2 - a + 1):
                base = 2 * (a + b)
                for c in range(N - base + 1):
                    for e in range(N - base - c + 1):
                        for d in range((N - base - c - e) // 2 + 1):
                            for f in range((N - base - c - e - 2 * d) // 2 + 1):
                                key = (a + b + c + 2 * d, a + b + e + 2 * f)
                                _accumulate(coeffs, key, V(a, c + e, a), N)
    else:
        # [W(s, m1+t)] X^(s+r+m1) Y^(s+r+t)
        for s in range(N // 2 + 1):
            for r in range(N // 2 - s + 1):
                base = 2 * (s + r)
                for m1 in range(N - base + 1):
                    for t in range(N - base - m1 + 1):
                        _accumulate(coeffs, (s + r + m1, s + r + t), W(s, m1 + t), N)
    return TruncatedSeries2(N, coeffs, case.domain)


def localforminert_series(N: int) -> TruncatedSeries2:
    """sum over (a, b, alpha, beta) of [W(a, alpha+beta)] X^(a+b+alpha) Y^(a+b+beta)."""
    coeffs: dict[tuple[int, int], RepRingElement] = {}
    for a in range(N // 2 + 1):
        for b in range(N // 2 - a + 1):
            for alpha in range(N - 2 * (a + b) + 1):
                for beta in range(N - 2 * (a + b) - alpha + 1):
                    _accumulate(coeffs, (a + b + alpha, a + b + beta), W(a, alpha + beta), N)
    return TruncatedSeries2(N, coeffs, "repring-C2")


def l_series(case: CSCase, N: int, variable: str) -> TruncatedSeries2:
    """sum_k [Sym^k(base)] Z^k with Z = X or Y; Sym^k from the plethysm oracle."""
    base = case.base_weight()
    coeffs = {}
    for k in range(N + 1):
        coeffs[(k, 0) if variable == "X" else (0, k)] = sym_power(base, k)
    return TruncatedSeries2(N, coeffs, case.domain)


def lseries_product(case: CSCase, N: int) -> TruncatedSeries2:
    if N < 1:
        raise ValueError("order must be at least 1")
    return series_mul(l_series(case, N, "X"), l_series(case, N, "Y"))


# ---------------------------------------------------------------------------
# numerics


class NonConvergentError(ArithmeticError):
    pass


@dataclass(frozen=True)
class NumericIntegral:
    value: complex
    tail: float


def _qpow(q, exponent) -> complex:
    return cmath.exp(exponent * math.log(q))


def _local_zeta(q, x) -> complex:
    return 1 / (1 - _qpow(q, -x))


def _term_bound_log(case_kind: str, m: int, n: int, lx: float, ly: float, lu: float) -> float:
    """log of dim * |X|^m |Y|^(m+n) * sum_{alpha<=n} |u|^alpha."""
    w = V(m, n, m) if case_kind == "split" else W(m, n)
    if lu < 0:
        geo = math.log((1 - math.exp(lu * (n + 1))) / (1 - math.exp(lu))) if lu != 0 else math.log(n + 1)
    elif lu == 0:
        geo = math.log(n + 1)
    else:
        geo = lu * n + math.log((1 - math.exp(-lu * (n + 1))) / (1 - math.exp(-lu)))
    return math.log(weyl_dimension(w)) + m * lx + (m + n) * ly + geo


def _tail_estimate(case_kind: str, M: int, q, s, z) -> float:
    lx = -s.real * math.log(q)
    ly = -z.real * math.log(q)
    lu = lx - ly
    pref = abs(1 - _qpow(q, z - s - 1))
    shells = []
    for K in range(M + 1, 2 * M + 3):
        total = 0.0
        for m in range(K + 1):
            for n in ((K,) if m < K else range(K + 1)):
                total += math.exp(_term_bound_log(case_kind, m, n, lx, ly, lu))
        shells.append(total * pref)
    tail = sum(shells)
    last, prev = shells[-1], shells[-2]
    if prev > 0 and last > 0:
        r = last / prev
        if r >= 1:
            return math.inf
        tail += last * r / (1 - r)
    return tail


def numeric_local_integral(case: CSCase, q: int, s: complex, z: complex, M: int) -> NumericIntegral:
    """Partial double sum of the unramified local integral over 0 <= m, n <= M.

    ``M = 0`` returns the bare leading term; its tail is reported but no
    convergence verdict is made from it.
    """
    if case.satake is None:
        raise ValueError("numeric evaluation needs a Satake class")
    if q < 2:
        raise ValueError("q must be at least 2")
    if M < 0:
        raise ValueError("term bound must be nonnegative")
    s, z = complex(s), complex(z)
    satake = case.satake.numeric()
    evaluator = TraceEvaluator(satake, kmax=4 * M + 8)
    u = _qpow(q, z - s)
    singular = abs(1 - u) < 1e-12
    prefactor = 1 / _local_zeta(q, s - z + 1) if singular else _local_zeta(q, s - z) / _local_zeta(q, s - z + 1)
    total = 0j
    for m in range(M + 1):
        for n in range(M + 1):
            w = cs_value(CSCase(case.kind, satake), m, n, evaluator)
            torus = _qpow(q, -m * (s + z - 3) - n * (z - 2))
            unip = (n + 1) if singular else (1 - u ** (n + 1))
            total += torus * w.trace * _qpow(q, w.q_power) * unip
    tail = _tail_estimate(case.kind, M, q, s, z)
    if M >= 1 and not tail < 1:
        raise NonConvergentError(f"tail estimate {tail} >= 1 at s={s}, z={z}, q={q}")
    return NumericIntegral(prefactor * total, tail)


def closed_form_local_integral(case: CSCase, q: int, s: complex, z: complex) -> complex:
    """L(s) L(z) / (zeta(2z) zeta(2s) zeta(s+z) zeta(s-z+1)) with the exterior-square factor."""
    if case.satake is None:
        raise ValueError("numeric evaluation needs a Satake class")
    s, z = complex(s), complex(z)
    factor = case.l_factor()
    point = tuple(complex(x) for x in case.satake.torus)
    Ls = factor.value(_qpow(q, -s), point)
    Lz = factor.value(_qpow(q, -z), point)
    zetas = _local_zeta(q, 2 * z) * _local_zeta(q, 2 * s) * _local_zeta(q, s + z) * _local_zeta(q, s - z + 1)
    return Ls * Lz / zetas


def evaluate_series(series: TruncatedSeries2, case: CSCase, X: complex, Y: complex) -> complex:
    """Numeric value of a representation-ring series at the case's Satake class."""
    if case.satake is None:
        raise ValueError("numeric evaluation needs a Satake class")
    evaluator = TraceEvaluator(case.satake.numeric(), kmax=4 * series.order + 8)
    total = 0j
    for (m, n), c in series.coeffs.items():
        if isinstance(c, RepRingElement):
            c = sum(k * evaluator(w) for w, k in c.terms.items())
        total += complex(c) * X ** m * Y ** n
    return total


def raw_truncation_tail(case_kind: str, N: int, X: complex, Y: complex, cutoff: int = 200) -> float:
    """Bound on the raw series terms of total degree > N (degree of the (m, n) block is 2m + n)."""
    lx, ly = math.log(abs(X)), math.log(abs(Y))
    lu = lx - ly
    total = 0.0
    for m in range(cutoff // 2 + 1):
        for n in range(cutoff - 2 * m + 1):
            if 2 * m + n > N:
                total += math.exp(_term_bound_log(case_kind, m, n, lx, ly, lu))
    return total
