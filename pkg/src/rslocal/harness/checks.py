"""Individual verification checks.

Each check returns ``(passed, witness)``; the witness is a short JSON-ready
value: a count of verified instances on success, the first failing instance
otherwise, or the worst numeric error for the sampled checks. The ``fault``
argument is the fault-injection hook: it perturbs the oracle side of the
first comparison it is applied to, and is the identity unless the runner
activates it for that check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..decomp import (
    RepRingElement,
    branch_a3_to_c2,
    decompose_character,
    lr_tensor,
    restrict_a3_to_c2,
    sym_power,
    sym_wedge2_split,
    tensor_formula_inert,
    tensor_formula_split,
)
from ..lfactor import (
    EulerFactor,
    euler_factor,
    local_zeta,
    spin_factor,
    std_eigenvalues,
    std_twisted_factor,
    wedge2_eigenvalues,
    wedge2_factor,
    wedge2_factor_inert_via_spin,
    wedge2_factor_inert_via_std,
)
from ..lie import (
    A3,
    C2,
    V,
    W,
    WeightMultisetCharacter,
    character_alternant,
    character_freudenthal,
    evaluate_character,
    irreducible_character,
    iter_weights,
    weyl_dimension,
)
from ..poly import Poly
from ..satake import SatakeClassA3, SatakeClassC2, symbolic_class
from ..series import (
    CSCase,
    closed_form_local_integral,
    evaluate_series,
    localform_monomial,
    localforminert_series,
    lseries_product,
    numeric_local_integral,
    optimal_form_series,
    raw_local_series,
    raw_truncation_tail,
    unipotent_closed_form,
    unipotent_inner_sum,
    zeta_series,
    TruncatedSeries2,
)
from .sampling import sample_satake


class Fault:
    """One-shot perturbation of an oracle value."""

    def __init__(self, active: bool = False):
        self.active = active
        self.fired = False

    def __call__(self, value):
        if not self.active or self.fired:
            return value
        self.fired = True
        return _perturb(value)


def _perturb(value):
    if isinstance(value, RepRingElement):
        terms = dict(value.terms)
        w = min(terms, key=lambda w: w.coords) if terms else next(iter(RepRingElement.one(value.system).terms))
        terms[w] = terms.get(w, 0) + (-1 if terms.get(w, 0) > 1 else 1)
        return RepRingElement(value.system, terms)
    if isinstance(value, TruncatedSeries2):
        coeffs = dict(value.coeffs)
        coeffs[(0, 0)] = _perturb(value[(0, 0)])
        return TruncatedSeries2(value.order, coeffs, value.domain)
    if isinstance(value, WeightMultisetCharacter):
        mults = dict(value.mults)
        key = min(mults)
        mults[key] += 1
        return WeightMultisetCharacter(value.system, mults)
    if isinstance(value, EulerFactor):
        return EulerFactor(_perturb(value.poly), value.q)
    if isinstance(value, Poly):
        return value + Poly.monomial(value.degree + 1, 1, value.var)
    if isinstance(value, complex):
        return value + 1
    if isinstance(value, bool):
        return not value
    if isinstance(value, int):
        return value + 1
    if isinstance(value, tuple):
        return (_perturb(value[0]),) + value[1:]
    return value


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    groups: tuple[str, ...]
    run: Callable = field(compare=False)


CHECKS: list[Check] = []

_IDENTITY = {A3: SatakeClassA3, C2: SatakeClassC2}


def check(id: str, anchor: str, *groups: str):
    def deco(fn):
        CHECKS.append(Check(id, anchor, groups, fn))
        return fn
    return deco


# ---------------------------------------------------------------------------


@check("char.alternant_vs_freudenthal", "Weyl character formula", "lemmas")
def _char_oracles(cfg, fault):
    n = 0
    for system in (A3, C2):
        for w in iter_weights(system, cfg.char_bound):
            f = character_freudenthal(w)
            a = fault(character_alternant(w))
            if f != a:
                return False, f"characters differ at {w!r}"
            n += 1
    return True, f"{n} weights"


@check("char.weyl_dimension", "Weyl dimension formula", "lemmas")
def _char_dims(cfg, fault):
    n = 0
    for system in (A3, C2):
        for w in iter_weights(system, cfg.char_bound):
            mass = fault(irreducible_character(w).mass())
            if mass != weyl_dimension(w):
                return False, f"mass {mass} != dim {weyl_dimension(w)} at {w!r}"
            if evaluate_character(w, _IDENTITY[system].identity()) != weyl_dimension(w):
                return False, f"trace at identity != dim at {w!r}"
            n += 1
    return True, f"{n} weights"


@check("lemma.sym_wedge2_split", "Lemma SymmetricFactSL4", "lemmas")
def _lemma_sym(cfg, fault):
    for k in range(cfg.sym_bound + 1):
        closed, oracle = sym_wedge2_split(k), fault(sym_power(V(0, 1, 0), k))
        if closed != oracle:
            return False, f"k={k}: formula {closed!r} vs plethysm {oracle!r}"
    return True, f"k<={cfg.sym_bound}"


@check("lemma.tensor_split", "Lemma LRrulesplit", "lemmas")
def _lemma_tensor_split(cfg, fault):
    b = cfg.tensor_bound
    for n in range(b + 1):
        for m in range(b + 1):
            closed = tensor_formula_split(n, m)
            lr = fault(lr_tensor(V(0, n, 0), V(0, m, 0)))
            if closed != lr:
                return False, f"(n,m)=({n},{m}): formula {closed!r} vs LR {lr!r}"
            prod = decompose_character(irreducible_character(V(0, n, 0)) * irreducible_character(V(0, m, 0)))
            if closed != prod:
                return False, f"(n,m)=({n},{m}): formula {closed!r} vs characters {prod!r}"
    return True, f"n,m<={b}"


@check("lemma.tensor_inert", "Lemma LRruleinert", "lemmas")
def _lemma_tensor_inert(cfg, fault):
    b = cfg.tensor_bound
    for n in range(b + 1):
        for m in range(b + 1):
            closed = tensor_formula_inert(n, m)
            prod = fault(decompose_character(irreducible_character(W(0, n)) * irreducible_character(W(0, m))))
            if closed != prod:
                return False, f"(n,m)=({n},{m}): formula {closed!r} vs characters {prod!r}"
    return True, f"n,m<={b}"


@check("lemma.branching", "eq. (branching)", "lemmas")
def _lemma_branching(cfg, fault):
    b = cfg.branch_bound
    for u in range(b + 1):
        for v in range(b + 1):
            for w in range(b + 1):
                closed = branch_a3_to_c2(u, v, w)
                oracle = fault(decompose_character(restrict_a3_to_c2(irreducible_character(V(u, v, w)))))
                if closed != oracle:
                    return False, f"V({u},{v},{w}): formula {closed!r} vs restriction {oracle!r}"
                if closed.dim() != weyl_dimension(V(u, v, w)):
                    return False, f"V({u},{v},{w}): dimension mismatch"
    return True, f"u,v,w<={b}"


@check("factor.brwedge", "eq. (brwedge)", "factors")
def _factor_brwedge(cfg, fault):
    c2 = symbolic_class(C2)
    restricted = c2.as_sl4()
    lhs = wedge2_factor(restricted)
    rhs = fault(euler_factor(std_eigenvalues(c2) + (1,)))
    if lhs.poly != rhs.poly:
        return False, "wedge^2 factor of (a,b,1/b,1/a) differs from std + 1"
    rep = decompose_character(restrict_a3_to_c2(irreducible_character(V(0, 1, 0))))
    if rep != RepRingElement(C2, {W(1, 0): 1, W(0, 0): 1}):
        return False, f"restricted wedge^2 decomposes as {rep!r}"
    a3 = symbolic_class(A3)
    if evaluate_character(V(0, 1, 0), a3) != sum(wedge2_eigenvalues(a3)):
        return False, "trace of V(0,1,0) differs from the sum of wedge^2 eigenvalues"
    return True, "symbolic in a, b, T"


def _factor_relation(built, parts, fault):
    if built.degree != 6 or built.constant_term != 1:
        return False, f"degree {built.degree}, constant term {built.constant_term}"
    expected = fault(parts)
    if built.poly != expected:
        return False, "factor differs from the product of its defining pieces"
    return True, "degree 6, constant term 1"


@check("factor.ext_to_spin", "eq. (extTOspin)", "factors")
def _factor_spin(cfg, fault):
    s = symbolic_class(C2)
    parts = Poly([1])
    for lam in s.eigenvalues4():
        parts = parts * Poly([1, -lam])
    parts = parts * Poly([1, 0, -1])
    return _factor_relation(wedge2_factor_inert_via_spin(s), parts, fault)


@check("factor.ext_to_std", "eq. (extTOstd)", "factors")
def _factor_std(cfg, fault):
    s = symbolic_class(C2)
    parts = Poly([1])
    for lam in std_eigenvalues(s):
        parts = parts * Poly([1, lam])
    parts = parts * Poly([1, -1])
    if std_twisted_factor(s, -1).degree != 5:
        return False, "twisted std factor is not of degree 5"
    return _factor_relation(wedge2_factor_inert_via_std(s), parts, fault)


@check("unipotent.closed_form", "unipotent identity", "unipotent")
def _unipotent(cfg, fault):
    for n in range(cfg.unipotent_bound + 1):
        if unipotent_inner_sum(n) != fault(unipotent_closed_form(n)):
            return False, f"n={n}"
    return True, f"n<={cfg.unipotent_bound}"


@check("localform.qpower", "eq. (localform)", "split", "inert")
def _qpower(cfg, fault):
    N = max(cfg.split_order, cfg.inert_order)
    for m in range(N + 1):
        for n in range(N + 1):
            if localform_monomial(m, n) != fault((m, m + n)):
                return False, f"(m,n)=({m},{n})"
    return True, f"m,n<={N}"


def _series_witness(lhs, rhs):
    diff = lhs.first_difference(rhs)
    (m, n), a, b = diff
    return f"X^{m} Y^{n}: {a!r} vs {b!r}"


@check("split.manipulation_chain", "eq. (eq:optimalformsplit)", "split")
def _split_chain(cfg, fault):
    N = cfg.split_order
    case = CSCase.split()
    d = case.domain
    lhs = raw_local_series(case, N) * zeta_series(1, 1, N, d) * zeta_series(2, 0, N, d) * zeta_series(0, 2, N, d)
    rhs = fault(optimal_form_series(case, N))
    if lhs != rhs:
        return False, _series_witness(lhs, rhs)
    return True, f"N={N}"


@check("split.main_identity", "Theorem SplitTheorem", "split")
def _split_main(cfg, fault):
    N = cfg.split_order
    case = CSCase.split()
    lhs = optimal_form_series(case, N)
    rhs = fault(lseries_product(case, N))
    if lhs != rhs:
        return False, _series_witness(lhs, rhs)
    return True, f"N={N}"


@check("inert.localforminert", "eq. (localforminert)", "inert")
def _inert_localform(cfg, fault):
    N = cfg.inert_order
    case = CSCase.inert()
    lhs = raw_local_series(case, N) * zeta_series(1, 1, N, case.domain)
    rhs = fault(localforminert_series(N))
    if lhs != rhs:
        return False, _series_witness(lhs, rhs)
    return True, f"N={N}"


@check("inert.main_identity", "Theorem inertTheorem", "inert")
def _inert_main(cfg, fault):
    N = cfg.inert_order
    case = CSCase.inert()
    lhs = raw_local_series(case, N) * zeta_series(1, 1, N, case.domain)
    rhs = fault(lseries_product(case, N))
    if lhs != rhs:
        return False, _series_witness(lhs, rhs)
    optimal = optimal_form_series(case, N)
    if optimal != rhs:
        return False, "optimal form: " + _series_witness(optimal, rhs)
    return True, f"N={N}"


def _numeric(kind, cfg, fault):
    worst = 0.0
    worst_tail = 0.0
    for satake in sample_satake(kind, cfg.seed, cfg.samples):
        case = CSCase(kind, satake)
        result = numeric_local_integral(case, cfg.q, cfg.s, cfg.z, cfg.terms)
        closed = fault(closed_form_local_integral(case, cfg.q, cfg.s, cfg.z))
        err = abs(result.value - closed) / abs(closed)
        worst = max(worst, err)
        worst_tail = max(worst_tail, result.tail)
    return worst <= cfg.tol, {"max_rel_error": worst, "max_tail": worst_tail}


@check("numeric.split", "Theorem SplitTheorem", "split")
def _numeric_split(cfg, fault):
    return _numeric("split", cfg, fault)


@check("numeric.inert", "Theorem inertTheorem", "inert")
def _numeric_inert(cfg, fault):
    return _numeric("inert", cfg, fault)


@check("numeric.closure", "eq. (localform)", "split", "inert")
def _numeric_closure(cfg, fault):
    worst = 0.0
    for kind, N in (("split", cfg.split_order), ("inert", cfg.inert_order)):
        satake = sample_satake(kind, cfg.seed, 1)[0]
        case = CSCase(kind, satake)
        X, Y = cfg.q ** -complex(cfg.s), cfg.q ** -complex(cfg.z)
        pref = 1 - cfg.q ** complex(cfg.z - cfg.s - 1)
        series_value = pref * evaluate_series(raw_local_series(CSCase(kind), N), case, X, Y)
        result = numeric_local_integral(case, cfg.q, cfg.s, cfg.z, cfg.terms)
        bound = abs(pref) * raw_truncation_tail(kind, N, X, Y) + result.tail
        err = abs(fault(series_value) - result.value)
        if err > bound:
            return False, {"case": kind, "error": err, "bound": bound}
        worst = max(worst, err / bound if bound else 0.0)
    return True, {"max_error_over_bound": worst}
