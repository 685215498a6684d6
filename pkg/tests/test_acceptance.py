"""Acceptance gate: one test per criterion, each emitting a PASS/FAIL line.

The lines are collected and shown in an "acceptance criteria" section at the
end of the pytest run.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""
import sys
import time

import pytest

from rslocal.decomp import (
    branch_a3_to_c2,
    decompose_character,
    lr_tensor,
    restrict_a3_to_c2,
    sym_power,
    sym_wedge2_split,
    tensor_formula_inert,
    tensor_formula_split,
)
from rslocal.harness.cli import main as cli_main
from rslocal.harness.sampling import sample_satake
from rslocal.lfactor import (
    euler_factor,
    std_eigenvalues,
    symbolic_class,
    wedge2_factor,
    wedge2_factor_inert_via_spin,
    wedge2_factor_inert_via_std,
)
from rslocal.lie import A3, C2, V, W, character_alternant, character_freudenthal, irreducible_character, iter_weights, weyl_dimension
from rslocal.series import (
    CSCase,
    closed_form_local_integral,
    lseries_product,
    numeric_local_integral,
    optimal_form_series,
    raw_local_series,
    unipotent_closed_form,
    unipotent_inner_sum,
    zeta_series,
)


@pytest.fixture
def report(acceptance_log):
    def emit(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
        acceptance_log(line)
        print(line)
        assert ok, line
    return emit


def first_mismatch(a, b):
    diff = a.first_difference(b)
    return "" if diff is None else f"first mismatch at X^{diff[0][0]} Y^{diff[0][1]}"


def test_criterion_1_split_main_identity(report):
    start = time.perf_counter()
    case = CSCase.split()
    lhs, rhs = optimal_form_series(case, 8), lseries_product(case, 8)
    elapsed = time.perf_counter() - start
    ok = lhs == rhs and elapsed <= 300
    report(1, "split main identity, N=8, exact", ok, first_mismatch(lhs, rhs) or f"{elapsed:.2f}s")


def test_criterion_2_split_manipulation_chain(report):
    case = CSCase.split()
    d = case.domain
    lhs = raw_local_series(case, 8) * zeta_series(1, 1, 8, d) * zeta_series(2, 0, 8, d) * zeta_series(0, 2, 8, d)
    rhs = optimal_form_series(case, 8)
    report(2, "split raw series times zeta(XY) zeta(X^2) zeta(Y^2) equals the optimal form, N=8",
           lhs == rhs, first_mismatch(lhs, rhs))


def test_criterion_3_inert_main_identity(report):
    case = CSCase.inert()
    lhs = raw_local_series(case, 10) * zeta_series(1, 1, 10, case.domain)
    rhs = lseries_product(case, 10)
    report(3, "inert raw series times zeta(XY) equals the L-series product, N=10",
           lhs == rhs, first_mismatch(lhs, rhs))


def test_criterion_4_unipotent_closed_form(report):
    bad = [n for n in range(21) if unipotent_inner_sum(n) != unipotent_closed_form(n)]
    report(4, "unipotent inner sum equals closed form for 0 <= n <= 20", not bad, f"failing n: {bad}" if bad else "")


def test_criterion_5_lemma_suite(report):
    failures = []
    for n in range(6):
        for m in range(6):
            if tensor_formula_split(n, m) != lr_tensor(V(0, n, 0), V(0, m, 0)):
                failures.append(f"split tensor ({n},{m})")
            prod = irreducible_character(W(0, n)) * irreducible_character(W(0, m))
            if tensor_formula_inert(n, m) != decompose_character(prod):
                failures.append(f"inert tensor ({n},{m})")
    for k in range(9):
        if sym_wedge2_split(k) != sym_power(V(0, 1, 0), k):
            failures.append(f"Sym^{k}")
    for u in range(4):
        for v in range(4):
            for w in range(4):
                restricted = decompose_character(restrict_a3_to_c2(irreducible_character(V(u, v, w))))
                if branch_a3_to_c2(u, v, w) != restricted:
                    failures.append(f"branching ({u},{v},{w})")
    report(5, "tensor, symmetric-power and branching formulas equal their oracles", not failures,
           ", ".join(failures[:5]))


def test_criterion_6_factor_relations(report):
    c = symbolic_class(C2)
    brwedge = wedge2_factor(c.as_sl4()).poly == euler_factor(std_eigenvalues(c) + (1,)).poly
    spin = wedge2_factor_inert_via_spin(c)
    std = wedge2_factor_inert_via_std(c)
    shapes = [(f.degree, f.constant_term) for f in (spin, std)]
    ok = brwedge and shapes == [(6, 1), (6, 1)]
    report(6, "restricted wedge^2 = std + 1 symbolically; inert factors have degree 6 and constant term 1",
           ok, f"brwedge={brwedge}, (degree, constant)={shapes}")


def test_criterion_7_numeric_end_to_end(report):
    start = time.perf_counter()
    worst = 0.0
    for kind in ("split", "inert"):
        for satake in sample_satake(kind, 0, 10):
            case = CSCase(kind, satake)
            got = numeric_local_integral(case, 3, 3, 2, 60).value
            want = closed_form_local_integral(case, 3, 3, 2)
            worst = max(worst, abs(got - want) / abs(want))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-6 and elapsed <= 60
    report(7, "numeric local integral matches the closed form, 10 samples per case, q=3, s=3, z=2, M=60",
           ok, f"max relative error {worst:.2e}, {elapsed:.1f}s")


def test_criterion_8_character_oracles(report):
    bad = []
    for system in (A3, C2):
        for w in iter_weights(system, 4):
            f = character_freudenthal(w)
            if f != character_alternant(w) or f.mass() != weyl_dimension(w):
                bad.append(repr(w))
    report(8, "Freudenthal equals alternant characters for coordinates <= 4; masses equal Weyl dimensions",
           not bad, ", ".join(bad[:5]))


def test_criterion_9_determinism(report, tmp_path, capsys):
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    codes = [cli_main(["verify", "all", "--seed", "2024", "--out", str(p)]) for p in paths]
    capsys.readouterr()
    same = paths[0].read_bytes() == paths[1].read_bytes()
    report(9, "two `verify all` runs with the same seed give byte-identical reports",
           same and codes == [0, 0], f"exit codes {codes}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
