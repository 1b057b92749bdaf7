"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import contextlib
import io
import math
import time

import pytest

from f1hall import forms, quiverrep
from f1hall.cli import main
from f1hall.formats import element_to_text, load_quiver
from f1hall.forms import SymmetricForm, canonical_isometry_class, hyperbolic
from f1hall.hall import HallAlgebra
from f1hall.hallmod import HallModule
from f1hall.lincomb import LinComb
from f1hall.quiverrep import Rep
from f1hall.verify import Cap, Context, run_check

CAPS = {"point": Cap((4,)), "a2": Cap((2, 2)), "loop": Cap((3,))}


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, text: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
        assert ok, text

    return emit


def _clear_caches():
    for f in (
        quiverrep.enumerate_reps,
        quiverrep.canonical_form,
        quiverrep.indecomposables,
        forms.enumerate_forms,
        forms.canonical_isometry_class,
        forms.form_summands,
    ):
        f.cache_clear()


def _run_on_all(check, **kwargs):
    reports = []
    for name, cap in CAPS.items():
        reports.append(run_check(check, load_quiver(name), cap, Context(load_quiver(name)), **kwargs))
    return reports


def _summary(reports):
    return ", ".join(f"{r.quiver}: {r.instances} instances, {r.failure_count} failures" for r in reports)


def test_criterion_1_binomial_hall_numbers(report):
    _clear_caches()
    start = time.perf_counter()
    q = load_quiver("point")
    alg = HallAlgebra(q)
    bad = []
    for n in range(7):
        for a in range(n + 1):
            u, v, w = (Rep(q, (k,), ()) for k in (a, n - a, n))
            if alg.hall_number(u, v, w) != math.comb(n, a):
                bad.append((n, a))
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 1.0, f"F^[n]_[a],[n-a] = C(n,a) for 0<=a<=n<=6 in {elapsed:.3f}s, mismatches {bad}")


def test_criterion_2_yetter_drinfeld(report):
    start = time.perf_counter()
    reports = _run_on_all("yetter_drinfeld")
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports) and elapsed < 300
    report(2, ok, f"YD compatibility exact: {_summary(reports)}; {elapsed:.2f}s total")


def test_criterion_3_bialgebra(report):
    reports = _run_on_all("bialgebra")
    report(3, all(r.passed for r in reports), f"bialgebra identities: {_summary(reports)}")


def test_criterion_4_worked_instance(report):
    q = load_quiver("point")
    alg = HallAlgebra(q)
    mod = HallModule(alg)
    pt, zero = Rep(q, (1,), ()), q.zero()
    triv = canonical_isometry_class(SymmetricForm(zero, [()]))
    h_pt = canonical_isometry_class(hyperbolic(pt))
    B = LinComb.basis
    action = mod.act(B(pt), B(triv))
    coaction = mod.coact(B(h_pt))
    lhs = mod.coact(action)
    rhs = mod.star_p(alg.coproduct2(B(pt)), mod.coact(B(triv)))
    expected = 2 * B((pt, triv)) + 2 * B((zero, h_pt))
    ok = (
        action == 2 * B(h_pt)
        and coaction == B((zero, h_pt)) + B((pt, triv))
        and lhs == rhs == expected
    )

    def show(x):
        return element_to_text(x).replace("\n", " + ")

    report(4, ok, f"[pt]*[triv] = {show(action)}; rho([H(pt)]) = {show(coaction)}; YD sides {show(lhs)} | {show(rhs)}")


def test_criterion_5_duality_identities(report):
    duality = _run_on_all("duality")
    comodule = _run_on_all("module_comodule")
    wanted = {"Hall numbers reverse under duality", "coaction invariant under duality"}
    bad = [f for r in duality + comodule for f in r.failures if f["identity"] in wanted]
    ok = not bad and all(r.passed for r in duality + comodule)
    report(5, ok, f"Hall-number duality and (P x id)rho = rho: {_summary(duality)}; {_summary(comodule)}")


def test_criterion_6_milnor_moore(report):
    reports = _run_on_all("milnor_moore")
    grades = "; ".join(
        f"{r.quiver} " + " ".join(f"{tuple(g['grade'])}:{g['rank']}/{g['classes']}" for g in r.notes["grades"])
        for r in reports
    )
    report(6, all(r.passed for r in reports), f"rank of primitive monomials = classes per grade: {grades}")


def test_criterion_7_coinvariant_action(report):
    r = run_check("coinvariant_action", load_quiver("a2"), Cap((2, 2)))
    logged = "zero_result_instances" in r.notes
    report(
        7,
        r.passed and logged,
        f"both directions on A2-swap cap (2,2): {r.instances} instances, "
        f"{r.failure_count} failures, {r.notes['zero_results']} zero results logged",
    )


def test_criterion_8_reduction_lemmas(report):
    reports = _run_on_all("reduction_lemmas", x_total=3)
    report(8, all(r.passed for r in reports), f"reduction lemmas, total dim X <= 3: {_summary(reports)}")


def test_criterion_9_non_hopf_witness(report):
    r = run_check("non_hopf", load_quiver("point"), Cap((3,)))
    w = r.notes.get("witness")
    text = f"u=[{w['u']}], xi=[{w['xi']}], rho(u*xi)={w['coaction_of_action']}, Hopf side={w['hopf_module_side']}" if w else "none"
    report(9, r.passed and w is not None, f"non-Hopf witness on Vect within total dim 3: {text}")


def test_criterion_10_byte_identical_reports(report):
    outputs = []
    codes = []
    for _ in range(2):
        run_outputs = []
        for name, cap in CAPS.items():
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                codes.append(
                    main(["verify", "all", "--quiver", name, "--cap", ",".join(map(str, cap.bound)), "--format", "json"])
                )
            run_outputs.append(buf.getvalue())
        outputs.append(run_outputs)
    ok = outputs[0] == outputs[1] and all(c == 0 for c in codes)
    report(10, ok, f"two runs of verify all byte-identical ({sum(map(len, outputs[0]))} bytes per run)")
