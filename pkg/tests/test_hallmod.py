from collections import Counter

import pytest

from f1hall.formats import parse_form, parse_rep
from f1hall.forms import SymmetricForm, canonical_isometry_class, hyperbolic
from f1hall.hallmod import coefficient_table
from f1hall.lincomb import LinComb
from f1hall.quiverrep import Rep, canonical_form
from oracles import coaction_pairs, form_key, isotropic_reductions, rep_key

BOUNDS = {"point": (4,), "a2": (2, 2), "loop": (3,)}


def B(k):
    return LinComb.basis(k)


@pytest.fixture(scope="module")
def vect(point):
    pt = Rep(point, (1,), ())
    return {
        "pt": pt,
        "H(pt)": canonical_isometry_class(hyperbolic(pt)),
        "id2": canonical_isometry_class(SymmetricForm(Rep(point, (2,), ()), [(0, 1)])),
        "fixed1": canonical_isometry_class(SymmetricForm(pt, [(0,)])),
        "triv": canonical_isometry_class(SymmetricForm(point.zero(), [()])),
        "zero": point.zero(),
    }


@pytest.fixture(scope="module")
def a2c(a2):
    s1 = canonical_form(parse_rep(a2, {"dims": {"1": 1}}))
    s2 = canonical_form(parse_rep(a2, {"dims": {"2": 1}}))
    i_form = parse_form(a2, {"dims": {"1": 1, "2": 1}, "maps": {"a": [[0, 0]]}, "form": {"1": [0], "2": [0]}})
    return {
        "S1": s1,
        "S2": s2,
        "H(S1)": canonical_isometry_class(hyperbolic(s1)),
        "I_form": canonical_isometry_class(i_form),
        "triv": canonical_isometry_class(SymmetricForm(a2.zero(), [(), ()])),
        "zero": a2.zero(),
    }


def test_worked_instance(modules, vect):
    mod = modules["point"]
    assert mod.act(B(vect["pt"]), B(vect["triv"])) == 2 * B(vect["H(pt)"])


def test_g_numbers(modules, vect):
    mod = modules["point"]
    assert mod.g_number(vect["pt"], vect["triv"], vect["H(pt)"]) == 2
    assert mod.g_number(vect["pt"], vect["triv"], vect["id2"]) == 0
    for n in mod.forms_below((4,)):
        assert mod.g_number(vect["zero"], n, n) == 1


def test_unit_acts_trivially(modules):
    for mod in modules.values():
        for n in mod.forms_below(tuple(2 for _ in mod.quiver.vertices)):
            assert mod.act(mod.algebra.unit(), B(n)) == B(n)


def test_a2_action_on_trivial_form(modules, a2c):
    """S1 sits inside I only as a quotient, so [S1]⋆[0] is hyperbolic; S2 is also a Lagrangian of I."""
    mod, c = modules["a2"], a2c
    assert mod.act(B(c["S1"]), B(c["triv"])) == B(c["H(S1)"])
    assert mod.act(B(c["S2"]), B(c["triv"])) == B(c["H(S1)"]) + B(c["I_form"])


def test_coaction_examples(modules, vect, a2c):
    mod = modules["point"]
    zero, triv = vect["zero"], vect["triv"]
    assert mod.coact(B(triv)) == B((zero, triv))
    assert mod.coact(B(vect["H(pt)"])) == B((zero, vect["H(pt)"])) + B((vect["pt"], triv))
    assert mod.coact(B(vect["id2"])) == B((vect["zero"], vect["id2"]))
    c = a2c
    assert modules["a2"].coact(B(c["H(S1)"])) == (
        B((c["zero"], c["H(S1)"])) + B((c["S1"], c["triv"])) + B((c["S2"], c["triv"]))
    )


def test_star_p_examples(modules, algebras, vect):
    mod, alg = modules["point"], algebras["point"]
    zero, pt, triv = vect["zero"], vect["pt"], vect["triv"]
    m = B((zero, vect["id2"]))
    assert mod.star_p(B((zero, zero, zero)), m) == m
    assert mod.star_p(B((zero, zero, pt)), B((zero, triv))) == 2 * B((zero, vect["H(pt)"]))
    both = 2 * B((pt, triv)) + 2 * B((zero, vect["H(pt)"]))
    assert mod.star_p(alg.coproduct2(B(pt)), mod.coact(B(triv))) == both
    assert mod.coact(mod.act(B(pt), B(triv))) == both


def test_module_axiom_example(modules, algebras, vect):
    mod, alg = modules["point"], algebras["point"]
    pt, triv = B(vect["pt"]), B(vect["triv"])
    assert mod.act(alg.product(pt, pt), triv) == mod.act(pt, mod.act(pt, triv))


@pytest.mark.parametrize("name", ["point", "a2", "loop"])
def test_g_numbers_match_definition(modules, name):
    mod = modules[name]
    for n in mod.forms_below(BOUNDS[name]):
        got = Counter({(rep_key(u), form_key(m)): k for (u, m), k in mod.iso_table(n).items()})
        assert got == isotropic_reductions(n)


@pytest.mark.parametrize("name", ["point", "a2", "loop"])
def test_coaction_matches_definition(modules, name):
    mod = modules[name]
    alg = mod.algebra
    us = alg.classes_below(BOUNDS[name])
    ms = mod.forms_below(BOUNDS[name])
    for n in ms:
        got = {(rep_key(u), form_key(m)) for u, m in mod.coact(B(n))}
        assert got == coaction_pairs(n, us, ms)
        assert set(mod.coact(B(n)).values()) == {1}


def test_coinvariant_basis(modules, vect, a2c):
    assert set(modules["point"].coinvariant_basis((2,))) == {vect["triv"], vect["fixed1"], vect["id2"]}
    assert set(modules["a2"].coinvariant_basis((1, 1))) == {a2c["triv"], a2c["I_form"]}
    mod = modules["point"]
    assert mod.is_coinvariant(B(vect["triv"]))
    assert not mod.is_coinvariant(B(vect["H(pt)"]))
    assert mod.is_coinvariant(B(vect["id2"]))


def test_primitive_action_on_coinvariants(modules, a2c):
    """Anti-invariant primitives keep the trivial form coinvariant; invariant ones do not."""
    mod, c = modules["a2"], a2c
    minus = B(c["S1"]) - B(c["S2"])
    plus = B(c["S1"]) + B(c["S2"])
    triv = B(c["triv"])
    assert mod.act(minus, triv) == -B(c["I_form"])
    assert mod.is_coinvariant(mod.act(minus, triv))
    assert mod.act(plus, triv) == 2 * B(c["H(S1)"]) + B(c["I_form"])
    assert not mod.is_coinvariant(mod.act(plus, triv))


def test_non_hopf_witness_in_vect(modules, algebras, vect):
    mod, alg = modules["point"], algebras["point"]
    pt, triv = B(vect["pt"]), B(vect["triv"])
    lhs = mod.coact(mod.act(pt, triv))
    rhs = mod.hopf_action(alg.coproduct(pt), mod.coact(triv))
    assert lhs != rhs
    assert rhs == B((vect["pt"], vect["triv"])) + 2 * B((vect["zero"], vect["H(pt)"]))


def test_coefficient_table_is_sorted(modules, vect):
    table = coefficient_table(modules["point"].coact(B(vect["H(pt)"])))
    assert [row[0] for row in table] == ["0 ⊗ 2;b=1,0", "1 ⊗ 0;b="]


def test_action_is_graded(modules):
    for name, mod in modules.items():
        q = mod.quiver
        for u in mod.algebra.classes_below(tuple(1 for _ in q.vertices)):
            for m in mod.forms_below(tuple(2 for _ in q.vertices)):
                for n in mod.act(B(u), B(m)):
                    assert n.dims == tuple(a + b for a, b in zip(q.hyperbolic_dims(u.dims), m.dims))
