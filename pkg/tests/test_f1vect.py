import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from f1hall.f1vect import (
    Kind,
    PartialInjection,
    classify,
    compose,
    converse,
    direct_sum,
    involutions,
    invert_permutation,
    partial_injections,
)


@st.composite
def pinj(draw, m=None, n=None):
    m = draw(st.integers(0, 5)) if m is None else m
    n = draw(st.integers(0, 5)) if n is None else n
    k = draw(st.integers(0, min(m, n)))
    src = draw(st.permutations(range(m)))[:k]
    tgt = draw(st.permutations(range(n)))[:k]
    return PartialInjection(m, n, tuple(zip(src, tgt)))


@st.composite
def chain(draw):
    sizes = [draw(st.integers(0, 4)) for _ in range(4)]
    return [draw(pinj(sizes[i], sizes[i + 1])) for i in range(3)]


def test_rejects_non_injective_and_out_of_range():
    with pytest.raises(ValueError):
        PartialInjection(2, 2, ((0, 0), (1, 0)))
    with pytest.raises(ValueError):
        PartialInjection(2, 2, ((0, 0), (0, 1)))
    with pytest.raises(ValueError):
        PartialInjection(1, 1, ((0, 1),))


def test_classification_examples():
    assert classify(PartialInjection(2, 1, ((0, 0),))) is Kind.DEFLATION
    assert classify(PartialInjection(1, 2, ((0, 0),))) is Kind.INFLATION
    assert classify(PartialInjection.identity(3)) is Kind.ISOMORPHISM
    assert classify(PartialInjection(2, 2, ((0, 1),))) is Kind.NEITHER
    # the zero object is both an inflation and a deflation target
    assert classify(PartialInjection.zero(0, 3)) is Kind.INFLATION
    assert classify(PartialInjection.zero(3, 0)) is Kind.DEFLATION


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(PartialInjection.identity(2), PartialInjection.identity(3))


def test_compose_order():
    f = PartialInjection(2, 2, ((0, 1),))
    g = PartialInjection(2, 2, ((1, 0),))
    assert compose(f, g).pairs == ((0, 0),)
    assert compose(g, f).pairs == ((1, 1),)


@given(chain())
def test_composition_is_associative(fs):
    f, g, h = fs
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(pinj())
def test_identities(f):
    assert compose(PartialInjection.identity(f.dom_size), f) == f
    assert compose(f, PartialInjection.identity(f.cod_size)) == f


@given(chain())
def test_converse_reverses_composition(fs):
    f, g, _ = fs
    assert converse(compose(f, g)) == compose(converse(g), converse(f))


@given(pinj())
def test_converse_is_involutive_and_swaps_kinds(f):
    assert converse(converse(f)) == f
    swap = {Kind.INFLATION: Kind.DEFLATION, Kind.DEFLATION: Kind.INFLATION}
    k = classify(f)
    assert classify(converse(f)) is swap.get(k, k)


@given(pinj(), pinj())
def test_direct_sum_sizes_and_rank(f, g):
    s = direct_sum(f, g)
    assert (s.dom_size, s.cod_size) == (f.dom_size + g.dom_size, f.cod_size + g.cod_size)
    assert s.rank == f.rank + g.rank


@pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(5)])
def test_partial_injection_count(m, n):
    expected = sum(math.comb(m, k) * math.comb(n, k) * math.factorial(k) for k in range(min(m, n) + 1))
    got = list(partial_injections(m, n))
    assert len(got) == expected == len(set(got))


def test_involution_counts_are_telephone_numbers():
    assert [len(list(involutions(n))) for n in range(7)] == [1, 1, 2, 4, 10, 26, 76]
    for p in involutions(5):
        assert all(p[p[i]] == i for i in range(5))


@given(st.permutations(range(6)))
def test_invert_permutation(p):
    q = invert_permutation(tuple(p))
    assert all(q[p[i]] == i for i in range(6))
