import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f1hall.formats import (
    BUILTIN_QUIVERS,
    FormatError,
    decode_form,
    decode_rep,
    form_to_literal,
    load_quiver,
    parse_form,
    parse_quiver,
    parse_rep,
    quiver_to_json,
    rep_to_literal,
)
from f1hall.forms import enumerate_forms
from f1hall.quiverrep import dims_below, enumerate_reps
from conftest import QUIVER_DIR


@pytest.mark.parametrize("name", sorted(BUILTIN_QUIVERS))
def test_builtin_matches_shipped_file(name):
    assert load_quiver(name) == load_quiver(str(QUIVER_DIR / f"{name}.json"))
    assert quiver_to_json(load_quiver(name)) == BUILTIN_QUIVERS[name]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(BUILTIN_QUIVERS)), st.data())
def test_rep_and_form_round_trips(name, data):
    q = load_quiver(name)
    bound = (2, 2) if len(q.vertices) == 2 else (3,)
    reps = [r for d in dims_below(bound) for r in enumerate_reps(q, d)]
    r = data.draw(st.sampled_from(reps))
    assert parse_rep(q, rep_to_literal(r)) == r
    assert decode_rep(q, r.encode()) == r
    forms = [m for d in dims_below(bound) for m in enumerate_forms(q, d)]
    m = data.draw(st.sampled_from(forms))
    assert parse_form(q, form_to_literal(m)) == m
    assert decode_form(q, m.encode()) == m


def test_arrow_named_b_is_not_mistaken_for_a_form():
    q = parse_quiver(
        {
            "vertices": ["1"],
            "arrows": [{"name": "b", "src": "1", "tgt": "1"}],
            "involution": {"vertices": {"1": "1"}, "arrows": {"b": "b"}},
        }
    )
    r = decode_rep(q, "2;b=0>1")
    assert r.maps[0].pairs == ((0, 1),)
    m = decode_form(q, "2;b=0>1;b=1,0")
    assert m.b == ((1, 0),)


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"vertices": ["1", "1"]},
        {"vertices": ["1"], "arrows": [{"name": "a", "src": "1"}]},
        {"vertices": ["1"], "arrows": [], "involution": {"vertices": {"1": "2"}, "arrows": {}}},
    ],
)
def test_bad_quiver_documents(doc):
    with pytest.raises(FormatError):
        parse_quiver(doc)


def test_bad_literals(a2):
    with pytest.raises(FormatError):
        parse_rep(a2, {"dims": {"3": 1}})
    with pytest.raises(FormatError):
        parse_rep(a2, {"dims": {"1": 1}, "maps": {"a": [[0, 0]]}})
    with pytest.raises(FormatError):
        parse_form(a2, {"dims": {"1": 1}})
    with pytest.raises(FormatError):
        decode_rep(a2, "1,1;z=")
    with pytest.raises(FormatError):
        decode_form(a2, "1,1;a=")
