import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from malcev import catalog as cat
from malcev.algebra import validate
from malcev.errors import (
    DuplicatePair,
    MalformedRational,
    ParseError,
    SelfBracket,
    UnknownBasisLabel,
)

SL2_TEXT = ('{"name":"sl2","dim":3,"basis":["h","e","f"],"brackets":['
            '{"left":"h","right":"e","value":{"e":"2"}},'
            '{"left":"h","right":"f","value":{"f":"-2"}},'
            '{"left":"e","right":"f","value":{"h":"1"}}]}')


def doc(**overrides):
    d = {"name": "t", "dim": 2, "basis": ["a", "b"], "brackets": []}
    d.update(overrides)
    return json.dumps(d)


def test_parse_abelian():
    a = cat.parse(doc())
    assert a.dim == 2 and not any(x for row in a.constants for v in row for x in v)


def test_parse_sl2_document():
    a = cat.parse(SL2_TEXT)
    assert a == cat.sl2()
    assert validate(a).is_lie


def test_serialize_sl2_matches_documented_form():
    assert cat.serialize(cat.sl2()) == SL2_TEXT


def test_parse_fills_antisymmetry():
    a = cat.parse(doc(brackets=[{"left": "b", "right": "a", "value": {"a": "3/4"}}]))
    assert a.constants[1][0] == (F(3, 4), 0)
    assert a.constants[0][1] == (F(-3, 4), 0)


@pytest.mark.parametrize("brackets, error", [
    ([{"left": "a", "right": "b", "value": {"a": "1"}},
      {"left": "b", "right": "a", "value": {"a": "1"}}], DuplicatePair),
    ([{"left": "a", "right": "b", "value": {"a": "1"}},
      {"left": "a", "right": "b", "value": {"b": "1"}}], DuplicatePair),
    ([{"left": "a", "right": "c", "value": {"a": "1"}}], UnknownBasisLabel),
    ([{"left": "a", "right": "b", "value": {"z": "1"}}], UnknownBasisLabel),
    ([{"left": "a", "right": "a", "value": {"a": "1"}}], SelfBracket),
    ([{"left": "a", "right": "b", "value": {"a": "1/0"}}], MalformedRational),
    ([{"left": "a", "right": "b", "value": {"a": "0.5"}}], MalformedRational),
    ([{"left": "a", "right": "b", "value": {"a": 1}}], MalformedRational),
    ([{"left": "a", "right": "b"}], ParseError),
])
def test_parse_errors(brackets, error):
    with pytest.raises(error):
        cat.parse(doc(brackets=brackets))


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    doc(dim=3),
    doc(basis=["a", "a"]),
    json.dumps({"name": "t", "dim": 1, "basis": ["a"]}),
])
def test_malformed_documents(text):
    with pytest.raises(ParseError):
        cat.parse(text)


def test_serialize_lowest_terms():
    a = cat.parse(doc(brackets=[{"left": "a", "right": "b", "value": {"b": "4/6"}}]))
    assert '"b":"2/3"' in cat.serialize(a)


def test_serialize_zero_algebra():
    d = json.loads(cat.serialize(cat.get("abelian2")))
    assert d["brackets"] == []


@pytest.mark.parametrize("name", cat.names())
def test_round_trip_catalog(name):
    a = cat.get(name)
    b = cat.parse(cat.serialize(a))
    assert b == a and b.constants == a.constants


def test_catalog_contents():
    names = cat.names()
    for required in ("abelian1", "abelian2", "abelian3", "sl2", "cross3", "heisenberg3",
                     "M7", "solv4", "sl2_plus_M7"):
        assert required in names
    assert cat.get("sl2").dim == 3
    assert cat.get("sl2_plus_M7").dim == 10
    with pytest.raises(KeyError):
        cat.get("nope")


@pytest.mark.parametrize("a", cat.catalog(), ids=cat.names())
def test_catalog_validator_gate(a):
    r = validate(a)
    assert r.is_malcev
    if a.name in cat.NON_LIE:
        assert not r.is_lie and r.witnesses_for("jacobi")
    else:
        assert r.is_lie


def test_m7_structure():
    m = cat.m7()
    assert m.dim == 7
    # each Fano line gives [e_i, e_j] = 2 e_k with cyclic symmetry
    for i, j, k in cat.FANO_TRIPLES:
        assert m.constants[i - 1][j - 1][k - 1] == 2
        assert m.constants[j - 1][k - 1][i - 1] == 2


@st.composite
def documents(draw):
    n = draw(st.integers(0, 4))
    basis = [f"b{k}" for k in range(n)]
    entries = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                value = {}
                for k in range(n):
                    if draw(st.booleans()):
                        p = draw(st.integers(-9, 9))
                        q = draw(st.integers(1, 9))
                        value[basis[k]] = f"{p}/{q}"
                left, right = (basis[i], basis[j]) if draw(st.booleans()) else (basis[j], basis[i])
                entries.append({"left": left, "right": right, "value": value})
    return json.dumps({"name": "rand", "dim": n, "basis": basis, "brackets": entries})


@settings(max_examples=200, deadline=None)
@given(documents())
def test_round_trip_random_documents(text):
    a = cat.parse(text)
    assert validate(a).anticommutative
    assert cat.parse(cat.serialize(a)) == a
    # serialization is a fixed point after one pass
    assert cat.serialize(cat.parse(cat.serialize(a))) == cat.serialize(a)


def test_save_and_load(tmp_path):
    path = tmp_path / "m7.json"
    cat.save(cat.m7(), path)
    assert cat.load(path) == cat.m7()
