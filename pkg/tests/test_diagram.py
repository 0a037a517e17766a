import json

import pytest
from hypothesis import given, settings, strategies as st

from warpdeg.diagram import (
    BaseSequence,
    DiagramError,
    LinkDiagram,
    canonicalize,
    from_json,
    parse,
    reverse_all,
    reverse_component,
    serialize,
    subdiagram,
    to_json,
)
from warpdeg.generators import chain, random_diagram
from warpdeg.verify import linking_number

from conftest import HOPF, TREFOIL


def test_parse_trefoil(trefoil):
    assert trefoil.r == 1
    assert trefoil.c == 3
    assert trefoil.lc == 0
    assert all(trefoil.is_self(cid) for cid in trefoil.crossings)


def test_parse_hopf(hopf):
    assert hopf.r == 2
    assert hopf.c == hopf.lc == 2


@pytest.mark.parametrize("text, msg", [
    ("O1+ U1-", "sign mismatch"),
    ("O1+ O1+", "two Over"),
    ("U1+ U1+", "two Under"),
    ("O1+ U2+ O2+", "crossing 1 occurs 1"),
    ("O1+ U1+ O1+", "occurs 3"),
    ("", "empty diagram"),
    ("# only a comment\n\n", "empty diagram"),
    ("O1+ X2+", "malformed token"),
    ("O1 U1", "malformed token"),
])
def test_parse_errors(text, msg):
    with pytest.raises(DiagramError, match=msg):
        parse(text)


def test_comments_blank_lines_and_empty_component():
    D = parse("# hopf plus a circle\n\nO1+ U2+\n\nU1+ O2+\n-\n")
    assert D.r == 3
    assert D.components[2] == ()
    assert serialize(D) == "O1+ U2+\nU1+ O2+\n-\n"


def test_serialize_round_trip():
    assert serialize(parse(TREFOIL)) == TREFOIL
    assert serialize(parse(HOPF)) == HOPF
    assert serialize(parse("  O1+\tU2+   O3+ U1+ O2+ U3+ ")) == TREFOIL


def test_canonical_renumbering():
    D = parse("O7+ U3- O9+ U7+ O3- U9+")
    assert serialize(D) == "O1+ U2- O3+ U1+ O2- U3+\n"
    assert serialize(D, canonical=False) == "O7+ U3- O9+ U7+ O3- U9+\n"
    once = serialize(D)
    assert serialize(parse(once)) == once


def test_json_mirror(hopf):
    data = to_json(hopf)
    assert data["components"][0][0] == {"o": True, "id": 1, "sign": 1}
    assert from_json(json.dumps(data)) == hopf
    with pytest.raises(DiagramError):
        from_json({"components": [[{"o": True}]]})


def test_reverse_all(trefoil, hopf):
    R = reverse_all(trefoil)
    assert serialize(R, canonical=False) == "U3+ O2+ U1+ O3+ U2+ O1+\n"
    assert reverse_all(R) == trefoil
    assert linking_number(reverse_all(hopf), 0, 1) == 1


def test_reverse_component(hopf, trefoil):
    H = reverse_component(hopf, 1)
    assert linking_number(H, 0, 1) == -1
    assert reverse_component(H, 1) == hopf
    assert reverse_component(trefoil, 0) == reverse_all(trefoil)
    with pytest.raises(DiagramError):
        reverse_component(hopf, 2)


def test_reverse_component_keeps_self_signs():
    D = parse("O1+ U2- O3+ U1+ O2- U4+\nU3+ O4+")
    E = reverse_component(D, 0)
    assert E.signs[1] == 1 and E.signs[2] == -1
    assert E.signs[3] == -1 and E.signs[4] == -1


def test_subdiagram(hopf):
    assert subdiagram(hopf, [0, 1]) == hopf
    assert subdiagram(hopf, [0]).components == ((),)
    with pytest.raises(DiagramError):
        subdiagram(hopf, [])


def test_subdiagram_three_components():
    D = chain(3)
    S = subdiagram(D, {0, 2})
    expected = [cid for cid, (o, u) in D.sites.items() if {o.component, u.component} <= {0, 2}]
    assert S.c == len(expected) == 0
    S12 = subdiagram(D, {0, 1})
    assert S12.c == 2 and S12.lc == 2


def test_base_sequence_check(hopf):
    BaseSequence((0, 1), (0, 1)).check(hopf)
    with pytest.raises(DiagramError):
        BaseSequence((0, 0), (0, 0)).check(hopf)
    with pytest.raises(DiagramError):
        BaseSequence((0, 1), (0, 2)).check(hopf)
    with pytest.raises(DiagramError):
        BaseSequence((0, 1), (0,)).check(hopf)


def test_warnings_for_abstract_codes():
    D = parse("O1+\nU1+")
    assert any("odd" in w for w in D.warnings())
    assert not D.linking_consistent
    assert parse(HOPF).warnings() == []


diagrams = st.builds(random_diagram, st.integers(0, 10**6), st.integers(0, 8), st.integers(1, 4))


@settings(max_examples=150, deadline=None)
@given(diagrams)
def test_invariants_on_random_codes(D):
    assert parse(serialize(D)) == canonicalize(D)
    assert sum(subdiagram(D, {i}).c for i in range(D.r)) + D.lc == D.c
    for i in range(D.r):
        assert subdiagram(D, {i}).c == len(D.self_crossings(i))
    R = reverse_all(D)
    assert (R.c, R.lc) == (D.c, D.lc)
    for i in range(D.r):
        E = reverse_component(D, i)
        assert (E.c, E.lc) == (D.c, D.lc)
        assert {cid: D.sites[cid][0].component for cid in D.sites} == \
               {cid: E.sites[cid][0].component for cid in E.sites}


def test_link_diagram_is_immutable(hopf):
    with pytest.raises(Exception):
        hopf.components = ()
    assert isinstance(hash(hopf), int)
    assert LinkDiagram(hopf.components) == hopf
