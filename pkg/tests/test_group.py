import itertools
import json

import pytest

from bicx import reference
from bicx.group import (
    D8_ELEMENTS,
    RHO,
    CayleyTable,
    D8Element,
    UnidentifiableComposition,
    cayley_table,
    compose_tags,
    d8_multiply,
    d8_table,
    element_order,
    is_subgroup,
    rho,
    subgroups,
    verify_group_axioms,
    verify_isomorphism,
)
from bicx.involution import TAGS

D0, D1, D2, D3, D4, D5, P6, P7 = TAGS

# Published tables, row o column, transcribed independently of bicx.reference.
TABLE2 = """
dag0  dag1  dag2  dag3  dag4  dag5  pdag6 pdag7
dag1  dag0  dag3  dag2  pdag6 pdag7 dag4  dag5
dag2  dag3  dag0  dag1  pdag7 pdag6 dag5  dag4
dag3  dag2  dag1  dag0  dag5  dag4  pdag7 pdag6
dag4  pdag7 pdag6 dag5  dag0  dag3  dag2  dag1
dag5  pdag6 pdag7 dag4  dag3  dag0  dag1  dag2
pdag6 dag5  dag4  pdag7 dag1  dag2  dag3  dag0
pdag7 dag4  dag5  pdag6 dag2  dag1  dag0  dag3
"""

TABLE3 = """
Id   x    a^2x a^2  a^3x ax   a    a^3
x    Id   a^2  a^2x a    a^3  a^3x ax
a^2x a^2  Id   x    a^3  a    ax   a^3x
a^2  a^2x x    Id   ax   a^3x a^3  a
a^3x a^3  a    ax   Id   a^2  a^2x x
ax   a    a^3  a^3x a^2  Id   x    a^2x
a    ax   a^3x a^3  x    a^2x a^2  Id
a^3  a^3x ax   a    a^2x x    Id   a^2
"""


def _rows(text):
    return [line.split() for line in text.strip().splitlines()]


def test_reference_transcriptions_agree():
    assert [list(r) for r in reference.CONJ_TABLE] == _rows(TABLE2)
    assert [list(r) for r in reference.D8_TABLE] == _rows(TABLE3)


def test_cayley_table_matches_published():
    t = cayley_table()
    assert t.order == TAGS
    assert t.labels() == _rows(TABLE2)


def test_cayley_examples():
    t = cayley_table()
    assert t.product(D1, D4) is P6
    assert all(t.product(D0, c) is c for c in TAGS)
    assert t.product(P6, P7) is D0
    assert t.product(P6, P6) is D3


def test_first_four_subtable():
    sub = [[str(x) for x in row] for row in cayley_table().restrict(TAGS[:4])]
    assert sub == [list(r) for r in reference.FIRST_FOUR_TABLE]


def test_table_rows_are_permutations():
    t = cayley_table()
    for k in range(8):
        assert sorted(t.rows[k], key=TAGS.index) == list(TAGS)
        assert sorted((row[k] for row in t.rows), key=TAGS.index) == list(TAGS)


def test_unidentifiable(monkeypatch):
    import bicx.group as g

    monkeypatch.setattr(g, "identify", lambda fn: None)
    with pytest.raises(UnidentifiableComposition):
        compose_tags(D1, D2)


def test_group_axioms():
    report = verify_group_axioms(cayley_table())
    assert report.is_group
    assert report.identity is D0
    assert not report.commutative
    assert (D1, P6) in report.noncommuting_pairs
    t = cayley_table()
    assert t.product(D1, P6) is D4 and t.product(P6, D1) is D5


def test_six_conjugates_not_closed():
    report = verify_group_axioms(cayley_table(), TAGS[:6])
    assert not report.closed
    assert (D1, D4, P6) in report.closure_failures
    assert not report.is_group


def test_first_four_are_abelian_group():
    report = verify_group_axioms(cayley_table(), TAGS[:4])
    assert report.is_group and report.commutative


def test_broken_table_detected():
    rows = [list(r) for r in cayley_table().rows]
    rows[1][2], rows[1][3] = rows[1][3], rows[1][2]
    report = verify_group_axioms(CayleyTable(TAGS, tuple(map(tuple, rows))))
    assert not report.associative


def test_subgroups():
    found = subgroups(cayley_table())
    assert len(found) == 10
    order4 = [g for g in found if len(g) == 4]
    assert set(order4) == {
        frozenset({D0, D1, D2, D3}),
        frozenset({D0, D3, D4, D5}),
        frozenset({D0, D3, P6, P7}),
    }
    order2 = {g for g in found if len(g) == 2}
    assert order2 == {frozenset({D0, t}) for t in (D1, D2, D3, D4, D5)}
    assert frozenset({D0}) in found
    assert frozenset(TAGS) in found


def test_not_subgroups():
    t = cayley_table()
    assert not is_subgroup(t, {D0, P6})
    assert is_subgroup(t, {D0})
    assert not is_subgroup(t, set())
    assert not is_subgroup(t, {D1})


def test_element_orders():
    t = cayley_table()
    assert [element_order(t, g) for g in TAGS] == [1, 2, 2, 2, 2, 2, 4, 4]


def test_d8_multiplication():
    a, x = D8Element(1), D8Element(0, True)
    ident = D8Element()
    assert x * a == D8Element(3, True)
    assert a * D8Element(3) == ident
    assert a * a * a * a == ident
    assert x * x == ident
    for g in D8_ELEMENTS:
        assert ident * g == g == g * ident
    assert str(x * a) == "a^3x"


def test_d8_associative():
    for g, h, k in itertools.product(D8_ELEMENTS, repeat=3):
        assert d8_multiply(d8_multiply(g, h), k) == d8_multiply(g, d8_multiply(h, k))


def test_d8_table_matches_published():
    t = d8_table()
    assert [str(g) for g in t.order] == ["Id", "x", "a^2x", "a^2", "a^3x", "ax", "a", "a^3"]
    assert t.labels() == _rows(TABLE3)


def test_d8_labels_parse():
    for g in D8_ELEMENTS:
        assert D8Element.parse(str(g)) == g
    with pytest.raises(ValueError):
        D8Element.parse("b")


def test_rho():
    assert rho(P6) == D8Element(1)
    assert rho(D0) == D8Element()
    assert {str(k): str(v) for k, v in RHO.items()} == reference.RHO
    t = cayley_table()
    assert rho(D1) * rho(D4) == D8Element(1) == rho(t.product(D1, D4))


def test_isomorphism():
    report = verify_isomorphism()
    assert report.ok
    assert report.order4_counts == (2, 2)
    assert len(report.image_subgroups) == 10


def test_bad_mapping_rejected():
    swapped = dict(RHO)
    swapped[D1], swapped[D2] = RHO[D4], RHO[D1]
    swapped[D4] = RHO[D2]
    report = verify_isomorphism(mapping=swapped)
    assert not report.ok


def test_exports():
    t = cayley_table()
    data = json.loads(t.to_json())
    assert data == {"order": [str(x) for x in TAGS], "table": _rows(TABLE2)}
    lines = t.to_csv().splitlines()
    assert lines[0] == "∘,dag0,dag1,dag2,dag3,dag4,dag5,pdag6,pdag7"
    assert lines[2] == "dag1,dag1,dag0,dag3,dag2,pdag6,pdag7,dag4,dag5"
    md = d8_table().to_markdown().splitlines()
    assert md[0] == "| ∘ | Id | x | a^2x | a^2 | a^3x | ax | a | a^3 |"
    assert md[3] == "| x | x | Id | a^2 | a^2x | a | a^3 | a^3x | ax |"
    assert len(md) == 10
