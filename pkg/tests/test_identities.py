import json
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import pell
from pell_lab import identities as ids
from pell_lab.identities import IdentityReport
from pell_lab.sequences import DomainError

ROSTER = (
    "I-01 I-02 I-03 C1-1 C1-2 C1-3 C1-4 I4 I3 L4 L6 SIMP L7 L13 DET2 "
    "ID7 ID8 ID9 ID10 ID11 ID12 ID13 L11 L12 C13 C16 QHATQ L13A "
    "ID3 ID4 ID5 ID6 L22 C23-15 C23-16 C23-17 BINB "
    "L24 L25 C26 C28 I20 I21 I22 I23 I24 I25 I26 L29-9 L29-10 I27 I28 BINA BINR"
).split()


def test_roster_complete_and_ordered():
    assert ids.catalog() == ROSTER
    assert len(set(ids.catalog())) == len(ids.catalog())


def test_examples():
    c = ids.check("I-03", 2)
    assert (c.lhs, c.rhs, c.passed) == (29, 29, True)
    c = ids.check("ID11", 1, 1)
    assert (c.lhs, c.rhs, c.passed) == (3, 3, True)
    c = ids.check("C28", 1)
    assert (c.lhs, c.rhs, c.passed) == (-1, -1, True)
    assert c.n == 1 and c.m is None


def test_range_examples():
    rep = ids.check_range("L4", 500)
    assert rep.checked == 500 and rep.ok
    rep = ids.check_range("I20", 60, 60)
    assert rep.checked == 3600 and rep.ok
    rep = ids.check_range("SIMP", 2)
    assert rep.checked == 1 and rep.ok


def test_domain_errors():
    with pytest.raises(DomainError, match="n >= 2"):
        ids.check("SIMP", 1)
    with pytest.raises(DomainError):
        ids.check("I-02", 5, 3)
    with pytest.raises(DomainError):
        ids.check("ID11", 1)
    with pytest.raises(DomainError):
        ids.get("NOPE")


@pytest.mark.parametrize("code", ROSTER)
def test_every_identity_full_range(code):
    rep = ids.check_range(code, 200, 100)
    assert rep.checked > 0
    assert rep.ok, rep.failures[:3]
    for case in rep.failures:
        assert case.passed == (case.lhs == case.rhs)


ALTERNATING = [c for c in ROSTER if ids.get(c).alternating]


def test_required_alternating_members():
    assert {"SIMP", "L7", "C28", "C23-17", "I27", "I28", "DET2"} <= set(ALTERNATING)


@pytest.mark.parametrize("code", ALTERNATING)
def test_sign_flip_breaks_identity(code):
    assert ids.sign_sensitive(code, 10)


def test_id9_agrees_with_c1_3():
    for n, m in product(range(1, 51), repeat=2):
        a, b = ids.check("ID9", n, m), ids.check("C1-3", n, m)
        assert (a.lhs, a.rhs, a.passed) == (b.lhs, b.rhs, b.passed)


def test_printed_c1_1_is_wrong_everywhere():
    assert ids.errata() == ["C1-1"]
    assert ids.check_printed("C1-1", 1, 2).passed is False
    assert all(not ids.check_printed("C1-1", n, m).passed
               for n, m in product(range(1, 60), range(2, 60)))
    assert ids.check_range("C1-1", 60).ok


def test_report_merge_is_concatenation():
    a = ids.check_range("L4", 50)
    merged = a.merge(IdentityReport("L4", a.ranges, 7, []))
    assert merged.checked == 57 and merged.ok
    with pytest.raises(ValueError):
        a.merge(IdentityReport("L6", {}, 0, []))


def test_export_catalog_round_trips():
    doc = ids.export_catalog()
    assert [d["code"] for d in doc] == ROSTER
    assert json.loads(json.dumps(doc)) == doc
    by_code = {d["code"]: d for d in doc}
    assert by_code["BINB"]["fractional_form"]
    assert by_code["C1-1"]["printed_form"]


@settings(max_examples=60)
@given(st.integers(min_value=0, max_value=150), st.integers(min_value=0, max_value=40),
       st.integers(min_value=0, max_value=40))
def test_i01_beyond_harness_cap(n, a, b):
    case = ids.get("I-01").sides(n, a, b)
    assert case[0] == case[1]
    assert case[1] == pell(a) * pell(b) * (-1) ** n
