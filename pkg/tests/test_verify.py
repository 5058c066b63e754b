import json
from pathlib import Path

import pytest

from fqcarlitz import DomainError, Poly, SearchBounds, cyclotomic_eval, exceptional_set, field_from_q, parse_poly
from fqcarlitz.polyring import factorize
from fqcarlitz.verify import (
    LISTED_SETS,
    expected_exceptions,
    listed_exceptional_set,
    reproduce_table,
    table_to_json,
    verify_bang_zsigmondy,
    verify_feit,
)

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def as_pairs(doc):
    F = field_from_q(doc["q"])
    return {(parse_poly(x["u"], F), parse_poly(x["m"], F)) for x in doc["members"]}


@pytest.mark.parametrize("which,fname", [(2, "table2_q3.json"), (3, "table3_q4.json")])
def test_table_matches_fixture(which, fname):
    doc = load(fname)
    F = field_from_q(doc["q"])
    P = lambda t: parse_poly(t, F)  # noqa: E731
    rows = reproduce_table(which)
    assert len(rows) == len(doc["rows"])
    for row, ref in zip(rows, doc["rows"]):
        assert row.prime == P(ref["prime"])
        assert row.m == P(ref["m"])
        assert {(p, e) for p, e in row.factorization} == {(P(p), e) for p, e in ref["factorization"]}
        # the witnesses are C_n(1) for the listed n
        assert {(n, v) for n, v in row.witnesses} == {(P(n), P(v)) for n, v in ref["witnesses"]}
        assert row.zsigmondy == []


def test_table_json_is_stable():
    assert table_to_json(3, reproduce_table(3)) == table_to_json(3, reproduce_table(3))


@pytest.mark.parametrize("fname", sorted(p.name for p in FIXTURES.glob("x*_q*.json")))
def test_exceptional_set_matches_fixture(fname):
    doc = load(fname)
    got = set(exceptional_set(doc["set"], doc["q"]))
    assert got == as_pairs(doc)
    if doc["set"] in LISTED_SETS:
        assert set(listed_exceptional_set(doc["set"])) == got


def test_x3_extended_scan_finds_nothing_new():
    base = exceptional_set("X3", 3)
    assert exceptional_set("X3", 3, max_s=10) == base


def test_exceptional_set_stable_across_seeds(monkeypatch):
    ref = exceptional_set("X9", 4)
    monkeypatch.setenv("CARLITZ_SEED", "99")
    assert exceptional_set("X9", 4) == ref


def test_exceptional_set_errors():
    with pytest.raises(DomainError):
        exceptional_set("X11", 3)
    with pytest.raises(DomainError):
        exceptional_set("X9", 3)
    with pytest.raises(DomainError):
        exceptional_set("X7", 2)


def test_search_bounds_validation():
    with pytest.raises(DomainError):
        SearchBounds(2, 1, 1)
    with pytest.raises(DomainError):
        SearchBounds(3, 0, 0)
    with pytest.raises(DomainError):
        SearchBounds(3, -1, 1)


def test_expected_sets():
    assert expected_exceptions("bang-zsigmondy", SearchBounds(5, 3, 2)) == []
    ec1 = expected_exceptions("bang-zsigmondy", SearchBounds(3, 2, 0))
    assert [str(m) for _, m in ec1] == ["T^2+T", "T^2+2*T", "T^2+2"]
    # in characteristic 2, (p - 1) p coincides for p and p + 1
    ec2 = expected_exceptions("bang-zsigmondy", SearchBounds(4, 2, 0))
    assert len(ec2) == 2
    assert expected_exceptions("bang-zsigmondy", SearchBounds(3, 1, 2)) == []


def test_bang_exceptions_are_feit_exceptions():
    for q, dm in [(3, 2), (4, 2), (5, 2)]:
        b = SearchBounds(q, dm, 1)
        bang = {(r.u, r.m) for r in verify_bang_zsigmondy(b).exceptions}
        feit = {(r.u, r.m) for r in verify_feit(b).exceptions}
        assert bang <= feit


@pytest.mark.parametrize("q", [3, 4, 5])
def test_feit_exceptions_with_zsigmondy_primes_have_rigid_shape(q):
    rep = verify_feit(SearchBounds(q, 2, 1))
    assert rep.match
    for r in rep.exceptions:
        if not r.zsigmondy_primes:
            continue
        assert r.m_plus_one_unique
        # Psi_m(u) = eps (m + 1) or eps q' (m + 1) with q' | m
        rest = r.psi_value.monic().exact_div(r.m + 1)
        assert rest.is_one() or (rest.deg >= 1 and factorize(rest).primes == [rest] and rest.divides(r.m))


def test_report_schema_and_bounded_claim():
    rep = verify_bang_zsigmondy(SearchBounds(3, 2, 1))
    doc = json.loads(rep.to_json())
    assert set(doc) == {"theorem", "q", "bounds", "exceptions", "expected", "match"}
    assert doc["bounds"] == {"max_deg_m": 2, "max_deg_u": 1}
    assert doc["match"] is True
    assert set(doc["exceptions"][0]) == {"u", "m", "zsigmondy", "large"}
    assert rep.pairs_checked == (1 + 3) * (1 + 3 + 9) - 1


def test_parallel_report_equals_serial():
    b = SearchBounds(3, 2, 1)
    assert verify_feit(b, workers=2).to_json() == verify_feit(b, workers=1).to_json()


def test_psi_values_in_reports_are_exact():
    rep = verify_feit(SearchBounds(3, 1, 1))
    for r in rep.exceptions:
        assert r.psi_value == cyclotomic_eval(r.m, r.u)
    assert all(isinstance(r.u, Poly) for r in rep.exceptions)


def test_sole_zsigmondy_shortcut_matches_full_factorization():
    from fqcarlitz.verify import _candidates_x3, _m_plus_one_sole_zsigmondy
    from fqcarlitz import zsigmondy_primes

    F = field_from_q(3)
    for u, m in _candidates_x3(F, 4):
        full = zsigmondy_primes(u, m) == [m + 1]
        assert _m_plus_one_sole_zsigmondy(u, m) == full
