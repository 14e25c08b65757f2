import dataclasses
import json
import math

import pytest

from catsieve.csp import CspRow, FamilyDescriptor, burnside_check, family_descriptor, verify_csp
from catsieve.objects import Configuration
from catsieve.qpoly import Polynomial, q_catalan


def test_config_five_report():
    r = verify_csp(family_descriptor("config", 5))
    assert [row.fixed for row in r.rows] == [42, 2, 10, 2]
    assert [row.eval for row in r.rows] == [42, 2, 10, 2]
    assert [row.closed_form for row in r.rows] == [42, 2, 10, 2]
    assert [row.d for row in r.rows] == [1, 4, 2, 4]
    assert r.csp_holds and r.orbits == 14
    assert burnside_check(r)


def test_matching_two_report():
    r = verify_csp(family_descriptor("matching", 2))
    assert [row.fixed for row in r.rows] == [2, 0, 2, 0]
    assert [row.eval for row in r.rows] == [2, 0, 2, 0]
    assert all(row.closed_form is None for row in r.rows)
    assert r.csp_holds and burnside_check(r)


def test_trivial_group_report():
    r = verify_csp(family_descriptor("config", 2))
    assert r.group_order == 1 and len(r.rows) == 1
    assert r.rows[0].fixed == 2 == q_catalan(2)(1)
    assert r.csp_holds and burnside_check(r)
    r = verify_csp(family_descriptor("config", 1))
    assert (r.rows[0].fixed, r.rows[0].eval, r.rows[0].closed_form) == (1, 1, 1)


def test_burnside_detects_corruption():
    r = verify_csp(family_descriptor("config", 5))
    r.rows[1] = dataclasses.replace(r.rows[1], fixed=r.rows[1].fixed + 1)
    assert not burnside_check(r)
    assert not r.csp_holds


def test_wrong_polynomial_is_a_violation_not_a_crash():
    base = family_descriptor("config", 5)
    # (1+q)^2 has the right value at q=1 for nothing in particular; q has no integer value at i
    bad = dataclasses.replace(base, polynomial=Polynomial([41, 1]))
    r = verify_csp(bad)
    assert r.rows[0].match  # 41 + 1 = 42
    assert not r.rows[1].match and r.rows[1].eval is None and r.rows[1].residue
    assert not r.csp_holds


def test_custom_descriptor():
    # two-element set swapped by an involution sieved by 1 + q
    objs = ("a", "b")
    desc = FamilyDescriptor("swap", 1, 2, lambda: objs, lambda x, k: x if k % 2 == 0 else {"a": "b", "b": "a"}[x],
                            Polynomial([1, 1]))
    r = verify_csp(desc)
    assert [row.fixed for row in r.rows] == [2, 0] and r.csp_holds and r.orbits == 1


def test_config_reports(config_reports):
    for n, r in config_reports.items():
        assert r.csp_holds, n
        assert burnside_check(r), n
        N = r.group_order
        for row in r.rows:
            assert row.closed_form == row.fixed == row.eval
            twin = r.rows[math.gcd(row.k, N) % N]
            assert (row.fixed, row.eval) == (twin.fixed, twin.eval)


@pytest.mark.parametrize("n", range(1, 7))
def test_matchings_sieve(n):
    r = verify_csp(family_descriptor("matching", n))
    assert r.csp_holds and burnside_check(r)


@pytest.mark.parametrize("n", range(1, 9))
def test_triangulations_sieve(n):
    r = verify_csp(family_descriptor("triangulation", n))
    assert r.csp_holds and burnside_check(r)


def test_float_column_on_request():
    r = verify_csp(family_descriptor("matching", 3), with_float=True)
    for row in r.rows:
        assert abs(row.float_eval - row.eval) < 1e-9


def test_json_schema_and_determinism():
    a = verify_csp(family_descriptor("config", 7)).dumps()
    b = verify_csp(family_descriptor("config", 7)).dumps()
    assert a == b
    data = json.loads(a)
    assert set(data) == {"family", "n", "group_order", "rows", "orbits", "csp_holds"}
    assert data["family"] == "config" and data["group_order"] == 6
    row = data["rows"][0]
    assert set(row) == {"k", "d", "fixed", "eval", "closed_form", "match"}
    assert row["fixed"] == "429" and isinstance(row["fixed"], str)


def test_row_json_nulls():
    assert CspRow(1, 4, 0, None).to_json()["eval"] is None


def test_text_table():
    text = verify_csp(family_descriptor("config", 5)).to_text()
    assert text.splitlines() == [
        "family=config n=5 group_order=4",
        "k  d  fixed  eval  closed_form  match",
        "0  1     42    42           42    yes",
        "1  4      2     2            2    yes",
        "2  2     10    10           10    yes",
        "3  4      2     2            2    yes",
        "orbits=14 burnside=ok csp_holds=true",
    ]
