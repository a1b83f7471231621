from __future__ import annotations

import json
from fractions import Fraction

import pytest

from leibniz_ext import catalog_get, catalog_list, check_leibniz, lower_central_series
from leibniz_ext.errors import CatalogError, FormatError, ParameterError
from leibniz_ext.io import (
    algebra_from_dict,
    algebra_to_dict,
    dumps_algebra,
    load_algebra,
    load_matrix,
    load_presentation,
    loads,
    matrix_from_dict,
    matrix_to_dict,
    presentation_from_dict,
    presentation_to_dict,
)
from leibniz_ext.linalg import Matrix
from leibniz_ext.regressions import run_regressions

ENTRIES = [e.name for e in catalog_list()]


# -- catalog ---------------------------------------------------------------

@pytest.mark.parametrize("name", ENTRIES)
def test_every_default_entry_is_leibniz_and_round_trips(name):
    inst = catalog_get(name)
    A = inst.table
    assert check_leibniz(A) == []
    again = algebra_from_dict(json.loads(dumps_algebra(A)))
    assert again == A and again.basis_labels == A.basis_labels
    if inst.presentation is not None:
        P = presentation_from_dict(json.loads(json.dumps(presentation_to_dict(inst.presentation))))
        assert P == inst.presentation


def test_unknown_entry_and_parameters():
    with pytest.raises(CatalogError, match="unknown catalog entry"):
        catalog_get("nope")
    with pytest.raises(ParameterError, match="unknown parameter 'm'"):
        catalog_get("NF", m=3)
    with pytest.raises(ParameterError, match="unknown parameter"):
        catalog_get("Rmu1", a9_1=1)
    with pytest.raises(ParameterError):
        catalog_get("Rmu1", zeta=1)


@pytest.mark.parametrize("name,params", [
    ("mu3", {"n": 7, "k": 2}),
    ("NF", {"n": "1/2"}),
    ("Rabelian", {"b1": 2}),
    ("mu1", {"k": 0}),
    ("NF", {"n": True}),
    ("NF", {"n": "x"}),
])
def test_out_of_domain_parameters(name, params):
    with pytest.raises(ParameterError):
        catalog_get(name, params)


def test_string_parameters_are_rationals():
    A = catalog_get("Rmu1", {"n": "6", "k": 1, "a2_1": "1/2"}).table
    assert A.product("e1", "x1") == ((1, Fraction(1, 2)),)


@pytest.mark.parametrize("n,k", [(6, 1), (8, 1), (8, 2)])
def test_mu1_generator_count_and_family_codimension(n, k):
    # mu1 has k + 1 generators, the Rmu1 family adds k vectors
    mu = catalog_get("mu1", n=n, k=k).table
    lcs = lower_central_series(mu)
    assert mu.dim - lcs[1].dim == k + 1
    assert catalog_get("Rmu1", n=n, k=k).table.dim == n + k


def test_regressions_are_deterministic_and_green():
    first = [c.to_dict() for c in run_regressions()]
    second = [c.to_dict() for c in run_regressions()]
    assert first == second
    assert all(c["passed"] for c in first)


# -- formats ---------------------------------------------------------------

def test_algebra_dict_shape():
    d = algebra_to_dict(catalog_get("NF", n=3).table)
    assert d["dim"] == 3 and d["basis"] == ["e1", "e2", "e3"]
    assert {"left": "e1", "right": "e1", "result": [["1", "e2"]]} in d["products"]


def test_default_labels_and_summed_terms():
    A = algebra_from_dict({"dim": 2, "products": [
        {"left": "e1", "right": "e1", "result": [["1/2", "e2"], ["1/2", "e2"]]}]})
    assert A.product(0, 0) == ((1, 1),)


@pytest.mark.parametrize("obj,where", [
    ({"dim": 2, "products": [{"left": "e1", "right": "e1", "result": [["0.5", "e2"]]}]},
     "products[0].result[0]"),
    ({"dim": 2, "products": [{"left": "e1", "right": "e9", "result": []}]}, "products[0].right"),
    ({"dim": 2, "products": [{"left": "e1", "right": "e1", "result": [["1", "e3"]]}]},
     "products[0].result[0]"),
    ({"dim": 2, "products": [{"left": "e1", "right": "e1", "result": [["1"]]}]}, "products[0].result[0]"),
    ({"dim": 2, "basis": ["a"]}, "basis"),
    ({"dim": 2, "basis": ["a", "a"]}, "basis"),
    ({"dim": -1}, "dim"),
    ({"dim": "2"}, "dim"),
    ({}, None),
    ({"dim": 1, "products": {}}, "products"),
    ({"dim": 2, "products": [{"left": "e1", "right": "e1", "result": []},
                             {"left": "e1", "right": "e1", "result": []}]}, "products[1]"),
])
def test_malformed_algebras(obj, where):
    with pytest.raises(FormatError) as info:
        algebra_from_dict(obj)
    assert info.value.where == where


def test_decimal_message():
    bad = {"dim": 2, "products": [{"left": "e1", "right": "e1", "result": [["1.5", "e2"]]}]}
    with pytest.raises(FormatError, match="decimal notation is not allowed"):
        algebra_from_dict(bad)


def test_json_syntax_errors_and_missing_files(tmp_path):
    with pytest.raises(FormatError, match="<input>:1:"):
        loads("{")
    with pytest.raises(FormatError):
        load_algebra(str(tmp_path / "missing.json"))


def test_matrix_round_trip_and_errors(tmp_path):
    M = Matrix([[1, Fraction(-1, 3)], [0, 2]])
    path = tmp_path / "m.json"
    path.write_text(json.dumps(matrix_to_dict(M)))
    assert load_matrix(str(path)) == M
    with pytest.raises(FormatError, match="rows listed"):
        matrix_from_dict({"rows": 2, "cols": 1, "entries": [["1"]]})
    with pytest.raises(FormatError) as info:
        matrix_from_dict({"rows": 1, "cols": 2, "entries": [["1", "x"]]})
    assert info.value.where == "entries[0][1]"


def test_presentation_errors(tmp_path):
    base = presentation_to_dict(catalog_get("NF", n=3).presentation)
    path = tmp_path / "p.json"
    path.write_text(json.dumps(base))
    assert load_presentation(str(path)) == catalog_get("NF", n=3).presentation
    for key, value, where in (("generators", [1], "generators"), ("words", [], "words"),
                              ("words", {"e2": "e1e1"}, "words.e2"),
                              ("abelian_flags", {"e1": True}, "abelian_flags.e1")):
        with pytest.raises(FormatError) as info:
            presentation_from_dict({**base, key: value})
        assert info.value.where == where
    broken = {**base, "algebra": {"dim": 1, "basis": ["a", "b"]}}
    with pytest.raises(FormatError) as info:
        presentation_from_dict(broken)
    assert info.value.where == "algebra.basis"
