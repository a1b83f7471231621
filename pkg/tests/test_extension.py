from __future__ import annotations

import pytest

from leibniz_ext import (
    AlgebraTable,
    Matrix,
    Subspace,
    WordPresentation,
    basis_change,
    build_extension,
    catalog_get,
    check_leibniz,
    direct_sum,
    permutation_matrix,
    tables_equal,
    verify_isomorphism,
)
from leibniz_ext.errors import DimensionMismatch, ExtensionError, PresentationError, SingularMatrixError
from leibniz_ext.extension import (
    AlphaMatrix,
    beta_constraint_violations,
    compute_alpha,
    compute_beta,
    detect_components,
    enumerate_flag_family,
    evaluate_word,
    flag_vectors,
    lie_specialize_check,
    resolve_flags,
    validate_presentation,
)
from leibniz_ext.structure import verify_nilradical


def pres(name, **params):
    return catalog_get(name, params).presentation


def nf_words(n, g="e1", suffix=""):
    return {f"e{i}{suffix}": (g,) * i for i in range(2, n + 1)}


# -- validation ------------------------------------------------------------

def test_catalog_presentations_are_valid():
    for name, params in (("NF", {"n": 6}), ("F2", {"n": 6}), ("L1", {"n": 6}), ("H1", {}),
                         ("N3", {}), ("abelian", {"n": 3}), ("mu3", {"n": 8, "k": 2})):
        assert validate_presentation(catalog_get(name, params).presentation) == []


def test_wrong_word_is_reported_with_its_value():
    N = catalog_get("NF", n=4).table
    words = nf_words(4)
    words["e3"] = ("e1", "e1")
    P = WordPresentation(N, ("e1",), words)
    assert "word for e3 evaluates to e2, not e3" in validate_presentation(P)
    with pytest.raises(PresentationError) as info:
        build_extension(P)
    assert info.value.defects == validate_presentation(P)


def test_every_defect_is_collected():
    N = catalog_get("NF", n=4).table
    P = WordPresentation(N, ("e1", "e2"), {"e3": ("e1", "e4"), "e1": ("e1", "e1")},
                         abelian_flags={"e3": 1, "e1": 2})
    d = validate_presentation(P)
    assert any("do not match" in x for x in d)
    assert "generator e1 must not have a word" in d
    assert "no word for non-generator e4" in d
    assert "word for e3 uses non-generator letter(s) e4" in d
    assert "abelian flag given for e3, which is not a generator" in d
    assert "abelian flag for e1 must be 0 or 1, got 2" in d


def test_short_words_and_unknown_labels():
    N = catalog_get("NF", n=3).table
    d = validate_presentation(WordPresentation(N, ("e1", "zz"), {"e2": ("e1",), "e3": ("e1",) * 3, "w": ("e1", "e1")}))
    assert "unknown generator label(s): zz" in d
    assert "word for e2 has fewer than two letters" in d
    assert "word given for unknown label w" in d


def test_non_nilpotent_and_non_leibniz_algebras_are_rejected():
    R = build_extension(pres("NF", n=4)).table
    assert validate_presentation(WordPresentation(R, ("e1",), {})) == ["algebra is not nilpotent"]
    bad = AlgebraTable(2, None, {(0, 0): [(1, 1)], (0, 1): [(1, 1)]})
    d = validate_presentation(WordPresentation(bad, ("e1",), {"e2": ("e1", "e1")}))
    assert len(d) == 1 and d[0].startswith("algebra violates the Leibniz identity")


def test_evaluate_word():
    N = catalog_get("mu3", n=7, k=1).table
    assert evaluate_word(N, ("e2", "e1", "e1")) == N.unit("e4")
    assert evaluate_word(N, ("e1", "e2")) == (0,) * 7
    with pytest.raises(ValueError):
        evaluate_word(N, ())


# -- alpha, beta, components -----------------------------------------------

def test_alpha_counts_letters():
    a = compute_alpha(pres("L1", n=5))
    assert a.row("e5") == (2, 1) and a.row("e2") == (2, 0) and a.row("e3") == (0, 1)
    assert a.to_dict()["e4"] == {"e1": 1, "e3": 1}


def test_beta_examples():
    # [x2, e1] = [[x2, e2], e3] - [[x2, e3], e2] = [-e2, e3] = -e1
    H = pres("H1")
    beta = compute_beta(H)
    assert beta[(1, 0)] == ((0, -1),) and beta[(0, 0)] == ((0, -1),)
    # e2 in Ann_r(mu3) has b = 1, so [x2, e3] starts from [x2, e2] = 0
    M = pres("mu3", n=7, k=1)
    N = M.algebra
    assert compute_beta(M)[(1, N.index("e3"))] == ()
    assert all(not terms for terms in compute_beta(pres("NF", n=6)).values())


def test_beta_constraint_detects_mixed_letter_counts():
    alpha = AlphaMatrix(("g",), ("a", "b"), ((1,), (2,)))
    assert beta_constraint_violations(alpha, {(0, 0): ((1, 1),), (0, 1): ((1, 3),)}) == [(0, 0, 1)]


def test_components():
    F = catalog_get("F2", n=5)
    c = detect_components(F.table, F.presentation.words)
    assert c.to_dict(F.table) == {"nonabelian": [["e1", "e3", "e4", "e5"]], "abelian": ["e2"]}
    assert c.component_of(1) is None and c.component_of(3) == 0
    S = direct_sum(catalog_get("H1").table, AlgebraTable(1, ["c"]))
    assert detect_components(S).to_dict(S) == {"nonabelian": [["e1", "e2", "e3"]], "abelian": ["c"]}


def test_forced_flags_and_warnings():
    F = pres("F2", n=5)
    flags, warnings = resolve_flags(F.with_flags({"e1": 1}))
    assert flags == {"e1": 0, "e2": 1}
    assert warnings == ["flag 1 on e1 ignored: b is forced to 0 in a non-abelian component"]
    r = build_extension(F, {"e1": 1, "e2": 0})
    assert r.b_flags == {"e1": 0, "e2": 0} and len(r.warnings) == 1
    assert r.table.product("y1", "e2") == ((1, -1),)
    assert build_extension(F).table.product("y1", "e2") == ()


# -- construction ----------------------------------------------------------

def test_codimension_mismatch_is_rejected():
    with pytest.raises(ExtensionError, match="Leibniz identity"):
        build_extension(pres("mu1", n=6, k=1))


@pytest.mark.parametrize("name,params", [("NF", {"n": 5}), ("F2", {"n": 6}), ("L1", {"n": 6}),
                                         ("H1", {}), ("mu3", {"n": 8, "k": 2})])
def test_dimension_and_nilradical(name, params):
    P = catalog_get(name, params).presentation
    r = build_extension(P)
    n, k = P.algebra.dim, len(P.generator_labels)
    assert r.table.dim == n + k and r.nilradical_dim == n
    assert check_leibniz(r.table) == []
    assert verify_nilradical(r.table, r.nilradical)
    assert sorted(r.q_index(g) for g in P.generator_labels) == list(range(n, n + k))


def test_generator_order_does_not_change_the_extension():
    P = pres("F2", n=5)
    swapped = WordPresentation(P.algebra, ("e2", "e1"), P.words)
    assert tables_equal(build_extension(P).table, build_extension(swapped).table)
    L = pres("L1", n=5)
    a, b = build_extension(L), build_extension(WordPresentation(L.algebra, ("e3", "e1"), L.words))
    # x1 and x2 trade places
    assert tables_equal(basis_change(b.table, permutation_matrix([0, 1, 2, 3, 4, 6, 5])), a.table)


def test_extension_is_local_to_components():
    # R(NF3 + NF3') agrees with R(NF3) + R(NF3') after moving x1 behind the second block
    A = catalog_get("NF", n=3).table
    S = direct_sum(A, A)
    words = nf_words(3)
    words.update(nf_words(3, "e1'", "'"))
    whole = build_extension(WordPresentation(S, ("e1", "e1'"), words)).table
    part = build_extension(pres("NF", n=3)).table
    D = direct_sum(part, part)
    assert tables_equal(basis_change(D, permutation_matrix([0, 1, 2, 4, 5, 6, 3, 7])), whole)


def test_flag_family_for_abelian_summands():
    fam = enumerate_flag_family(pres("abelian", n=2))
    assert [r.b_flags for r in fam] == [{"e1": 0, "e2": 0}, {"e1": 1, "e2": 0}, {"e1": 1, "e2": 1}]
    assert flag_vectors(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_lie_specialization():
    assert lie_specialize_check(build_extension(pres("H1")))
    assert not lie_specialize_check(build_extension(pres("NF", n=4)))
    assert not lie_specialize_check(build_extension(pres("mu3", n=7, k=1)))


def test_result_serialization():
    d = build_extension(pres("H1")).to_dict()
    assert d["dim"] == 5 and d["q_labels"] == {"e2": "x1", "e3": "x2"}
    assert d["beta"] == {"x1": {"e1": [["-1", "e1"]]}, "x2": {"e1": [["-1", "e1"]]}}


def test_verify_isomorphism_errors():
    A = catalog_get("H1").table
    with pytest.raises(DimensionMismatch):
        verify_isomorphism(A, catalog_get("NF", n=4).table, Matrix.identity(3))
    with pytest.raises(SingularMatrixError):
        verify_isomorphism(A, A, Matrix.zeros(3, 3))
    assert verify_isomorphism(A, A, Matrix.identity(3))
    assert not verify_isomorphism(A, A, Matrix.diagonal([1, 1, 2]))


def test_nilradical_subspace_property():
    r = build_extension(pres("NF", n=4))
    assert r.nilradical == Subspace.coordinate(5, range(4))
