"""Shared table corpus and hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from leibniz_ext import Matrix, build_extension, catalog_get

NILPOTENT = [
    ("NF", {"n": 4}), ("NF", {"n": 6}), ("F2", {"n": 5}), ("L1", {"n": 5}), ("H1", {}),
    ("N3", {}), ("abelian", {"n": 2}), ("mu1", {"n": 6, "k": 1}), ("mu2", {"n": 6, "k": 1}),
    ("mu3", {"n": 7, "k": 1}),
]
SOLVABLE = [
    ("H1ext", {}), ("g5_36", {}), ("g5_37", {}), ("q", {"n": 4}), ("R1", {"n": 5}), ("R2", {"n": 5}),
    ("R4_1", {}), ("R4_2", {}), ("R4_3", {}), ("NFext", {"n": 5}), ("N3ext", {}),
    ("mu3ext", {"n": 7, "k": 1}), ("Rmu1", {"n": 6, "k": 1, "a2_1": 1, "delta1_1": 2}),
]
PRESENTED = ["NF", "F2", "L1", "H1", "N3", "mu3"]


def table(name, params):
    return catalog_get(name, params).table


def corpus():
    return [(f"{name}{sorted(p.items())}", table(name, p)) for name, p in NILPOTENT + SOLVABLE]


def extension_corpus():
    out = []
    for name, params in NILPOTENT:
        P = catalog_get(name, params).presentation
        if name in PRESENTED and P is not None:
            out.append((name, build_extension(P).table))
    return out


TABLES = st.sampled_from([t for _, t in corpus()])
small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def invertible(draw, n):
    """Unit lower-triangular times an upper-triangular with nonzero diagonal, then permuted."""
    L = [[Fraction(int(i == j)) if j >= i else draw(small) for j in range(n)] for i in range(n)]
    U = [[draw(small) if j > i else (draw(st.sampled_from([1, -1, 2, Fraction(1, 2)])) if i == j else 0)
          for j in range(n)] for i in range(n)]
    perm = draw(st.permutations(range(n)))
    M = Matrix(L) @ Matrix(U)
    return Matrix([M.row(p) for p in perm])


@st.composite
def elements(draw, n):
    return tuple(draw(small) for _ in range(n))
