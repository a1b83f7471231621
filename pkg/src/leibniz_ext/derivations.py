"""Derivations, inner derivations and the two completeness tests.

Matrices act on column coordinate vectors: column ``t`` of ``D`` holds the
coordinates of ``D(b_t)``.  Inner derivations are right multiplications
``R_x(y) = [y, x]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraTable, bracket, quotient_algebra, require_leibniz
from .linalg import Echelon, Matrix, Subspace, unit_vector
from .structure import center, right_annihilator, squares_ideal


def _flatten(D: Matrix) -> tuple:
    return D.entries


def _unflatten(v, n: int) -> Matrix:
    return Matrix.from_entries(n, n, v) if n else Matrix.zeros(0, 0)


@dataclass(frozen=True)
class DerivationSpace:
    algebra_dim: int
    basis: tuple
    space: Subspace  # flattened row-major n*n coordinates

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, D: Matrix) -> bool:
        return _flatten(D) in self.space


@dataclass(frozen=True)
class InnerSpace:
    algebra_dim: int
    basis: tuple
    space: Subspace

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, D: Matrix) -> bool:
        return _flatten(D) in self.space


def derivation_equations(A: AlgebraTable) -> list:
    """Sparse rows of the linear system ``D[x,y] = [Dx,y] + [x,Dy]`` on basis pairs.

    Unknown ``D[s][t]`` sits at index ``s*n + t``.  One row per ordered pair
    ``(i, j)`` and output coordinate ``r``; empty rows are dropped.
    """
    n = A.dim
    by_right: dict[int, list] = {}  # j -> [(s, r, c)] with gamma[s, j][r] = c
    by_left: dict[int, list] = {}   # i -> [(s, r, c)] with gamma[i, s][r] = c
    for (a, b), terms in A.gamma.items():
        for r, c in terms:
            by_right.setdefault(b, []).append((a, r, c))
            by_left.setdefault(a, []).append((b, r, c))
    rows = []
    for i in range(n):
        for j in range(n):
            eqs: dict[int, dict] = {}
            for t, c in A.product(i, j):
                for r in range(n):
                    eqs.setdefault(r, {})[r * n + t] = c
            for s, r, c in by_right.get(j, ()):
                row = eqs.setdefault(r, {})
                key = s * n + i
                row[key] = row.get(key, 0) - c
            for s, r, c in by_left.get(i, ()):
                row = eqs.setdefault(r, {})
                key = s * n + j
                row[key] = row.get(key, 0) - c
            for r in sorted(eqs):
                row = {k: v for k, v in eqs[r].items() if v}
                if row:
                    rows.append(row)
    return rows


def is_derivation(A: AlgebraTable, D: Matrix) -> bool:
    n = A.dim
    images = [D.column(t) for t in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = D.apply(A.product_vector(i, j))
            a = bracket(A, images[i], unit_vector(n, j))
            b = bracket(A, unit_vector(n, i), images[j])
            if any(x - y - z for x, y, z in zip(lhs, a, b)):
                return False
    return True


def derivation_space(A: AlgebraTable, check: bool = True) -> DerivationSpace:
    """Der(A) as the nullspace of the derivation system over the n^2 matrix entries."""
    if check:
        require_leibniz(A)
    n = A.dim
    e = Echelon(n * n)
    for row in derivation_equations(A):
        e.add(row)
    space = Subspace(n * n, e.nullspace_vectors())
    return DerivationSpace(n, tuple(_unflatten(v, n) for v in space.vectors), space)


def inner_derivations(A: AlgebraTable, check: bool = True) -> InnerSpace:
    """Span of the right multiplications ``R_{b_i}``."""
    if check:
        require_leibniz(A)
    n = A.dim
    mats = [A.right_multiplication(unit_vector(n, i)) for i in range(n)]
    space = Subspace(n * n, (_flatten(M) for M in mats))
    return InnerSpace(n, tuple(_unflatten(v, n) for v in space.vectors), space)


def is_complete(A: AlgebraTable) -> bool:
    """Trivial center and every derivation inner (Inner is always inside Der)."""
    require_leibniz(A)
    if center(A).dim:
        return False
    return derivation_space(A, check=False).dim == inner_derivations(A, check=False).dim


def _ernie(A: AlgebraTable, der: DerivationSpace):
    """``(center_mod_i_dim, every derivation is inner modulo I)``."""
    n = A.dim
    I = squares_ideal(A)
    Q, proj = quotient_algebra(A, I)
    cdim = center(Q).dim
    projected_inner = Subspace(
        proj.rows * n,
        ((proj @ A.right_multiplication(unit_vector(n, i))).entries for i in range(n)),
    )
    ok = all((proj @ D).entries in projected_inner for D in der.basis)
    return cdim, ok


def is_ernie_complete(A: AlgebraTable) -> bool:
    """Center(L/I) = 0 and each derivation agrees with some R_x modulo I = ideal of squares.

    The existence of x is linear in x, so the second condition is membership
    of ``pi o d`` in the span of ``pi o R_{b_i}``, checked per basis derivation.
    """
    require_leibniz(A)
    cdim, ok = _ernie(A, derivation_space(A, check=False))
    return cdim == 0 and ok


@dataclass(frozen=True)
class CompletenessReport:
    dim: int
    center_dim: int
    ann_r_dim: int
    squares_ideal_dim: int
    der_dim: int
    inner_dim: int
    complete_def22: bool
    i_equals_annr: bool
    center_mod_i_dim: int
    ernie_complete: bool

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "center_dim": self.center_dim,
            "ann_r_dim": self.ann_r_dim,
            "squares_ideal_dim": self.squares_ideal_dim,
            "der_dim": self.der_dim,
            "inner_dim": self.inner_dim,
            "complete_def22": self.complete_def22,
            "i_equals_annr": self.i_equals_annr,
            "center_mod_i_dim": self.center_mod_i_dim,
            "ernie_complete": self.ernie_complete,
        }


def completeness_report(A: AlgebraTable) -> CompletenessReport:
    require_leibniz(A)
    der = derivation_space(A, check=False)
    inner = inner_derivations(A, check=False)
    cdim = center(A).dim
    ann = right_annihilator(A)
    I = squares_ideal(A)
    cq, ok = _ernie(A, der)
    return CompletenessReport(
        dim=A.dim,
        center_dim=cdim,
        ann_r_dim=ann.dim,
        squares_ideal_dim=I.dim,
        der_dim=der.dim,
        inner_dim=inner.dim,
        complete_def22=cdim == 0 and der.dim == inner.dim,
        i_equals_annr=I == ann,
        center_mod_i_dim=cq,
        ernie_complete=cq == 0 and ok,
    )


def commutator(D1: Matrix, D2: Matrix) -> Matrix:
    return D1 @ D2 - D2 @ D1
