"""Series, annihilators, squares ideal and generator bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraTable, bracket, is_ideal, subspace_product
from .errors import BasisNotAdaptedError, NotNilpotentError
from .linalg import Echelon, Subspace, unit_vector


@dataclass(frozen=True)
class SeriesProfile:
    lower_central_dims: tuple
    derived_dims: tuple
    nilpotent: bool
    solvable: bool
    nilindex: int | None

    def to_dict(self) -> dict:
        return {
            "lower_central_dims": list(self.lower_central_dims),
            "derived_dims": list(self.derived_dims),
            "nilpotent": self.nilpotent,
            "solvable": self.solvable,
            "nilindex": self.nilindex,
        }


@dataclass(frozen=True)
class GeneratorData:
    """Generators of a nilpotent algebra in an adapted basis.

    ``generator_indices`` project to a basis of N/N^2; ``k1`` of them lie
    outside the right annihilator and the rest (``ann_r_generator_indices``)
    inside it.
    """
    k: int
    generator_indices: tuple
    k1: int
    ann_r_generator_indices: tuple
    square_indices: tuple

    @property
    def non_ann_r_generator_indices(self) -> tuple:
        return tuple(i for i in self.generator_indices if i not in self.ann_r_generator_indices)

    def to_dict(self, A: AlgebraTable | None = None) -> dict:
        name = (lambda i: A.basis_labels[i]) if A is not None else (lambda i: i)
        return {
            "k": self.k,
            "k1": self.k1,
            "generators": [name(i) for i in self.generator_indices],
            "ann_r_generators": [name(i) for i in self.ann_r_generator_indices],
        }


def _stabilize(A: AlgebraTable, step) -> list:
    terms = [Subspace.full(A.dim)]
    while terms[-1].dim > 0:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def lower_central_series(A: AlgebraTable) -> list:
    """``L^1 = L, L^{k+1} = [L^k, L]`` until the terms stop shrinking."""
    full = Subspace.full(A.dim)
    return _stabilize(A, lambda U: subspace_product(A, U, full))


def derived_series(A: AlgebraTable) -> list:
    return _stabilize(A, lambda U: subspace_product(A, U, U))


def series_profile(A: AlgebraTable) -> SeriesProfile:
    lcs = lower_central_series(A)
    der = derived_series(A)
    nilpotent = lcs[-1].dim == 0
    solvable = der[-1].dim == 0
    # L^1..L^tau with L^tau = 0; an empty algebra has tau = 1
    nilindex = len(lcs) if nilpotent else None
    return SeriesProfile(
        lower_central_dims=tuple(s.dim for s in lcs),
        derived_dims=tuple(s.dim for s in der),
        nilpotent=nilpotent,
        solvable=solvable,
        nilindex=nilindex,
    )


def is_nilpotent(A: AlgebraTable) -> bool:
    return lower_central_series(A)[-1].dim == 0


def is_solvable(A: AlgebraTable) -> bool:
    return derived_series(A)[-1].dim == 0


def _kernel_of_products(A: AlgebraTable, left: bool, right: bool) -> Subspace:
    # unknown a; equations [b_i, a] = 0 (left) and/or [a, b_j] = 0 (right), per output coordinate
    rows: dict = {}
    for (i, j), terms in A.gamma.items():
        for k, c in terms:
            if left:
                rows.setdefault((0, i, k), {})[j] = c
            if right:
                rows.setdefault((1, j, k), {})[i] = c
    e = Echelon(A.dim)
    for key in sorted(rows):
        e.add(rows[key])
    return Subspace(A.dim, e.nullspace_vectors())


def right_annihilator(A: AlgebraTable) -> Subspace:
    """``{a : [x, a] = 0 for all x}``."""
    return _kernel_of_products(A, left=True, right=False)


def left_annihilator(A: AlgebraTable) -> Subspace:
    """``{a : [a, x] = 0 for all x}``."""
    return _kernel_of_products(A, left=False, right=True)


def center(A: AlgebraTable) -> Subspace:
    return _kernel_of_products(A, left=True, right=True)


def ideal_closure(A: AlgebraTable, S: Subspace) -> Subspace:
    """Smallest two-sided ideal containing S.

    Fixed point of ``U -> U + [U, A] + [A, U]``.  Only vectors that enlarged
    the span are bracketed again, so there are at most ``dim A`` rounds of
    ``2 dim A`` products each.
    """
    n = A.dim
    basis = [unit_vector(n, i) for i in range(n)]
    e = Echelon(n)
    queue = []
    for v in S.vectors:
        if e.add(list(enumerate(v))):
            queue.append(v)
    while queue:
        u = queue.pop()
        for b in basis:
            for w in (bracket(A, u, b), bracket(A, b, u)):
                if any(w) and e.add(list(enumerate(w))):
                    queue.append(w)
    return Subspace._from_echelon(e)


def squares_ideal(A: AlgebraTable) -> Subspace:
    """Ideal generated by all squares ``[x, x]``.

    By polarization the squares span the same space as ``[b_i, b_i]`` and
    ``[b_i, b_j] + [b_j, b_i]``.
    """
    n = A.dim
    gens = []
    for i in range(n):
        bi = unit_vector(n, i)
        gens.append(bracket(A, bi, bi))
        for j in range(i + 1, n):
            bj = unit_vector(n, j)
            gens.append(tuple(p + q for p, q in zip(bracket(A, bi, bj), bracket(A, bj, bi))))
    return ideal_closure(A, Subspace(n, gens))


def generator_data(N: AlgebraTable) -> GeneratorData:
    """Generators of a nilpotent algebra given in an adapted basis.

    Adapted means N^2 is spanned by the basis vectors it contains; the other
    basis vectors are then the generators, in index order.
    """
    if not is_nilpotent(N):
        raise NotNilpotentError("algebra is not nilpotent")
    n = N.dim
    full = Subspace.full(n)
    sq = subspace_product(N, full, full)
    inside = [i for i in range(n) if unit_vector(n, i) in sq]
    if Subspace.coordinate(n, inside) != sq:
        raise BasisNotAdaptedError(
            "basis not adapted: N^2 is not spanned by the basis vectors it contains")
    gens = tuple(i for i in range(n) if i not in inside)
    ann = right_annihilator(N)
    in_ann = tuple(i for i in gens if unit_vector(n, i) in ann)
    return GeneratorData(
        k=len(gens),
        generator_indices=gens,
        k1=len(gens) - len(in_ann),
        ann_r_generator_indices=in_ann,
        square_indices=tuple(inside),
    )


def nilpotent_subspace(A: AlgebraTable, U: Subspace) -> bool:
    """Whether the subalgebra on U is nilpotent (U must be closed under the bracket)."""
    term = U
    for _ in range(U.dim + 1):
        if term.dim == 0:
            return True
        nxt = subspace_product(A, term, U)
        if nxt == term:
            return False
        term = nxt
    return term.dim == 0


def verify_nilradical(R: AlgebraTable, N: Subspace) -> bool:
    """N is a nilpotent two-sided ideal containing R^2."""
    if not is_ideal(R, N):
        return False
    if not nilpotent_subspace(R, N):
        return False
    full = Subspace.full(R.dim)
    return subspace_product(R, full, full).is_subspace_of(N)
