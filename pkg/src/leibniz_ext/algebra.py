"""Structure-constant tables of finite-dimensional algebras.

A table stores ``[b_i, b_j] = sum_k gamma[i, j][k] b_k`` sparsely: only nonzero
coefficients are kept and every product list is sorted by result index, so two
tables describe the same bilinear map in the same basis exactly when their
normalized ``gamma`` mappings coincide.

The Leibniz identity used throughout is the right one,

    L(x, y, z) = [[x, y], z] - [[x, z], y] - [x, [y, z]] = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, NotAnIdealError, NotLeibnizError, SingularMatrixError
from .linalg import (
    ZERO,
    Matrix,
    Subspace,
    as_fraction,
    quotient_complement,
    unit_vector,
)


def default_labels(n: int, prefix: str = "e") -> tuple:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


class AlgebraTable:
    """Immutable structure-constant table over Q."""

    __slots__ = ("dim", "basis_labels", "_gamma", "_index")

    def __init__(self, dim: int, basis_labels: Sequence[str] | None = None,
                 gamma: Mapping | None = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        labels = tuple(basis_labels) if basis_labels is not None else default_labels(dim)
        if len(labels) != dim:
            raise DimensionMismatch(f"{len(labels)} labels for a {dim}-dimensional algebra")
        if len(set(labels)) != dim:
            raise ValueError("basis labels must be distinct")
        norm = {}
        for (i, j), terms in (gamma or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"product index ({i}, {j}) out of range")
            acc: dict[int, Fraction] = {}
            for k, c in (terms.items() if isinstance(terms, Mapping) else terms):
                if not 0 <= k < dim:
                    raise IndexError(f"result index {k} out of range")
                acc[k] = acc.get(k, ZERO) + as_fraction(c)
            entry = tuple((k, c) for k, c in sorted(acc.items()) if c != 0)
            if entry:
                norm[(i, j)] = entry
        self.dim = dim
        self.basis_labels = labels
        self._gamma = MappingProxyType(dict(sorted(norm.items())))
        self._index = {lab: i for i, lab in enumerate(labels)}

    # -- construction helpers ---------------------------------------------

    @classmethod
    def from_products(cls, labels: Sequence[str], products: Iterable | Mapping) -> "AlgebraTable":
        """Build from ``{(left, right): {result: coeff}}`` keyed by labels or indices.

        ``products`` may also be an iterable of ``(left, right, result)`` triples.
        Repeated keys are an error.
        """
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}

        def idx(a):
            return a if isinstance(a, int) else index[a]

        items = products.items() if isinstance(products, Mapping) else (
            ((a, b), r) for a, b, r in products)
        gamma: dict = {}
        for (a, b), result in items:
            key = (idx(a), idx(b))
            if key in gamma:
                raise ValueError(f"product [{labels[key[0]]}, {labels[key[1]]}] given twice")
            if isinstance(result, Mapping):
                terms = [(idx(k), c) for k, c in result.items()]
            else:
                terms = [(idx(k), c) for k, c in result]
            gamma[key] = terms
        return cls(len(labels), labels, gamma)

    @classmethod
    def lie(cls, labels: Sequence[str], brackets: Mapping) -> "AlgebraTable":
        """Lie algebra from brackets ``[a, b]`` with ``a != b``; adds ``[b, a] = -[a, b]``."""
        full = {}
        for (a, b), result in brackets.items():
            if a == b:
                raise ValueError("a Lie bracket [a, a] is zero and must not be listed")
            res = dict(result)
            full[(a, b)] = res
            full[(b, a)] = {k: -as_fraction(c) for k, c in res.items()}
        return cls.from_products(labels, full)

    @classmethod
    def abelian(cls, n: int, labels: Sequence[str] | None = None) -> "AlgebraTable":
        return cls(n, labels)

    def relabel(self, labels: Sequence[str]) -> "AlgebraTable":
        return AlgebraTable(self.dim, labels, self._gamma)

    # -- access ------------------------------------------------------------

    @property
    def gamma(self) -> Mapping:
        return self._gamma

    def index(self, label) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.dim:
                raise IndexError(f"basis index {label} out of range")
            return label
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def product(self, i, j) -> tuple:
        """Sparse ``[b_i, b_j]`` as a tuple of ``(k, coeff)``."""
        return self._gamma.get((self.index(i), self.index(j)), ())

    def product_vector(self, i, j) -> tuple:
        out = [ZERO] * self.dim
        for k, c in self.product(i, j):
            out[k] = c
        return tuple(out)

    def unit(self, label) -> tuple:
        return unit_vector(self.dim, self.index(label))

    def element(self, coeffs: Mapping) -> tuple:
        out = [ZERO] * self.dim
        for lab, c in coeffs.items():
            out[self.index(lab)] += as_fraction(c)
        return tuple(out)

    def format_element(self, v: Sequence) -> str:
        terms = []
        for lab, c in zip(self.basis_labels, v):
            if c == 0:
                continue
            if c == 1:
                terms.append(lab)
            elif c == -1:
                terms.append(f"-{lab}")
            else:
                terms.append(f"{c}*{lab}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def nonzero_products(self):
        return self._gamma.items()

    def right_multiplication(self, x: Sequence) -> Matrix:
        """Matrix of ``R_x : y -> [y, x]`` (column j is ``[b_j, x]``)."""
        cols = [bracket(self, unit_vector(self.dim, j), x) for j in range(self.dim)]
        return Matrix(zip(*cols), cols=self.dim) if self.dim else Matrix.zeros(0, 0)

    def left_multiplication(self, x: Sequence) -> Matrix:
        """Matrix of ``L_x : y -> [x, y]``."""
        cols = [bracket(self, x, unit_vector(self.dim, j)) for j in range(self.dim)]
        return Matrix(zip(*cols), cols=self.dim) if self.dim else Matrix.zeros(0, 0)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return (self.dim == other.dim and self.basis_labels == other.basis_labels
                and dict(self._gamma) == dict(other._gamma))

    def __hash__(self):
        return hash((self.dim, self.basis_labels, tuple(self._gamma.items())))

    def __repr__(self):
        return f"AlgebraTable(dim={self.dim}, products={len(self._gamma)})"

    def describe(self) -> str:
        """Multiplication table, one nonzero product per line."""
        lab = self.basis_labels
        lines = []
        for (i, j), terms in self._gamma.items():
            v = [ZERO] * self.dim
            for k, c in terms:
                v[k] = c
            lines.append(f"[{lab[i]}, {lab[j]}] = {self.format_element(v)}")
        return "\n".join(lines)


def tables_equal(a: AlgebraTable, b: AlgebraTable) -> bool:
    """Structural equality: same dimension and identical normalized products."""
    return a.dim == b.dim and dict(a.gamma) == dict(b.gamma)


def table_differences(a: AlgebraTable, b: AlgebraTable, limit: int = 10) -> list:
    """Human-readable list of products on which two same-size tables disagree."""
    if a.dim != b.dim:
        return [f"dimensions differ: {a.dim} vs {b.dim}"]
    out = []
    for key in sorted(set(a.gamma) | set(b.gamma)):
        if a.gamma.get(key) != b.gamma.get(key):
            i, j = key
            out.append(f"[{a.basis_labels[i]}, {a.basis_labels[j]}]: "
                       f"{a.format_element(a.product_vector(i, j))} vs "
                       f"{a.format_element(b.product_vector(i, j))}")
            if len(out) >= limit:
                break
    return out


# ---------------------------------------------------------------------------
# bilinear machinery
# ---------------------------------------------------------------------------

def _check_element(A: AlgebraTable, v: Sequence):
    if len(v) != A.dim:
        raise DimensionMismatch(f"element of length {len(v)} for a {A.dim}-dimensional algebra")


def bracket(A: AlgebraTable, u: Sequence, v: Sequence) -> tuple:
    _check_element(A, u)
    _check_element(A, v)
    out = [ZERO] * A.dim
    g = A.gamma
    vnz = [(j, y) for j, y in enumerate(v) if y]
    for i, x in enumerate(u):
        if not x:
            continue
        for j, y in vnz:
            terms = g.get((i, j))
            if terms:
                xy = x * y
                for k, c in terms:
                    out[k] += xy * c
    return tuple(out)


def leibniz_defect(A: AlgebraTable, x: Sequence, y: Sequence, z: Sequence) -> tuple:
    """``[[x, y], z] - [[x, z], y] - [x, [y, z]]``."""
    a = bracket(A, bracket(A, x, y), z)
    b = bracket(A, bracket(A, x, z), y)
    c = bracket(A, x, bracket(A, y, z))
    return tuple(p - q - r for p, q, r in zip(a, b, c))


@dataclass(frozen=True)
class Violation:
    """Basis triple ``(i, j, k)`` with a nonzero Leibniz defect."""
    i: int
    j: int
    k: int
    defect: tuple

    def describe(self, A: AlgebraTable) -> str:
        lab = A.basis_labels
        return f"L({lab[self.i]}, {lab[self.j]}, {lab[self.k]}) = {A.format_element(self.defect)}"


def check_leibniz(A: AlgebraTable) -> list:
    """All basis triples violating the Leibniz identity (empty iff A is Leibniz).

    Bilinearity makes the basis triples sufficient.  A triple can only have a
    nonzero defect when one of ``[b_i,b_j]``, ``[b_i,b_k]``, ``[b_j,b_k]`` is
    nonzero, so only those triples are evaluated.
    """
    n = A.dim
    g = A.gamma
    candidates = set()
    for (p, q) in g:
        for r in range(n):
            candidates.add((p, q, r))  # [b_i, b_j] nonzero
            candidates.add((p, r, q))  # [b_i, b_k] nonzero
            candidates.add((r, p, q))  # [b_j, b_k] nonzero
    out = []
    for i, j, k in sorted(candidates):
        acc: dict[int, Fraction] = {}
        for t, c in g.get((i, j), ()):
            for s, d in g.get((t, k), ()):
                acc[s] = acc.get(s, ZERO) + c * d
        for t, c in g.get((i, k), ()):
            for s, d in g.get((t, j), ()):
                acc[s] = acc.get(s, ZERO) - c * d
        for t, c in g.get((j, k), ()):
            for s, d in g.get((i, t), ()):
                acc[s] = acc.get(s, ZERO) - c * d
        if any(acc.values()):
            defect = [ZERO] * n
            for s, c in acc.items():
                defect[s] = c
            out.append(Violation(i, j, k, tuple(defect)))
    return out


def is_leibniz(A: AlgebraTable) -> bool:
    return not check_leibniz(A)


def require_leibniz(A: AlgebraTable):
    violations = check_leibniz(A)
    if violations:
        raise NotLeibnizError(
            f"table violates the Leibniz identity at {len(violations)} basis triple(s), "
            f"first {violations[0].describe(A)}")


def is_antisymmetric(A: AlgebraTable) -> bool:
    g = A.gamma
    for (i, j), terms in g.items():
        if i == j:
            return False
        if g.get((j, i)) != tuple((k, -c) for k, c in terms):
            return False
    return True


def is_lie(A: AlgebraTable) -> bool:
    """True iff the (Leibniz) table is antisymmetric, which then forces Jacobi."""
    require_leibniz(A)
    return is_antisymmetric(A)


def basis_change(A: AlgebraTable, P: Matrix, labels: Sequence[str] | None = None) -> AlgebraTable:
    """Table of A in the basis ``b'_i = sum_j P[i, j] b_j`` (rows of P are the new basis)."""
    if P.shape != (A.dim, A.dim):
        raise DimensionMismatch(f"basis change of shape {P.shape} for a {A.dim}-dimensional algebra")
    try:
        Pinv = P.inverse()
    except SingularMatrixError:
        raise SingularMatrixError("basis change matrix is singular") from None
    rows = [P.row(i) for i in range(A.dim)]
    gamma = {}
    for i in range(A.dim):
        for j in range(A.dim):
            w = bracket(A, rows[i], rows[j])
            if any(w):
                new = Pinv.apply_left(w)
                gamma[(i, j)] = [(k, c) for k, c in enumerate(new) if c]
    return AlgebraTable(A.dim, labels if labels is not None else A.basis_labels, gamma)


def permutation_matrix(order: Sequence[int]) -> Matrix:
    """Basis change whose i-th new vector is old vector ``order[i]``."""
    n = len(order)
    return Matrix((unit_vector(n, order[i]) for i in range(n)), cols=n)


def direct_sum(A: AlgebraTable, B: AlgebraTable, suffix: str = "'") -> AlgebraTable:
    """Block table of A (first) and B; products across the blocks are zero.

    B's labels receive ``suffix`` (repeatedly) when they collide with A's.
    """
    taken = set(A.basis_labels)
    labels_b = []
    for lab in B.basis_labels:
        new = lab
        while new in taken:
            new += suffix
        taken.add(new)
        labels_b.append(new)
    off = A.dim
    gamma = dict(A.gamma)
    for (i, j), terms in B.gamma.items():
        gamma[(i + off, j + off)] = [(k + off, c) for k, c in terms]
    return AlgebraTable(A.dim + B.dim, A.basis_labels + tuple(labels_b), gamma)


def subspace_product(A: AlgebraTable, U: Subspace, V: Subspace) -> Subspace:
    """Span of ``[u, v]`` over basis vectors u of U and v of V."""
    if U.ambient_dim != A.dim or V.ambient_dim != A.dim:
        raise DimensionMismatch("subspaces must live in the algebra's underlying space")
    return Subspace(A.dim, (bracket(A, u, v) for u in U.vectors for v in V.vectors))


def is_ideal(A: AlgebraTable, J: Subspace) -> bool:
    """Two-sided ideal test: ``[A, J]`` and ``[J, A]`` both inside J."""
    if J.ambient_dim != A.dim:
        raise DimensionMismatch("subspace must live in the algebra's underlying space")
    for u in J.vectors:
        for i in range(A.dim):
            b = unit_vector(A.dim, i)
            if bracket(A, u, b) not in J or bracket(A, b, u) not in J:
                return False
    return True


def quotient_algebra(A: AlgebraTable, J: Subspace):
    """``(A/J, projection)`` over the deterministic complement of J.

    The quotient basis consists of the cosets of the basis vectors at the
    non-pivot columns of J's RREF, keeping their labels.  ``projection`` is the
    ``(dim A - dim J) x dim A`` matrix sending A-coordinates to quotient
    coordinates.
    """
    if not is_ideal(A, J):
        raise NotAnIdealError("subspace is not a two-sided ideal")
    comp = quotient_complement(Subspace.full(A.dim), J)
    reps = list(comp.pivots)
    m = len(reps)

    def project(v):
        r = J.residue(v)
        return [r[c] for c in reps]

    cols = [project(unit_vector(A.dim, j)) for j in range(A.dim)]
    proj = Matrix(zip(*cols), cols=A.dim) if m else Matrix.zeros(0, A.dim)
    gamma = {}
    for a, ia in enumerate(reps):
        for b, ib in enumerate(reps):
            terms = A.product(ia, ib)
            if terms:
                v = [ZERO] * A.dim
                for k, c in terms:
                    v[k] = c
                pv = project(v)
                gamma[(a, b)] = [(k, c) for k, c in enumerate(pv) if c]
    labels = [A.basis_labels[i] for i in reps]
    return AlgebraTable(m, labels, gamma), proj
