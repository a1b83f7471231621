"""Exact rational linear algebra.

Everything here works over ``fractions.Fraction``; there is no floating point
anywhere, so equality is always exact.  Elimination is done internally on
integer rows (denominators cleared, content divided out) because Python ints
are much cheaper than Fractions; results are converted back to Fractions.

Subspaces are stored by their reduced row echelon basis, which makes two
subspaces equal exactly when their stored bases are identical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotContainedError, SingularMatrixError

Vector = tuple  # tuple of Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or str")
    return Fraction(x)


def vector(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def format_rational(q: Fraction) -> str:
    """``"p/q"`` with the denominator omitted when it is 1."""
    return str(q)


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational string: {text!r}")
    try:
        q = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational string: {text!r}") from None
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal notation is not allowed: {text!r}")
    return q


# ---------------------------------------------------------------------------
# integer sparse echelon engine
# ---------------------------------------------------------------------------

def _integer_row(row) -> dict:
    """Sparse integer row proportional to the given rational row."""
    items = [(c, as_fraction(v)) for c, v in row if v != 0]
    if not items:
        return {}
    den = 1
    for _, v in items:
        d = v.denominator
        den = den * d // gcd(den, d)
    out = {c: v.numerator * (den // v.denominator) for c, v in items}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _combine(a: int, row: dict, b: int, other: dict) -> dict:
    """a*row - b*other, with zero entries dropped."""
    out = {c: a * v for c, v in row.items()} if a != 1 else dict(row)
    for c, v in other.items():
        w = out.get(c, 0) - b * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return out


class Echelon:
    """Incrementally maintained reduced echelon form of a row space.

    Rows are fed one at a time with :meth:`add`; the stored pivot rows are kept
    mutually reduced, so the canonical RREF can be read off at any point.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_columns(self) -> list:
        return sorted(self._pivots)

    def reduce(self, row: dict) -> dict:
        """Integer residue of ``row`` modulo the stored rows (up to scaling)."""
        row = dict(row)
        pivots = self._pivots
        for c in [c for c in row if c in pivots]:
            a = row.get(c)
            if not a:
                continue
            p = pivots[c]
            pv = p[c]
            g = gcd(pv, a)
            row = _combine(pv // g, row, a // g, p)
        return _primitive(row) if row else row

    def add(self, row) -> bool:
        """Add a sparse row (mapping or iterable of ``(col, value)``); True if rank grew."""
        if isinstance(row, dict):
            row = row.items()
        row = self.reduce(_integer_row(row))
        if not row:
            return False
        c0 = min(row)
        if row[c0] < 0:
            row = {c: -v for c, v in row.items()}
        pv = row[c0]
        for c, p in self._pivots.items():
            a = p.get(c0)
            if a:
                g = gcd(pv, a)
                self._pivots[c] = _primitive(_combine(pv // g, p, a // g, row))
                if self._pivots[c][c] < 0:
                    self._pivots[c] = {k: -v for k, v in self._pivots[c].items()}
        self._pivots[c0] = row
        return True

    def contains(self, row) -> bool:
        if isinstance(row, dict):
            row = row.items()
        return not self.reduce(_integer_row(row))

    def rref_rows(self) -> list:
        """Canonical RREF rows as dense Fraction tuples, ordered by pivot."""
        out = []
        for c in sorted(self._pivots):
            p = self._pivots[c]
            pv = p[c]
            dense = [ZERO] * self.ncols
            for k, v in p.items():
                dense[k] = Fraction(v, pv)
            out.append(tuple(dense))
        return out

    def sparse_rref_rows(self) -> list:
        out = []
        for c in sorted(self._pivots):
            p = self._pivots[c]
            pv = p[c]
            out.append({k: Fraction(v, pv) for k, v in p.items()})
        return out

    def nullspace_vectors(self) -> list:
        """Basis of ``{v : row . v = 0 for all stored rows}``; one vector per free column."""
        pivots = self._pivots
        free = [c for c in range(self.ncols) if c not in pivots]
        # column f of the RREF, read per pivot row
        by_free: dict[int, list] = {f: [] for f in free}
        for c, p in pivots.items():
            pv = p[c]
            for k, v in p.items():
                if k != c:
                    by_free[k].append((c, Fraction(v, pv)))
        out = []
        for f in free:
            vec = [ZERO] * self.ncols
            vec[f] = ONE
            for c, v in by_free[f]:
                vec[c] = -v
            out.append(tuple(vec))
        return out


def _sparse(row: Sequence) -> list:
    return [(c, v) for c, v in enumerate(row) if v != 0]


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix of Fractions (row-major)."""

    __slots__ = ("_data", "rows", "cols")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(vector(r) for r in data)
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f"row of length {len(r)} in a matrix with {cols} columns")
        self._data = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls((unit_vector(n, i) for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(((ZERO,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"expected {rows * cols} entries, got {len(entries)}")
        return cls((entries[i * cols:(i + 1) * cols] for i in range(rows)), cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls((tuple(as_fraction(values[i]) if i == j else ZERO for j in range(n))
                    for i in range(n)), cols=n)

    @property
    def entries(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"Matrix([{body}])"

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._data), cols=self.rows) if self.rows else Matrix.zeros(self.cols, 0)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        return Matrix((tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in ocols)
                       for r in self._data), cols=other.cols)

    def __neg__(self):
        return Matrix((tuple(-x for x in r) for r in self._data), cols=self.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix((tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
                      cols=self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix((tuple(c * x for x in r) for r in self._data), cols=self.cols)

    def apply(self, v: Sequence) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        nz = [(j, as_fraction(x)) for j, x in enumerate(v) if x]
        return tuple(sum((r[j] * x for j, x in nz), ZERO) for r in self._data)

    def apply_left(self, v: Sequence) -> Vector:
        """Row vector times matrix."""
        if len(v) != self.rows:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        out = [ZERO] * self.cols
        for x, r in zip(v, self._data):
            if x:
                for j, a in enumerate(r):
                    if a:
                        out[j] += x * a
        return tuple(out)

    def rank(self) -> int:
        e = Echelon(self.cols)
        for r in self._data:
            e.add(_sparse(r))
        return e.rank

    def is_square(self) -> bool:
        return self.rows == self.cols

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise SingularMatrixError(f"matrix of shape {self.shape} is not square")
        n = self.rows
        e = Echelon(2 * n)
        for i, r in enumerate(self._data):
            e.add(_sparse(r) + [(n + i, ONE)])
        rows = e.rref_rows()
        if e.rank < n or any(rows[i][i] != 1 for i in range(n)) or e.pivot_columns != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix((r[n:] for r in rows), cols=n)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form, same shape as ``m`` (zero rows at the bottom)."""
    e = Echelon(m.cols)
    for r in m:
        e.add(_sparse(r))
    rows = e.rref_rows()
    rows.extend([(ZERO,) * m.cols] * (m.rows - len(rows)))
    return Matrix(rows, cols=m.cols)


def rank(m: Matrix) -> int:
    return m.rank()


def nullspace(m: Matrix) -> "Subspace":
    e = Echelon(m.cols)
    for r in m:
        e.add(_sparse(r))
    return Subspace(m.cols, e.nullspace_vectors())


def solve(m: Matrix, b: Sequence):
    """Some ``x`` with ``m x = b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(b) != m.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {m.rows} equations")
    n = m.cols
    e = Echelon(n + 1)
    for r, bi in zip(m, b):
        e.add(_sparse(r) + ([(n, as_fraction(bi))] if bi else []))
    if n in e.pivot_columns:
        return None
    x = [ZERO] * n
    for row in e.sparse_rref_rows():
        c = min(row)
        x[c] = row.get(n, ZERO)
    return tuple(x)


# ---------------------------------------------------------------------------
# Subspace
# ---------------------------------------------------------------------------

class Subspace:
    """Subspace of Q^n held as its canonical RREF basis."""

    __slots__ = ("ambient_dim", "_rows", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        e = Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
            e.add(_sparse(v))
        self.ambient_dim = ambient_dim
        self._rows = tuple(e.rref_rows())
        self._pivots = tuple(e.pivot_columns)

    @classmethod
    def _from_echelon(cls, e: Echelon) -> "Subspace":
        s = cls.__new__(cls)
        s.ambient_dim = e.ncols
        s._rows = tuple(e.rref_rows())
        s._pivots = tuple(e.pivot_columns)
        return s

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, (unit_vector(n, i) for i in range(n)))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls(n, (unit_vector(n, i) for i in indices))

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> Matrix:
        return Matrix(self._rows, cols=self.ambient_dim)

    @property
    def vectors(self) -> tuple:
        return self._rows

    @property
    def pivots(self) -> tuple:
        return self._pivots

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        return hash((self.ambient_dim, self._rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check(self, n: int):
        if n != self.ambient_dim:
            raise DimensionMismatch(f"ambient dimension {n} does not match {self.ambient_dim}")

    def residue(self, v: Sequence) -> Vector:
        """``v`` minus its component along the pivot directions (zero iff ``v`` lies in here)."""
        self._check(len(v))
        out = list(vector(v))
        for c, r in zip(self._pivots, self._rows):
            a = out[c]
            if a:
                for j, x in enumerate(r):
                    if x:
                        out[j] -= a * x
        return tuple(out)

    def __contains__(self, v) -> bool:
        return not any(self.residue(v))

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the stored basis."""
        if v not in self:
            raise NotContainedError("vector is not in the subspace")
        return tuple(as_fraction(v[c]) for c in self._pivots)

    def is_subspace_of(self, other: "Subspace") -> bool:
        other._check(self.ambient_dim)
        return all(r in other for r in self._rows)

    def __le__(self, other):
        return self.is_subspace_of(other)

    def __add__(self, other):
        return subspace_sum(self, other)

    def __and__(self, other):
        return subspace_intersect(self, other)

    def annihilator(self) -> "Subspace":
        """``{w : w . v = 0 for every v here}`` under the standard pairing."""
        e = Echelon(self.ambient_dim)
        for r in self._rows:
            e.add(_sparse(r))
        return Subspace(self.ambient_dim, e.nullspace_vectors())


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, vectors)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    a._check(b.ambient_dim)
    return Subspace(a.ambient_dim, a.vectors + b.vectors)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    a._check(b.ambient_dim)
    return subspace_sum(a.annihilator(), b.annihilator()).annihilator()


def contains(a: Subspace, v: Sequence) -> bool:
    return v in a


def quotient_complement(whole: Subspace, part: Subspace) -> Subspace:
    """Complement of ``part`` inside ``whole``.

    Whole's basis vectors are reduced modulo part's RREF and the residues are
    row-reduced; the result has zero entries in every pivot column of ``part``.
    For ``whole`` the full space this is the span of the unit vectors at the
    non-pivot columns of ``part``.
    """
    whole._check(part.ambient_dim)
    if not part.is_subspace_of(whole):
        raise NotContainedError("part is not contained in whole")
    return Subspace(whole.ambient_dim, (part.residue(r) for r in whole.vectors))


def stack(vectors: Sequence[Sequence], cols: int) -> Matrix:
    return Matrix(vectors, cols=cols)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)
