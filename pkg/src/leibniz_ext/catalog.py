"""Built-in algebra families, with word presentations where one exists.

Every builder returns a :class:`CatalogInstance`.  Parameters are integers
or rationals; unknown names, missing values and out-of-domain values raise
:class:`ParameterError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import AlgebraTable, default_labels
from .errors import CatalogError, ParameterError
from .extension import WordPresentation
from .linalg import as_fraction, parse_rational


@dataclass(frozen=True)
class CatalogInstance:
    name: str
    params: Mapping
    table: AlgebraTable
    presentation: WordPresentation | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    defaults: Mapping
    builder: Callable
    open_params: str | None = None  # prefix pattern accepted beyond the defaults
    has_presentation: bool = False


def _table(labels, entries) -> AlgebraTable:
    """Table from ``(left, right, result, coeff)`` quadruples; repeated keys add up."""
    prod: dict = {}
    for a, b, r, c in entries:
        slot = prod.setdefault((a, b), {})
        slot[r] = slot.get(r, 0) + as_fraction(c)
    return AlgebraTable.from_products(labels, prod)


def _anti(a, b, r, c):
    """``[a, b] = c r`` together with ``[b, a] = -c r``."""
    return [(a, b, r, c), (b, a, r, -as_fraction(c))]


def _int(params, key, low=None):
    v = params[key]
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise ParameterError(f"{key} must be an integer, got {v}")
        v = int(v)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParameterError(f"{key} must be an integer, got {v!r}")
    if low is not None and v < low:
        raise ParameterError(f"{key} must be at least {low}, got {v}")
    return v


def _flag(params, key):
    v = _int(params, key)
    if v not in (0, 1):
        raise ParameterError(f"{key} must be 0 or 1, got {v}")
    return v


def _nk(params, low_k=1):
    n = _int(params, "n")
    k = _int(params, "k", low_k)
    if n - 2 * k < 4:
        raise ParameterError(f"need n - 2k >= 4, got n={n}, k={k}")
    return n, k


def _pf_labels(n, k, extra=()):
    m = n - 2 * k
    return tuple(f"e{i}" for i in range(1, m + 1)) + tuple(
        f"f{i}" for i in range(1, 2 * k + 1)) + tuple(extra)


# ---------------------------------------------------------------------------
# nilpotent algebras
# ---------------------------------------------------------------------------

def null_filiform(params):
    n = _int(params, "n", 1)
    labels = default_labels(n)
    T = _table(labels, [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(1, n)])
    words = {f"e{i}": ("e1",) * i for i in range(2, n + 1)}
    return T, WordPresentation(T, ("e1",), words)


def split_filiform(params):
    n = _int(params, "n", 3)
    labels = default_labels(n)
    entries = [("e1", "e1", "e3", 1)]
    entries += [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(3, n)]
    T = _table(labels, entries)
    words = {f"e{i}": ("e1",) * (i - 1) for i in range(3, n + 1)}
    return T, WordPresentation(T, ("e1", "e2"), words)


def l_one(params):
    n = _int(params, "n", 4)
    labels = default_labels(n)
    entries = [("e1", "e1", "e2", 1)]
    for i in range(3, n):
        entries += [(f"e{i}", "e1", f"e{i + 1}", 1), ("e1", f"e{i}", f"e{i + 1}", -1)]
    T = _table(labels, entries)
    words = {"e2": ("e1", "e1")}
    words.update({f"e{i}": ("e3",) + ("e1",) * (i - 3) for i in range(4, n + 1)})
    return T, WordPresentation(T, ("e1", "e3"), words)


def heisenberg(params):
    labels = ("e1", "e2", "e3")
    T = _table(labels, _anti("e2", "e3", "e1", 1))
    return T, WordPresentation(T, ("e2", "e3"), {"e1": ("e2", "e3")})


def abelian(params):
    n = _int(params, "n", 0)
    labels = default_labels(n)
    T = AlgebraTable.abelian(n, labels)
    return T, WordPresentation(T, labels, {})


def three_dim(params):
    labels = ("e1", "e2", "e3")
    T = _table(labels, [("e2", "e1", "e3", 1)])
    return T, WordPresentation(T, ("e1", "e2"), {"e3": ("e2", "e1")})


def mu1(params):
    n, k = _nk(params)
    m = n - 2 * k
    entries = [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(1, m)]
    entries += [("e1", f"f{j}", f"f{k + j}", 1) for j in range(1, k + 1)]
    T = _table(_pf_labels(n, k), entries)
    words = {f"e{i}": ("e1",) * i for i in range(2, m + 1)}
    words.update({f"f{k + j}": ("e1", f"f{j}") for j in range(1, k + 1)})
    gens = ("e1",) + tuple(f"f{j}" for j in range(1, k + 1))
    return T, WordPresentation(T, gens, words)


def mu2(params):
    n, k = _nk(params)
    m = n - 2 * k
    entries = [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(1, m)]
    entries += [("e1", "f1", "e2", 1), ("e1", "f1", f"f{k + 1}", 1)]
    entries += [(f"e{i}", "f1", f"e{i + 1}", 1) for i in range(2, m)]
    entries += [("e1", f"f{j}", f"f{k + j}", 1) for j in range(2, k + 1)]
    return _table(_pf_labels(n, k), entries), None


def mu3(params):
    n, k = _nk(params)
    m = n - 2 * k
    entries = [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(2, m)]
    entries += [("e2", f"f{i}", f"f{k + i}", 1) for i in range(1, k + 1)]
    T = _table(_pf_labels(n, k), entries)
    words = {f"e{j}": ("e2",) + ("e1",) * (j - 2) for j in range(3, m + 1)}
    words.update({f"f{k + i}": ("e2", f"f{i}") for i in range(1, k + 1)})
    gens = ("e1", "e2") + tuple(f"f{i}" for i in range(1, k + 1))
    return T, WordPresentation(T, gens, words)


# ---------------------------------------------------------------------------
# solvable algebras (golden tables)
# ---------------------------------------------------------------------------

def heisenberg_ext(params):
    labels = ("e1", "e2", "e3", "x1", "x2")
    entries = (_anti("e2", "e3", "e1", 1) + _anti("e2", "x1", "e2", 1) + _anti("e1", "x1", "e1", 1)
               + _anti("e3", "x2", "e3", 1) + _anti("e1", "x2", "e1", 1))
    return _table(labels, entries), None


def g5_36(params):
    labels = default_labels(5)
    entries = (_anti("e2", "e3", "e1", 1) + _anti("e1", "e4", "e1", 1) + _anti("e2", "e4", "e2", 1)
               + _anti("e2", "e5", "e2", -1) + _anti("e3", "e5", "e3", 1))
    return _table(labels, entries), None


def g5_37(params):
    labels = default_labels(5)
    entries = (_anti("e2", "e3", "e1", 1) + _anti("e1", "e4", "e1", 2) + _anti("e2", "e4", "e2", 1)
               + _anti("e3", "e4", "e3", 1) + _anti("e2", "e5", "e3", -1) + _anti("e3", "e5", "e2", 1))
    return _table(labels, entries), None


def q_algebra(params):
    """Codimension-two extension of L^1 on ``e1..e_{n+2}``.

    The printed ``[e_{n+1}, e2] = [e_{n+2}, e2] = -2 e2`` contradicts the
    Leibniz identity (e2 = [e1, e1] is in the right annihilator); the factor
    belongs on the other side, ``[e2, e_{n+1}] = [e2, e_{n+2}] = 2 e2``.
    """
    n = _int(params, "n", 4)
    labels = default_labels(n + 2)
    a, b = f"e{n + 1}", f"e{n + 2}"
    entries = [("e1", "e1", "e2", 1)]
    for i in range(3, n):
        entries += [(f"e{i}", "e1", f"e{i + 1}", 1), ("e1", f"e{i}", f"e{i + 1}", -1)]
    entries += [("e1", a, "e1", 1), (a, "e1", "e1", -1), ("e2", a, "e2", 2)]
    entries += [("e1", b, "e1", 1), (b, "e1", "e1", -1), ("e2", b, "e2", 2)]
    for i in range(3, n + 1):
        entries += [(f"e{i}", a, f"e{i}", i - 3), (a, f"e{i}", f"e{i}", 3 - i)]
        entries += [(f"e{i}", b, f"e{i}", i - 2), (b, f"e{i}", f"e{i}", 2 - i)]
    return _table(labels, entries), None


def r_l_one(params):
    """The extension of L^1 in the generator-adapted basis ``e1..en, x1, x2``."""
    n = _int(params, "n", 4)
    labels = default_labels(n) + ("x1", "x2")
    entries = [("e1", "e1", "e2", 1)]
    for i in range(3, n):
        entries += [(f"e{i}", "e1", f"e{i + 1}", 1), ("e1", f"e{i}", f"e{i + 1}", -1)]
    entries += _anti("e1", "x1", "e1", 1) + [("e2", "x1", "e2", 2)] + _anti("e3", "x2", "e3", 1)
    for i in range(4, n + 1):
        entries += _anti(f"e{i}", "x1", f"e{i}", i - 3) + _anti(f"e{i}", "x2", f"e{i}", 1)
    return _table(labels, entries), None


def _r_split(n, b2):
    labels = default_labels(n) + ("x", "y")
    entries = [("e1", "e1", "e3", 1)]
    entries += [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(3, n)]
    entries += [("e1", "x", "e1", 1), ("x", "e1", "e1", -1), ("e2", "y", "e2", 1)]
    if b2 == 0:
        entries.append(("y", "e2", "e2", -1))
    entries += [(f"e{i}", "x", f"e{i}", i - 1) for i in range(3, n + 1)]
    return _table(labels, entries)


def r_split_one(params):
    return _r_split(_int(params, "n", 3), 0), None


def r_split_two(params):
    return _r_split(_int(params, "n", 3), 1), None


def _r4(b1, b2):
    labels = ("e1", "e2", "x", "y")
    entries = [("e1", "x", "e1", 1), ("e2", "y", "e2", 1)]
    if b1 == 0:
        entries.append(("x", "e1", "e1", -1))
    if b2 == 0:
        entries.append(("y", "e2", "e2", -1))
    return _table(labels, entries)


def r4_one(params):
    return _r4(1, 1), None


def r4_two(params):
    return _r4(0, 0), None


def r4_three(params):
    return _r4(1, 0), None


def r_abelian(params):
    """Extension of the p-dim abelian algebra with flags ``b1..bp``."""
    p = _int(params, "p", 0)
    labels = default_labels(p) + tuple(f"y{i}" for i in range(1, p + 1))
    entries = []
    for i in range(1, p + 1):
        key = f"b{i}"
        b = _flag(params, key) if key in params else 1
        entries.append((f"e{i}", f"y{i}", f"e{i}", 1))
        if b == 0:
            entries.append((f"y{i}", f"e{i}", f"e{i}", -1))
    return _table(labels, entries), None


def null_filiform_ext(params):
    """``[e_i, e1] = e_{i+1}``, ``[x, e1] = e1``, ``[e_i, x] = -i e_i``."""
    n = _int(params, "n", 1)
    labels = default_labels(n) + ("x",)
    entries = [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(1, n)]
    entries += [("x", "e1", "e1", 1)]
    entries += [(f"e{i}", "x", f"e{i}", -i) for i in range(1, n + 1)]
    return _table(labels, entries), None


def three_dim_ext(params):
    labels = ("e1", "e2", "e3", "x1", "x2")
    entries = [("e2", "e1", "e3", 1)] + _anti("e1", "x1", "e1", 1)
    entries += [("e2", "x2", "e2", 1), ("e3", "x1", "e3", 1), ("e3", "x2", "e3", 1)]
    return _table(labels, entries), None


def mu3_ext(params):
    n, k = _nk(params)
    m = n - 2 * k
    labels = _pf_labels(n, k, ("y1", "y2") + tuple(f"x{i}" for i in range(1, k + 1)))
    entries = [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(2, m)]
    entries += [("e2", f"f{i}", f"f{k + i}", 1) for i in range(1, k + 1)]
    entries += [("e1", "y1", "e1", 1), ("y1", "e1", "e1", -1)]
    entries += [(f"e{j}", "y1", f"e{j}", j - 2) for j in range(3, m + 1)]
    entries += [(f"e{j}", "y2", f"e{j}", 1) for j in range(2, m + 1)]
    for i in range(1, k + 1):
        entries += [(f"f{k + i}", "y2", f"f{k + i}", 1), (f"f{i}", f"x{i}", f"f{i}", 1),
                    (f"f{k + i}", f"x{i}", f"f{k + i}", 1), (f"x{i}", f"f{i}", f"f{i}", -1)]
    return _table(labels, entries), None


def r_mu1(params):
    """Codimension-k family over mu1 with parameters ``a{s}_{j}``, ``phi{i}_{j}``, ``delta{i}_{j}``.

    ``[e_i, x_j] = sum_{t=i+1}^{n-2k} a{t-i+1}_{j} e_t``; absent parameters are 0.
    """
    n, k = _nk(params)
    m = n - 2 * k
    xs = tuple(f"x{i}" for i in range(1, k + 1))
    labels = _pf_labels(n, k, xs)

    def par(key):
        return as_fraction(params.get(key, 0))

    allowed = {f"a{s}_{j}" for s in range(2, m + 1) for j in range(1, k + 1)}
    allowed |= {f"phi{i}_{j}" for i in range(1, k + 1) for j in range(1, k + 1) if i != j}
    allowed |= {f"delta{i}_{j}" for i in range(1, k + 1) for j in range(1, k + 1)}
    extra = set(params) - allowed - {"n", "k"}
    if extra:
        raise ParameterError(f"unknown parameter(s) for Rmu1: {', '.join(sorted(extra))}")
    entries = [(f"e{i}", "e1", f"e{i + 1}", 1) for i in range(1, m)]
    entries += [("e1", f"f{j}", f"f{k + j}", 1) for j in range(1, k + 1)]
    for j in range(1, k + 1):
        for i in range(1, m + 1):
            for t in range(i + 1, m + 1):
                c = par(f"a{t - i + 1}_{j}")
                if c:
                    entries.append((f"e{i}", f"x{j}", f"e{t}", c))
    for i in range(1, k + 1):
        entries += [(f"f{i}", f"x{i}", f"f{i}", 1), (f"f{k + i}", f"x{i}", f"f{k + i}", 1),
                    (f"x{i}", f"f{i}", f"f{i}", -1)]
        for j in range(1, k + 1):
            if i != j and par(f"phi{i}_{j}"):
                entries.append((f"x{i}", f"f{j}", f"f{k + j}", par(f"phi{i}_{j}")))
            if par(f"delta{i}_{j}"):
                entries.append((f"x{i}", f"x{j}", f"e{m}", par(f"delta{i}_{j}")))
    return _table(labels, entries), None


_ENTRIES = [
    CatalogEntry("NF", "null-filiform [e_i, e1] = e_{i+1}", {"n": 4}, null_filiform, has_presentation=True),
    CatalogEntry("F2", "split filiform [e1, e1] = e3, [e_i, e1] = e_{i+1} (i >= 3)", {"n": 5},
                 split_filiform, has_presentation=True),
    CatalogEntry("L1", "[e1, e1] = e2, [e_i, e1] = -[e1, e_i] = e_{i+1} (i >= 3)", {"n": 4},
                 l_one, has_presentation=True),
    CatalogEntry("H1", "3-dim Heisenberg Lie algebra [e2, e3] = e1", {}, heisenberg, has_presentation=True),
    CatalogEntry("abelian", "n-dim abelian", {"n": 2}, abelian, has_presentation=True),
    CatalogEntry("N3", "3-dim [e2, e1] = e3", {}, three_dim, has_presentation=True),
    CatalogEntry("mu1", "naturally graded p-filiform, p = 2k", {"n": 6, "k": 1}, mu1, has_presentation=True),
    CatalogEntry("mu2", "naturally graded p-filiform, p = 2k, second family", {"n": 6, "k": 1}, mu2),
    CatalogEntry("mu3", "naturally graded p-filiform on e1..e_{n-2k}, f1..f_{2k}", {"n": 6, "k": 1},
                 mu3, has_presentation=True),
    CatalogEntry("H1ext", "5-dim solvable Lie extension of H1", {}, heisenberg_ext),
    CatalogEntry("g5_36", "real solvable Lie algebra g_{5,36}", {}, g5_36),
    CatalogEntry("g5_37", "real solvable Lie algebra g_{5,37}", {}, g5_37),
    CatalogEntry("q", "codimension-two extension q_{n+2,1} of L1", {"n": 4}, q_algebra),
    CatalogEntry("RL1", "extension of L1 in the basis e1..en, x1, x2", {"n": 4}, r_l_one),
    CatalogEntry("R1", "extension of F2 with [y, e2] = -e2", {"n": 5}, r_split_one),
    CatalogEntry("R2", "extension of F2 with [y, e2] = 0", {"n": 5}, r_split_two),
    CatalogEntry("R4_1", "abelian 2-dim extension, flags (1, 1)", {}, r4_one),
    CatalogEntry("R4_2", "abelian 2-dim extension, flags (0, 0)", {}, r4_two),
    CatalogEntry("R4_3", "abelian 2-dim extension, flags (1, 0)", {}, r4_three),
    CatalogEntry("Rabelian", "extension of the p-dim abelian algebra with flags b1..bp", {"p": 2},
                 r_abelian, open_params="b"),
    CatalogEntry("NFext", "extension of NF: [x, e1] = e1, [e_i, x] = -i e_i", {"n": 4}, null_filiform_ext),
    CatalogEntry("N3ext", "5-dim extension of N3 with the flag on e2 forced to 1", {}, three_dim_ext),
    CatalogEntry("mu3ext", "maximal extension of mu3 on ..., y1, y2, x1..xk", {"n": 7, "k": 1}, mu3_ext),
    CatalogEntry("Rmu1", "codimension-k family over mu1 (parameters a, phi, delta)", {"n": 6, "k": 1},
                 r_mu1, open_params="a|phi|delta"),
]

CATALOG = {e.name: e for e in _ENTRIES}


def catalog_list() -> list:
    return list(_ENTRIES)


def _coerce(value):
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        raise ParameterError("boolean parameter values are not allowed")
    return value


def catalog_get(name: str, params: Mapping | None = None, **kwargs) -> CatalogInstance:
    """Instantiate a catalog entry; string values are parsed as rationals."""
    try:
        entry = CATALOG[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None
    given = dict(params or {})
    given.update(kwargs)
    full = dict(entry.defaults)
    for key, value in given.items():
        if key not in entry.defaults:
            prefixes = entry.open_params.split("|") if entry.open_params else []
            if not any(key.startswith(p) for p in prefixes):
                raise ParameterError(f"unknown parameter {key!r} for {name}")
        try:
            full[key] = _coerce(value)
        except ValueError as exc:
            raise ParameterError(f"parameter {key}: {exc}") from None
    table, pres = entry.builder(full)
    return CatalogInstance(name, full, table, pres)
