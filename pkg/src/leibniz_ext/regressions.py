"""End-to-end cases: constructor output against the transcribed golden tables."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraTable, basis_change, table_differences, tables_equal
from .catalog import catalog_get
from .derivations import completeness_report
from .extension import build_extension, enumerate_flag_family, lie_specialize_check
from .linalg import Matrix


@dataclass(frozen=True)
class RegressionCase:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"case": self.name, "passed": self.passed, "detail": self.detail}


def _identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def l_one_change(n: int) -> Matrix:
    """``e_{n+1}' = x1``, ``e_{n+2}' = x1 + x2`` on the basis ``e1..en, x1, x2``."""
    rows = _identity_rows(n + 2)
    rows[n + 1][n] = 1
    return Matrix(rows)


def negate_last(n: int) -> Matrix:
    """``x' = -x`` for the last basis vector of an n-dim table."""
    return Matrix.diagonal([1] * (n - 1) + [-1])


def heisenberg_change() -> Matrix:
    """``x1 = e4``, ``x2 = e4 + e5`` on g_{5,36}, other vectors fixed."""
    rows = _identity_rows(5)
    rows[4][3] = 1
    return Matrix(rows)


def _compare(name: str, got: AlgebraTable, want: AlgebraTable) -> RegressionCase:
    if tables_equal(got, want):
        return RegressionCase(name, True)
    return RegressionCase(name, False, "; ".join(table_differences(got, want, limit=3)))


def _completeness(name: str, R: AlgebraTable) -> RegressionCase:
    rep = completeness_report(R)
    ok = rep.center_dim == 0 and rep.i_equals_annr and rep.der_dim == rep.inner_dim == rep.dim - rep.ann_r_dim
    detail = (f"center {rep.center_dim}, der {rep.der_dim}, inner {rep.inner_dim}, "
              f"I = Ann_r {rep.i_equals_annr}, modulo-squares complete {rep.ernie_complete}")
    return RegressionCase(f"{name}: trivial center, I = Ann_r, all derivations inner", ok, detail)


def extension_cases():
    """``(case name, constructed table, golden table)`` for every golden comparison."""
    out = []
    for n in (4, 5, 6):
        R = build_extension(catalog_get("L1", n=n).presentation).table
        out.append((f"L1 n={n}: extension in adapted basis", R, catalog_get("RL1", n=n).table))
        out.append((f"L1 n={n}: extension after x-change is q_{{{n + 2},1}}",
                    basis_change(R, l_one_change(n)), catalog_get("q", n=n).table))
    for n in (5, 6):
        P = catalog_get("F2", n=n).presentation
        out.append((f"F2 n={n}: flag 0 gives R1", build_extension(P, {"e2": 0}).table,
                    catalog_get("R1", n=n).table))
        out.append((f"F2 n={n}: flag 1 gives R2", build_extension(P, {"e2": 1}).table,
                    catalog_get("R2", n=n).table))
    fam = enumerate_flag_family(catalog_get("abelian", n=2).presentation)
    for res, name in zip(fam, ("R4_2", "R4_3", "R4_1")):
        out.append((f"abelian 2-dim: flags {tuple(res.b_flags.values())} give {name}",
                    res.table, catalog_get(name).table))
    out.append(("N3: extension with the flag on e2 forced to 1",
                build_extension(catalog_get("N3").presentation).table, catalog_get("N3ext").table))
    for n in range(4, 9):
        R = build_extension(catalog_get("NF", n=n).presentation).table
        out.append((f"NF n={n}: extension after x' = -x", basis_change(R, negate_last(R.dim)),
                    catalog_get("NFext", n=n).table))
    out.append(("mu3 n=7 k=1: maximal extension",
                build_extension(catalog_get("mu3", n=7, k=1).presentation).table,
                catalog_get("mu3ext", n=7, k=1).table))
    out.append(("H1: solvable Lie extension",
                build_extension(catalog_get("H1").presentation).table, catalog_get("H1ext").table))
    out.append(("g5_36 after x1 = e4, x2 = e4 + e5 is the H1 extension",
                basis_change(catalog_get("g5_36").table, heisenberg_change()),
                catalog_get("H1ext").table))
    return out


def constructed_extensions():
    """``(name, table)`` of every extension the regression cases build, in its own basis."""
    out = []
    for n in (4, 5, 6):
        out.append((f"L1 n={n}", build_extension(catalog_get("L1", n=n).presentation).table))
    for n in (5, 6):
        P = catalog_get("F2", n=n).presentation
        for b in (0, 1):
            out.append((f"F2 n={n} flag {b}", build_extension(P, {"e2": b}).table))
    for res in enumerate_flag_family(catalog_get("abelian", n=2).presentation):
        out.append((f"abelian 2-dim flags {tuple(res.b_flags.values())}", res.table))
    out.append(("N3", build_extension(catalog_get("N3").presentation).table))
    for n in range(4, 9):
        out.append((f"NF n={n}", build_extension(catalog_get("NF", n=n).presentation).table))
    out.append(("mu3 n=7 k=1", build_extension(catalog_get("mu3", n=7, k=1).presentation).table))
    out.append(("H1", build_extension(catalog_get("H1").presentation).table))
    return out


def run_regressions() -> list:
    cases = [_compare(name, got, want) for name, got, want in extension_cases()]
    cases += [_completeness(name, R) for name, R in constructed_extensions()]
    h1 = build_extension(catalog_get("H1").presentation)
    cases.append(RegressionCase("H1: extension is antisymmetric", lie_specialize_check(h1)))
    return cases
