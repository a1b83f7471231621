"""Bounded backtracking search for a diagonal basis change between two tables."""

from __future__ import annotations

from fractions import Fraction

from leibniz_ext import Matrix


def power_candidates(base: int = 2, span: int = 4) -> list:
    """``+-base^e`` for ``-span <= e <= span``."""
    out = []
    for e in range(-span, span + 1):
        v = Fraction(base) ** e
        out += [v, -v]
    return out


def diagonal_search(A, B, candidates) -> Matrix | None:
    """First ``diag(d)`` with ``b_i' = d_i b_i`` carrying A onto B, or None.

    Requires ``d_i d_j gamma_A(i,j,k) = d_k gamma_B(i,j,k)`` for all i, j, k;
    each constraint is checked as soon as its three entries are assigned.
    """
    n = A.dim
    if B.dim != n:
        return None
    keys = set(A.gamma) | set(B.gamma)
    constraints = []
    for i, j in keys:
        ga = dict(A.gamma.get((i, j), ()))
        gb = dict(B.gamma.get((i, j), ()))
        for k in set(ga) | set(gb):
            constraints.append((i, j, k, ga.get(k, 0), gb.get(k, 0)))
    due = {t: [] for t in range(n)}
    for c in constraints:
        due[max(c[:3])].append(c)
    d = [None] * n

    def ok(t):
        for i, j, k, a, b in due[t]:
            if d[i] * d[j] * a != d[k] * b:
                return False
        return True

    def extend(t):
        if t == n:
            return True
        for v in candidates:
            d[t] = v
            if ok(t) and extend(t + 1):
                return True
        d[t] = None
        return False

    return Matrix.diagonal(d) if extend(0) else None
