"""Structured analysis of a table, serialized for the command line."""

from __future__ import annotations

from .algebra import AlgebraTable, check_leibniz, is_antisymmetric
from .derivations import completeness_report
from .errors import BasisNotAdaptedError
from .structure import (
    center,
    generator_data,
    left_annihilator,
    right_annihilator,
    series_profile,
    squares_ideal,
)


def identity_summary(A: AlgebraTable, limit: int = 10) -> dict:
    violations = check_leibniz(A)
    return {
        "leibniz": not violations,
        "lie": (not violations) and is_antisymmetric(A),
        "violation_count": len(violations),
        "violations": [
            {"triple": [A.basis_labels[v.i], A.basis_labels[v.j], A.basis_labels[v.k]],
             "defect": A.format_element(v.defect)}
            for v in violations[:limit]
        ],
    }


def build_report(A: AlgebraTable, extension: dict | None = None) -> dict:
    """Series, annihilators, generator data and completeness, in a fixed key order.

    Only the identity summary is computed for tables that are not Leibniz.
    """
    report = {"dim": A.dim, "basis": list(A.basis_labels), "identity": identity_summary(A)}
    if not report["identity"]["leibniz"]:
        return report
    profile = series_profile(A)
    report["series"] = profile.to_dict()
    report["annihilators"] = {
        "right_annihilator_dim": right_annihilator(A).dim,
        "left_annihilator_dim": left_annihilator(A).dim,
        "center_dim": center(A).dim,
        "squares_ideal_dim": squares_ideal(A).dim,
    }
    if profile.nilpotent:
        try:
            report["generators"] = generator_data(A).to_dict(A)
        except BasisNotAdaptedError as exc:
            report["generators"] = {"error": str(exc)}
    else:
        report["generators"] = None
    report["completeness"] = completeness_report(A).to_dict()
    if extension is not None:
        report["extension"] = extension
    return report
