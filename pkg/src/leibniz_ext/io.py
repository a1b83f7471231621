"""JSON file formats for tables, matrices and word presentations.

Coefficients are always strings ``"p/q"`` (``"p"`` when the denominator is 1).
Parsing errors carry the JSON path of the offending value.
"""

from __future__ import annotations

import json
import sys
from typing import Any

from .algebra import AlgebraTable, default_labels
from .errors import FormatError
from .extension import WordPresentation
from .linalg import Matrix, format_rational, parse_rational


def _coef(value, where):
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise FormatError(str(exc), where) from None


def _require(obj, key, where, kind=None):
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object", where)
    if key not in obj:
        raise FormatError(f"missing field {key!r}", where)
    value = obj[key]
    if kind is not None and (not isinstance(value, kind) or isinstance(value, bool)):
        raise FormatError(f"field {key!r} has the wrong type", f"{where}.{key}" if where else key)
    return value


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from None


def read_json(path: str) -> Any:
    if path == "-":
        return loads(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(exc.strerror or str(exc), path) from None
    return loads(text, path)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- algebra ---------------------------------------------------------------

def algebra_to_dict(A: AlgebraTable) -> dict:
    lab = A.basis_labels
    products = []
    for (i, j), terms in A.gamma.items():
        products.append({
            "left": lab[i],
            "right": lab[j],
            "result": [[format_rational(c), lab[k]] for k, c in terms],
        })
    return {"dim": A.dim, "basis": list(lab), "products": products}


def algebra_from_dict(obj, where: str = "") -> AlgebraTable:
    dim = _require(obj, "dim", where, int)
    if dim < 0:
        raise FormatError("dimension must be nonnegative", f"{where}.dim" if where else "dim")
    prefix = f"{where}." if where else ""
    if "basis" in obj:
        basis = obj["basis"]
        if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
            raise FormatError("basis must be a list of strings", prefix + "basis")
        if len(basis) != dim:
            raise FormatError(f"{len(basis)} basis labels for dimension {dim}", prefix + "basis")
        if len(set(basis)) != dim:
            raise FormatError("basis labels must be distinct", prefix + "basis")
    else:
        basis = list(default_labels(dim))
    index = {b: i for i, b in enumerate(basis)}
    products = obj.get("products", [])
    if not isinstance(products, list):
        raise FormatError("products must be a list", prefix + "products")
    gamma: dict = {}
    for p, entry in enumerate(products):
        here = f"{prefix}products[{p}]"
        left = _require(entry, "left", here, str)
        right = _require(entry, "right", here, str)
        for side, name in (("left", left), ("right", right)):
            if name not in index:
                raise FormatError(f"unknown basis label {name!r}", f"{here}.{side}")
        key = (index[left], index[right])
        if key in gamma:
            raise FormatError(f"product [{left}, {right}] listed twice", here)
        result = _require(entry, "result", here, list)
        terms = {}
        for r, term in enumerate(result):
            spot = f"{here}.result[{r}]"
            if not isinstance(term, list) or len(term) != 2:
                raise FormatError('expected a ["coefficient", "label"] pair', spot)
            coef, label = term
            if not isinstance(label, str) or label not in index:
                raise FormatError(f"unknown basis label {label!r}", spot)
            k = index[label]
            terms[k] = terms.get(k, 0) + _coef(coef, spot)
        gamma[key] = list(terms.items())
    return AlgebraTable(dim, basis, gamma)


def load_algebra(path: str) -> AlgebraTable:
    return algebra_from_dict(read_json(path))


def dumps_algebra(A: AlgebraTable) -> str:
    return dumps(algebra_to_dict(A))


# -- matrices --------------------------------------------------------------

def matrix_to_dict(M: Matrix) -> dict:
    return {"rows": M.rows, "cols": M.cols,
            "entries": [[format_rational(c) for c in row] for row in M.tolist()]}


def matrix_from_dict(obj, where: str = "") -> Matrix:
    rows = _require(obj, "rows", where, int)
    cols = _require(obj, "cols", where, int)
    entries = _require(obj, "entries", where, list)
    prefix = f"{where}." if where else ""
    if len(entries) != rows:
        raise FormatError(f"{len(entries)} rows listed, header says {rows}", prefix + "entries")
    data = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"row must have {cols} entries", f"{prefix}entries[{i}]")
        data.append([_coef(c, f"{prefix}entries[{i}][{j}]") for j, c in enumerate(row)])
    return Matrix(data, cols=cols)


def load_matrix(path: str) -> Matrix:
    return matrix_from_dict(read_json(path))


# -- presentations ---------------------------------------------------------

def presentation_to_dict(P: WordPresentation) -> dict:
    return {
        "algebra": algebra_to_dict(P.algebra),
        "generators": list(P.generator_labels),
        "words": {lab: list(w) for lab, w in P.words.items()},
        "abelian_flags": dict(P.abelian_flags),
    }


def presentation_from_dict(obj) -> WordPresentation:
    A = algebra_from_dict(_require(obj, "algebra", "", dict), "algebra")
    gens = _require(obj, "generators", "", list)
    if not all(isinstance(g, str) for g in gens):
        raise FormatError("generators must be strings", "generators")
    words = obj.get("words", {})
    if not isinstance(words, dict):
        raise FormatError("words must be an object", "words")
    for lab, w in words.items():
        if not isinstance(w, list) or not all(isinstance(x, str) for x in w):
            raise FormatError("a word is a list of generator labels", f"words.{lab}")
    flags = obj.get("abelian_flags", {})
    if not isinstance(flags, dict):
        raise FormatError("abelian_flags must be an object", "abelian_flags")
    for lab, b in flags.items():
        if isinstance(b, bool) or not isinstance(b, int):
            raise FormatError("flag must be the integer 0 or 1", f"abelian_flags.{lab}")
    return WordPresentation(A, tuple(gens), {k: tuple(v) for k, v in words.items()}, flags)


def load_presentation(path: str) -> WordPresentation:
    return presentation_from_dict(read_json(path))
