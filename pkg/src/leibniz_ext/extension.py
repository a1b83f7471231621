"""Maximal solvable extensions R = N + Q with dim Q = dim N/N^2.

The nilpotent algebra N comes with a word presentation: a set of generator
basis vectors and, for every other basis vector, a word in the generators
whose left-nested bracket ``((g1 g2) g3) ...`` evaluates to exactly that
basis vector.  From the presentation the extension is determined:

* every generator ``g`` gets its own ``q_g`` with ``[e_g, q_g] = e_g`` and
  ``[q_g, e_g] = (b_g - 1) e_g``;
* a non-generator ``e_i`` satisfies ``[e_i, q_g] = alpha[i][g] e_i`` where
  ``alpha[i][g]`` counts the letter ``g`` in the word of ``e_i``;
* ``[q_g, e_i]`` is obtained by expanding the word with the Leibniz identity;
* ``[q, q'] = 0``.

The flag ``b_g`` is forced on generators of non-abelian components (0 off
``Ann_r(N)``, 1 on it) and free on one-dimensional abelian summands.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import (
    AlgebraTable,
    basis_change,
    bracket,
    check_leibniz,
    is_antisymmetric,
    tables_equal,
)
from .errors import (
    BasisNotAdaptedError,
    ComponentError,
    DimensionMismatch,
    ExtensionError,
    PresentationError,
)
from .linalg import ZERO, Matrix, Subspace
from .structure import generator_data, is_nilpotent, right_annihilator


@dataclass(frozen=True)
class WordPresentation:
    algebra: AlgebraTable
    generator_labels: tuple
    words: Mapping  # non-generator label -> tuple of generator labels
    abelian_flags: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "generator_labels", tuple(self.generator_labels))
        object.__setattr__(self, "words", {k: tuple(v) for k, v in self.words.items()})
        object.__setattr__(self, "abelian_flags", dict(self.abelian_flags))

    def with_flags(self, flags: Mapping) -> "WordPresentation":
        merged = dict(self.abelian_flags)
        merged.update(flags)
        return WordPresentation(self.algebra, self.generator_labels, self.words, merged)


@dataclass(frozen=True)
class AlphaMatrix:
    """Letter counts: ``rows[i][j]`` = occurrences of generator j in the word of basis vector i."""
    generator_labels: tuple
    basis_labels: tuple
    rows: tuple

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def row(self, label) -> tuple:
        return self.rows[self.basis_labels.index(label)]

    def to_dict(self) -> dict:
        return {lab: dict(zip(self.generator_labels, row))
                for lab, row in zip(self.basis_labels, self.rows)}


@dataclass(frozen=True)
class Components:
    """Partition of N's basis into non-abelian blocks and 1-dim abelian summands."""
    nonabelian: tuple  # tuple of sorted index tuples
    abelian: tuple     # indices of 1-dim abelian summands

    def component_of(self, i: int) -> int | None:
        for t, block in enumerate(self.nonabelian):
            if i in block:
                return t
        return None

    def to_dict(self, A: AlgebraTable | None = None) -> dict:
        name = (lambda i: A.basis_labels[i]) if A is not None else (lambda i: i)
        return {
            "nonabelian": [[name(i) for i in block] for block in self.nonabelian],
            "abelian": [name(i) for i in self.abelian],
        }


@dataclass(frozen=True)
class ExtensionResult:
    table: AlgebraTable
    nilradical_dim: int
    alpha: AlphaMatrix
    beta: Mapping  # (generator position j, basis index i) -> ((t, coeff), ...)
    b_flags: Mapping  # generator label -> b actually used
    components: Components
    q_labels: tuple  # Q-label per generator, in presentation order
    warnings: tuple = ()

    @property
    def nilradical(self) -> Subspace:
        return Subspace.coordinate(self.table.dim, range(self.nilradical_dim))

    def q_index(self, generator_label) -> int:
        return self.table.index(self.q_labels[self.alpha.generator_labels.index(generator_label)])

    def to_dict(self) -> dict:
        N = self.table.basis_labels[:self.nilradical_dim]
        gens = self.alpha.generator_labels
        beta = {}
        for (j, i), terms in sorted(self.beta.items()):
            if terms:
                beta.setdefault(self.q_labels[j], {})[N[i]] = [[str(c), N[t]] for t, c in terms]
        return {
            "dim": self.table.dim,
            "nilradical_dim": self.nilradical_dim,
            "q_labels": dict(zip(gens, self.q_labels)),
            "b_flags": {g: self.b_flags[g] for g in gens},
            "components": self.components.to_dict(self.table),
            "alpha": self.alpha.to_dict(),
            "beta": beta,
            "warnings": list(self.warnings),
        }


# ---------------------------------------------------------------------------
# presentation checks
# ---------------------------------------------------------------------------

def evaluate_word(N: AlgebraTable, word: Sequence) -> tuple:
    """Left-nested bracket of the letters of ``word`` (labels or indices)."""
    if not word:
        raise ValueError("empty word")
    v = N.unit(word[0])
    for letter in word[1:]:
        v = bracket(N, v, N.unit(letter))
    return v


def validate_presentation(P: WordPresentation) -> list:
    """Every problem with the presentation, as readable strings (empty when valid)."""
    N = P.algebra
    defects = []
    violations = check_leibniz(N)
    if violations:
        return [f"algebra violates the Leibniz identity: {violations[0].describe(N)}"]
    if not is_nilpotent(N):
        return ["algebra is not nilpotent"]
    try:
        gd = generator_data(N)
    except BasisNotAdaptedError as exc:
        return [str(exc)]
    labels = N.basis_labels
    expected = {labels[i] for i in gd.generator_indices}
    gens = P.generator_labels
    unknown = [g for g in gens if g not in set(N.basis_labels)]
    if unknown:
        defects.append(f"unknown generator label(s): {', '.join(unknown)}")
    if len(set(gens)) != len(gens):
        defects.append("generator labels repeated")
    if set(gens) != expected and not unknown:
        defects.append(
            f"generators {sorted(gens)} do not match the basis vectors outside N^2 {sorted(expected)}")
    gset = set(gens)
    for lab in labels:
        if lab in gset:
            if lab in P.words:
                defects.append(f"generator {lab} must not have a word")
            continue
        if lab not in P.words:
            defects.append(f"no word for non-generator {lab}")
    for lab, word in P.words.items():
        if lab not in set(N.basis_labels):
            defects.append(f"word given for unknown label {lab}")
            continue
        if lab in gset:
            continue
        bad = [w for w in word if w not in gset]
        if bad:
            defects.append(f"word for {lab} uses non-generator letter(s) {', '.join(map(str, bad))}")
            continue
        if len(word) < 2:
            defects.append(f"word for {lab} has fewer than two letters")
            continue
        v = evaluate_word(N, word)
        if v != N.unit(lab):
            defects.append(f"word for {lab} evaluates to {N.format_element(v)}, not {lab}")
    for lab, b in P.abelian_flags.items():
        if lab not in gset:
            defects.append(f"abelian flag given for {lab}, which is not a generator")
        elif b not in (0, 1) or isinstance(b, bool):
            defects.append(f"abelian flag for {lab} must be 0 or 1, got {b!r}")
    return defects


def require_valid(P: WordPresentation):
    defects = validate_presentation(P)
    if defects:
        raise PresentationError(defects)


def detect_components(N: AlgebraTable, words: Mapping | None = None) -> Components:
    """Connected components of the graph joining i, j and k whenever gamma[i, j][k] != 0.

    Letters of a word are also joined to the word's basis vector.  Singleton
    components with no products form the abelian summand.
    """
    parent = list(range(N.dim))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for (i, j), terms in N.gamma.items():
        union(i, j)
        for k, _ in terms:
            union(i, k)
    for lab, word in (words or {}).items():
        for letter in word:
            union(N.index(lab), N.index(letter))
    blocks: dict[int, list] = {}
    for i in range(N.dim):
        blocks.setdefault(find(i), []).append(i)
    touched = {i for key in N.gamma for i in key}
    nonabelian, abelian = [], []
    for root in sorted(blocks):
        block = tuple(blocks[root])
        if any(i in touched for i in block):
            nonabelian.append(block)
        elif len(block) == 1:
            abelian.append(block[0])
        else:
            raise ComponentError(
                f"abelian component of dimension {len(block)} is not a sum of 1-dim summands")
    return Components(tuple(nonabelian), tuple(abelian))


# ---------------------------------------------------------------------------
# alpha, flags, beta
# ---------------------------------------------------------------------------

def compute_alpha(P: WordPresentation) -> AlphaMatrix:
    N = P.algebra
    gens = P.generator_labels
    rows = []
    for lab in N.basis_labels:
        if lab in gens:
            rows.append(tuple(int(g == lab) for g in gens))
        else:
            word = P.words[lab]
            rows.append(tuple(word.count(g) for g in gens))
    return AlphaMatrix(gens, N.basis_labels, tuple(rows))


def resolve_flags(P: WordPresentation, components: Components | None = None):
    """``(b per generator label, warnings)``.

    Non-abelian generators get the forced value; abelian ones take the given
    flag, defaulting to 1.
    """
    N = P.algebra
    comps = components or detect_components(N, P.words)
    ann = right_annihilator(N)
    abelian = {N.basis_labels[i] for i in comps.abelian}
    flags, warnings = {}, []
    for g in P.generator_labels:
        if g in abelian:
            flags[g] = int(P.abelian_flags.get(g, 1))
            continue
        forced = 1 if N.unit(g) in ann else 0
        given = P.abelian_flags.get(g)
        if given is not None and given != forced:
            warnings.append(f"flag {given} on {g} ignored: b is forced to {forced} "
                            f"in a non-abelian component")
        flags[g] = forced
    return flags, warnings


def compute_beta(P: WordPresentation, alpha: AlphaMatrix | None = None,
                 b_flags: Mapping | None = None) -> dict:
    """``[q_j, e_i]`` for every generator position j and non-generator index i.

    Recursion on the word read left to right, all brackets taken in N::

        [q_j, e_g]     = -delta(j, g) (1 - b_g) e_g
        [q_j, [w, e_g]] = [[q_j, w], e_g] - [[q_j, e_g], w]
    """
    N = P.algebra
    if b_flags is None:
        b_flags, _ = resolve_flags(P)
    gens = P.generator_labels
    n = N.dim
    zero = tuple([ZERO] * n)

    def base(j, g):
        if gens[j] != g or b_flags[g] == 1:
            return zero
        return tuple(-c for c in N.unit(g))

    beta = {}
    for j in range(len(gens)):
        for lab, word in P.words.items():
            i = N.index(lab)
            value = base(j, word[0])
            prefix = N.unit(word[0])
            for g in word[1:]:
                eg = N.unit(g)
                first = bracket(N, value, eg)
                second = bracket(N, base(j, g), prefix)
                value = tuple(a - b for a, b in zip(first, second))
                prefix = bracket(N, prefix, eg)
            beta[(j, i)] = tuple((t, c) for t, c in enumerate(value) if c)
    return beta


def beta_constraint_violations(alpha: AlphaMatrix, beta: Mapping) -> list:
    """Pairs where ``beta[j, i]`` has a term on ``e_t`` whose alpha-row differs from that of ``e_i``."""
    out = []
    for (j, i), terms in sorted(beta.items()):
        for t, _ in terms:
            if alpha.rows[t] != alpha.rows[i]:
                out.append((j, i, t))
    return out


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _fresh(label: str, taken: set) -> str:
    while label in taken:
        label += "'"
    taken.add(label)
    return label


def build_extension(P: WordPresentation, abelian_flags: Mapping | None = None) -> ExtensionResult:
    """The unique solvable extension of the presented N with one Q-vector per generator.

    Basis of R: N's basis, then ``x1, x2, ...`` for generators in non-abelian
    components (presentation order), then ``y1, y2, ...`` for the abelian
    generators.  Raises ExtensionError when the resulting table fails the
    Leibniz identity or the beta constraint.
    """
    if abelian_flags:
        P = P.with_flags(abelian_flags)
    require_valid(P)
    N = P.algebra
    comps = detect_components(N, P.words)
    flags, warnings = resolve_flags(P, comps)
    alpha = compute_alpha(P)
    beta = compute_beta(P, alpha, flags)
    gens = P.generator_labels
    abelian = {N.basis_labels[i] for i in comps.abelian}

    taken = set(N.basis_labels)
    order = [g for g in gens if g not in abelian] + [g for g in gens if g in abelian]
    q_label = {}
    nx = ny = 0
    for g in order:
        if g in abelian:
            ny += 1
            q_label[g] = _fresh(f"y{ny}", taken)
        else:
            nx += 1
            q_label[g] = _fresh(f"x{nx}", taken)
    n = N.dim
    labels = N.basis_labels + tuple(q_label[g] for g in order)
    qpos = {g: n + order.index(g) for g in gens}

    gamma = {key: list(terms) for key, terms in N.gamma.items()}
    for j, g in enumerate(gens):
        q = qpos[g]
        eg = N.index(g)
        gamma[(eg, q)] = [(eg, 1)]
        if flags[g] != 1:
            gamma[(q, eg)] = [(eg, flags[g] - 1)]
        for lab in P.words:
            i = N.index(lab)
            a = alpha.rows[i][j]
            if a:
                gamma[(i, q)] = [(i, a)]
            if beta[(j, i)]:
                gamma[(q, i)] = list(beta[(j, i)])
    R = AlgebraTable(n + len(gens), labels, gamma)

    violations = check_leibniz(R)
    if violations:
        raise ExtensionError(
            f"extension violates the Leibniz identity at {len(violations)} triple(s), "
            f"first {violations[0].describe(R)}; the presentation is outside the "
            f"codimension = generator count regime")
    bad = beta_constraint_violations(alpha, beta)
    if bad:
        j, i, t = bad[0]
        raise ExtensionError(
            f"[{q_label[gens[j]]}, {N.basis_labels[i]}] has a term on {N.basis_labels[t]} "
            f"whose letter counts differ")
    return ExtensionResult(
        table=R,
        nilradical_dim=n,
        alpha=alpha,
        beta=beta,
        b_flags=flags,
        components=comps,
        q_labels=tuple(q_label[g] for g in gens),
        warnings=tuple(warnings),
    )


def enumerate_flag_family(P: WordPresentation) -> list:
    """Extensions for abelian flag vectors ``1^j 0^(p-j)``, ``j = 0..p``.

    The abelian generators are taken in presentation order.
    """
    N = P.algebra
    comps = detect_components(N, P.words)
    abelian = [g for g in P.generator_labels if N.index(g) in comps.abelian]
    p = len(abelian)
    out = []
    for j in range(p + 1):
        flags = {g: (1 if pos < j else 0) for pos, g in enumerate(abelian)}
        out.append(build_extension(P.with_flags(flags)))
    return out


def flag_vectors(p: int):
    """All 2^p abelian flag assignments (used to exercise the isomorphism-class count)."""
    return list(itertools.product((0, 1), repeat=p))


def lie_normal_form(P: WordPresentation) -> AlgebraTable:
    """Antisymmetric table with ``[e_i, q_j] = -[q_j, e_i] = alpha[i][j] e_i``.

    This is the shape the extension must take when N is a Lie algebra with no
    abelian summand; comparing it with ``build_extension`` tests that claim.
    """
    require_valid(P)
    N = P.algebra
    alpha = compute_alpha(P)
    gens = P.generator_labels
    n = N.dim
    taken = set(N.basis_labels)
    labels = N.basis_labels + tuple(_fresh(f"x{j + 1}", taken) for j in range(len(gens)))
    gamma = {key: list(terms) for key, terms in N.gamma.items()}
    for i in range(n):
        for j in range(len(gens)):
            a = alpha.rows[i][j]
            if a:
                gamma[(i, n + j)] = [(i, a)]
                gamma[(n + j, i)] = [(i, -a)]
    return AlgebraTable(n + len(gens), labels, gamma)


def lie_specialize_check(result: ExtensionResult) -> bool:
    return is_antisymmetric(result.table)


def verify_isomorphism(A: AlgebraTable, B: AlgebraTable, P: Matrix) -> bool:
    """Whether P (rows = new basis of A) carries A's table onto B's."""
    if A.dim != B.dim:
        raise DimensionMismatch(f"algebras of dimension {A.dim} and {B.dim}")
    return tables_equal(basis_change(A, P), B)


__all__ = [
    "AlphaMatrix",
    "Components",
    "ExtensionResult",
    "WordPresentation",
    "beta_constraint_violations",
    "build_extension",
    "compute_alpha",
    "compute_beta",
    "detect_components",
    "enumerate_flag_family",
    "evaluate_word",
    "flag_vectors",
    "lie_normal_form",
    "lie_specialize_check",
    "require_valid",
    "resolve_flags",
    "validate_presentation",
    "verify_isomorphism",
]
