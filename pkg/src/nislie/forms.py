"""Bilinear and quadratic forms over GF(2).

A BilinearForm is a parity-homogeneous Gram matrix on the whole algebra.
A QuadraticForm lives on k generators (the odd part of an algebra, in the
main use): basis values plus a polar matrix, with

    q(sum l_i v_i) = sum l_i q(v_i) + sum_{i<j} l_i l_j polar[i][j].

The Arf invariant is computed democratically, by counting values over all
vectors; the Darboux normal form is an acceptance check, not the algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DegeneratePolar, DimensionMismatch, NotAlternating, NotOdd, OutOfRange
from .gf2 import GF2Matrix, bits, dot
from .superalgebra import SuperAlgebra


@dataclass(frozen=True)
class BilinearForm:
    gram: GF2Matrix
    parity: int

    @property
    def dim(self) -> int:
        return self.gram.ncols

    def pair(self, x: int, y: int) -> int:
        """B(x, y)."""
        return dot(self.gram.mat_vec(y), x)

    def pair_row(self, y: int) -> int:
        """The functional B(., y) as a bit vector over basis indices."""
        return self.gram.mat_vec(y)

    def orthogonal_complement(self, vectors: Iterable[int]) -> list[int]:
        rows = [self.gram.mat_vec(v) for v in vectors]
        return GF2Matrix(rows or [0], self.dim).kernel_basis()

    def restrict(self, basis_vectors: list[int]) -> "BilinearForm":
        d = len(basis_vectors)
        rows = []
        for u in basis_vectors:
            row = 0
            for k, v in enumerate(basis_vectors):
                if self.pair(u, v):
                    row |= 1 << k
            rows.append(row)
        return BilinearForm(GF2Matrix(rows, d), self.parity)


@dataclass
class NISReport:
    symmetric: bool = True
    invariant: bool = True
    non_degenerate: bool = True
    parity_homogeneous: bool = True
    witnesses: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.symmetric
            and self.invariant
            and self.non_degenerate
            and self.parity_homogeneous
        )

    def summary(self) -> str:
        flags = [
            ("symmetric", self.symmetric),
            ("invariant", self.invariant),
            ("non-degenerate", self.non_degenerate),
            ("parity-homogeneous", self.parity_homogeneous),
        ]
        return ", ".join(f"{k}={'yes' if v else 'NO'}" for k, v in flags)


def check_nis(g: SuperAlgebra, form: BilinearForm, max_witnesses: int = 16) -> NISReport:
    """Symmetry (with odd isotropy), invariance, and non-degeneracy."""
    if form.dim != g.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    report = NISReport()
    gram = form.gram
    n = g.dim

    def note(kind, witness):
        if len(report.witnesses) < max_witnesses:
            report.witnesses.append((kind, witness))

    for i in range(n):
        if g.parity[i] == 1 and gram.entry(i, i):
            report.symmetric = False
            note("symmetric", (i, i))
        for j in range(i + 1, n):
            if gram.entry(i, j) != gram.entry(j, i):
                report.symmetric = False
                note("symmetric", (i, j))
    for i in range(n):
        for j in range(i, n):
            if gram.entry(i, j) and (g.parity[i] ^ g.parity[j]) != form.parity:
                report.parity_homogeneous = False
                note("parity", (i, j))

    rows = gram.rows
    cols = [gram.column(k) for k in range(n)]
    table = g.bracket_table
    # B([e_i, e_j], e_k) = B(e_i, [e_j, e_k]) on all basis triples
    for i in range(n):
        for j in range(n):
            tij = table[i][j]
            trow = table[j]
            for k in range(n):
                if dot(cols[k], tij) != dot(rows[i], trow[k]):
                    report.invariant = False
                    note("invariant", (i, j, k))

    if gram.rank() != n:
        report.non_degenerate = False
        note("non-degenerate", ())
    return report


# ---------------------------------------------------------------------------
# Quadratic forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticForm:
    """A quadratic form on k generators: diagonal values + polar matrix."""

    n: int
    diag: int
    polar: GF2Matrix

    def __post_init__(self):
        if self.polar.ncols != self.n or self.polar.nrows != self.n:
            raise DimensionMismatch("polar matrix size mismatch")

    @classmethod
    def zero(cls, n: int) -> "QuadraticForm":
        return cls(n, 0, GF2Matrix.zeros(n, n))

    def evaluate(self, x: int) -> int:
        if x >> self.n:
            raise DimensionMismatch("vector outside the form's space")
        val = (self.diag & x).bit_count() & 1
        idx = list(bits(x))
        for a, i in enumerate(idx):
            row = self.polar.rows[i]
            for j in idx[a + 1 :]:
                val ^= (row >> j) & 1
        return val


def evaluate_quadratic(q: QuadraticForm, x: int) -> int:
    return q.evaluate(x)


def polar_of(q: QuadraticForm) -> GF2Matrix:
    """The polar form q(u+v)+q(u)+q(v); equals the stored matrix."""
    return q.polar


def is_alternating(m: GF2Matrix) -> bool:
    n = m.ncols
    if m.nrows != n:
        return False
    for i in range(n):
        if m.entry(i, i):
            return False
        for j in range(i + 1, n):
            if m.entry(i, j) != m.entry(j, i):
                return False
    return True


@dataclass(frozen=True)
class QuadraticLiftFamily:
    """All quadratic forms with a fixed polar matrix; free diagonal."""

    polar: GF2Matrix

    @property
    def dimension(self) -> int:
        return self.polar.ncols

    def member(self, diag: int) -> QuadraticForm:
        return QuadraticForm(self.polar.ncols, diag, self.polar)

    def __iter__(self):
        for d in range(1 << self.dimension):
            yield self.member(d)


def quadratic_lifts(polar: GF2Matrix) -> QuadraticLiftFamily:
    """The affine family of quadratic forms polarizing to `polar`."""
    if not is_alternating(polar):
        raise NotAlternating(
            "polar candidates must be symmetric with zero diagonal"
        )
    return QuadraticLiftFamily(polar)


def arf_invariant(q: QuadraticForm, max_dim: int = 24) -> int:
    """Democratic invariant: the value taken on a minority of vectors is 1.

    Requires a non-degenerate polar form, under which the zero count is
    2^(n-1) +- 2^(n/2-1) and the majority verdict is well defined.
    """
    if q.n > max_dim:
        raise OutOfRange(f"exhaustive count beyond {max_dim} generators")
    if q.polar.rank() != q.n:
        raise DegeneratePolar("polar form is degenerate")
    zeros = sum(1 for x in range(1 << q.n) if q.evaluate(x) == 0)
    total = 1 << q.n
    if zeros * 2 == total:
        raise DegeneratePolar("no majority value; polar must be degenerate")
    return 0 if zeros * 2 > total else 1


def darboux_form(n_pairs: int, a: int) -> QuadraticForm:
    """Normal form sum l_i l_{n+i} + a (l_n^2 + l_2n^2) on 2n generators."""
    n = 2 * n_pairs
    rows = [0] * n
    for i in range(n_pairs):
        rows[i] |= 1 << (n_pairs + i)
        rows[n_pairs + i] |= 1 << i
    diag = 0
    if a & 1:
        diag |= 1 << (n_pairs - 1)
        diag |= 1 << (n - 1)
    return QuadraticForm(n, diag, GF2Matrix(rows, n))


# ---------------------------------------------------------------------------
# Forms attached to the odd part of a superalgebra
# ---------------------------------------------------------------------------


def odd_pairing_matrix(g: SuperAlgebra, pairing) -> GF2Matrix:
    """Matrix of a pairing over the odd basis, as k x k with k odd vectors."""
    odd = g.odd_indices()
    rows = []
    for i in odd:
        row = 0
        for b, j in enumerate(odd):
            if pairing(i, j):
                row |= 1 << b
        rows.append(row)
    return GF2Matrix(rows, len(odd))


def quadratic_form_on_odd(
    g: SuperAlgebra, diag_by_index: dict[int, int], polar: GF2Matrix
) -> QuadraticForm:
    """Package ambient-indexed diagonal values into an odd-part form."""
    odd = g.odd_indices()
    diag = 0
    for pos, i in enumerate(odd):
        if diag_by_index.get(i, 0) & 1:
            diag |= 1 << pos
    return QuadraticForm(len(odd), diag, polar)


def evaluate_on_algebra(g: SuperAlgebra, q: QuadraticForm, x: int) -> int:
    """Evaluate an odd-part form on an odd element of the algebra."""
    if x & g.even_mask:
        raise NotOdd("quadratic forms act on the odd part")
    odd = g.odd_indices()
    pos = {i: a for a, i in enumerate(odd)}
    compressed = 0
    for i in bits(x):
        compressed |= 1 << pos[i]
    return q.evaluate(compressed)
