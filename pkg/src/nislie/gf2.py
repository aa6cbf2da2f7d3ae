"""Exact linear algebra over GF(2).

Vectors are Python ints used as bit sets (bit j = coordinate j), so addition
is ``^`` and a dot product is a popcount parity.  Matrices store bit-packed
rows; arbitrary-width ints give word-at-a-time elimination for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class SubspaceNotContained(ValueError):
    """Raised by quotient_basis when the subspace is not inside the space."""


def bits(x: int) -> Iterator[int]:
    """Yield the set bit positions of x in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


def vector_from_coords(coords: Iterable[int]) -> int:
    v = 0
    for j, c in enumerate(coords):
        if c & 1:
            v |= 1 << j
    return v


def vector_to_coords(v: int, n: int) -> list[int]:
    return [(v >> j) & 1 for j in range(n)]


class SpanBasis:
    """Incremental row-space basis in reduced echelon form.

    Pivots are the lowest set bits; rows are kept mutually reduced, so the
    representation of the spanned subspace is canonical.
    """

    __slots__ = ("pivot_rows",)

    def __init__(self, vectors: Iterable[int] = ()):  # noqa: D107
        self.pivot_rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        """Fully reduce v; zero iff v is in the span."""
        rows = self.pivot_rows
        done = 0  # bits confirmed to have no pivot row
        while True:
            rest = v & ~done
            if not rest:
                return v
            low = rest & -rest
            row = rows.get(low.bit_length() - 1)
            if row is None:
                done |= low
            else:
                # row's lowest bit is the pivot, so only higher bits change
                v ^= row

    def add(self, v: int) -> bool:
        """Insert v; return True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = (v & -v).bit_length() - 1
        # keep full reduction: clear bit p from existing rows
        for q, row in self.pivot_rows.items():
            if (row >> p) & 1:
                self.pivot_rows[q] = row ^ v
        self.pivot_rows[p] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def dim(self) -> int:
        return len(self.pivot_rows)

    def vectors(self) -> list[int]:
        """Canonical basis, sorted by pivot position."""
        return [self.pivot_rows[p] for p in sorted(self.pivot_rows)]


def span_basis(vectors: Iterable[int]) -> list[int]:
    return SpanBasis(vectors).vectors()


def span_equal(a: Iterable[int], b: Iterable[int]) -> bool:
    return span_basis(a) == span_basis(b)


@dataclass(frozen=True)
class RowReduction:
    matrix: "GF2Matrix"
    rank: int
    pivot_columns: tuple[int, ...]


@dataclass(frozen=True)
class AffineSolution:
    """Solution set of A x = b: particular + span of kernel_basis."""

    particular: int
    kernel_basis: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        """Enumerate all solutions (use only for small kernels)."""
        k = len(self.kernel_basis)
        for mask in range(1 << k):
            x = self.particular
            for i in bits(mask):
                x ^= self.kernel_basis[i]
            yield x


class GF2Matrix:
    """Immutable-by-convention matrix over GF(2) with bit-packed rows."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Sequence[int], ncols: int):
        self.rows = list(rows)
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "GF2Matrix":
        return cls([0] * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> "GF2Matrix":
        ncols = len(dense[0]) if dense else 0
        return cls([vector_from_coords(row) for row in dense], ncols)

    def to_dense(self) -> list[list[int]]:
        return [vector_to_coords(r, self.ncols) for r in self.rows]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GF2Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ncols, tuple(self.rows)))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.nrows}x{self.ncols})"

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        c = 0
        for i, row in enumerate(self.rows):
            if (row >> j) & 1:
                c |= 1 << i
        return c

    def transpose(self) -> "GF2Matrix":
        cols = [0] * self.ncols
        for i, row in enumerate(self.rows):
            for j in bits(row):
                cols[j] |= 1 << i
        return GF2Matrix(cols, self.nrows)

    def mat_vec(self, x: int) -> int:
        """A @ x with x a column vector (bit j = coordinate j)."""
        y = 0
        for i, row in enumerate(self.rows):
            if (row & x).bit_count() & 1:
                y |= 1 << i
        return y

    def vec_mat(self, x: int) -> int:
        """x^T @ A as a bit vector over columns."""
        y = 0
        for i in bits(x):
            y ^= self.rows[i]
        return y

    def mat_mul(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in mat_mul")
        out = []
        for row in self.rows:
            acc = 0
            for j in bits(row):
                acc ^= other.rows[j]
            out.append(acc)
        return GF2Matrix(out, other.ncols)

    def row_reduce(self) -> RowReduction:
        """Reduced row echelon form, rank, and pivot columns."""
        work = list(self.rows)
        pivots: list[int] = []
        r = 0
        for col in range(self.ncols):
            sel = None
            for i in range(r, len(work)):
                if (work[i] >> col) & 1:
                    sel = i
                    break
            if sel is None:
                continue
            work[r], work[sel] = work[sel], work[r]
            prow = work[r]
            for i in range(len(work)):
                if i != r and (work[i] >> col) & 1:
                    work[i] ^= prow
            pivots.append(col)
            r += 1
            if r == len(work):
                break
        # move zero rows to the bottom (already there by construction)
        return RowReduction(GF2Matrix(work, self.ncols), r, tuple(pivots))

    def rank(self) -> int:
        basis = SpanBasis()
        for row in self.rows:
            basis.add(row)
        return basis.dim

    def kernel_basis(self) -> list[int]:
        """Basis of {x : A x = 0}."""
        red = self.row_reduce()
        pivots = red.pivot_columns
        pivot_of_col = {c: i for i, c in enumerate(pivots)}
        free = [c for c in range(self.ncols) if c not in pivot_of_col]
        basis = []
        for f in free:
            v = 1 << f
            for c, i in pivot_of_col.items():
                if (red.matrix.rows[i] >> f) & 1:
                    v |= 1 << c
            basis.append(v)
        return basis

    def inverse(self) -> "GF2Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of non-square matrix")
        work = [self.rows[i] | (1 << (n + i)) for i in range(n)]
        r = 0
        for col in range(n):
            sel = None
            for i in range(r, n):
                if (work[i] >> col) & 1:
                    sel = i
                    break
            if sel is None:
                raise ValueError("singular matrix over GF(2)")
            work[r], work[sel] = work[sel], work[r]
            prow = work[r]
            for i in range(n):
                if i != r and (work[i] >> col) & 1:
                    work[i] ^= prow
            r += 1
        return GF2Matrix([w >> n for w in work], n)

    def stack(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch in stack")
        return GF2Matrix(self.rows + other.rows, self.ncols)


def row_reduce(m: GF2Matrix) -> tuple[GF2Matrix, int, list[int]]:
    """Functional spelling of GF2Matrix.row_reduce."""
    red = m.row_reduce()
    return red.matrix, red.rank, list(red.pivot_columns)


def solve_affine(a: GF2Matrix, b: int) -> AffineSolution | None:
    """Solve A x = b; None when inconsistent.

    b is a bit vector over the rows of A.
    """
    n = a.ncols
    aug = GF2Matrix(
        [row | (((b >> i) & 1) << n) for i, row in enumerate(a.rows)], n + 1
    )
    red = aug.row_reduce()
    if n in red.pivot_columns:
        return None
    pivot_of_col = {c: i for i, c in enumerate(red.pivot_columns)}
    particular = 0
    for c, i in pivot_of_col.items():
        if (red.matrix.rows[i] >> n) & 1:
            particular |= 1 << c
    mask = (1 << n) - 1
    kernel = GF2Matrix([row & mask for row in red.matrix.rows[: red.rank]], n)
    return AffineSolution(particular, tuple(kernel.kernel_basis()))


def quotient_basis(
    space: Iterable[int], subspace: Iterable[int]
) -> list[int]:
    """Representatives completing a basis of `subspace` to one of `space`.

    Raises SubspaceNotContained when subspace is not inside span(space).
    """
    space_vs = list(space)
    ambient = SpanBasis(space_vs)
    current = SpanBasis()
    for v in subspace:
        if not ambient.contains(v):
            raise SubspaceNotContained(f"vector {v:#x} outside the space")
        current.add(v)
    reps = []
    for v in space_vs:
        if current.add(v):
            reps.append(v)
    return reps
