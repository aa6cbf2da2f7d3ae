"""Lie superalgebras in characteristic 2: structure, axioms, subspaces.

A superalgebra is stored through its structure constants over a fixed
homogeneous basis: a symmetric bracket table c[i][j] (an element bitmask)
and the squaring values s(e_i) for odd basis vectors.  The square of a
general odd element is determined by polarization:

    s(sum l_i e_i) = sum l_i s(e_i) + sum_{i<j} l_i l_j [e_i, e_j].

Axiom checking is a decision procedure: the bracket axioms are multilinear,
so basis instances suffice, and the squaring axiom on all odd elements
reduces to basis instances because f |-> ad_{s(f)} + ad_f o ad_f is additive
once the Jacobi identity holds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotOdd
from .gf2 import GF2Matrix, SpanBasis, bits, dot, span_basis


@dataclass(frozen=True)
class SuperAlgebra:
    names: tuple[str, ...]
    parity: tuple[int, ...]
    bracket_table: tuple[tuple[int, ...], ...]
    squaring: tuple[int, ...]
    degrees: tuple[int, ...] | None = None

    def __post_init__(self):
        n = len(self.names)
        if len(self.parity) != n or len(self.squaring) != n:
            raise DimensionMismatch("basis metadata lengths disagree")
        if len(self.bracket_table) != n or any(
            len(r) != n for r in self.bracket_table
        ):
            raise DimensionMismatch("bracket table is not n x n")
        if self.degrees is not None and len(self.degrees) != n:
            raise DimensionMismatch("degree vector length disagrees")

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def even_mask(self) -> int:
        return sum(1 << i for i in range(self.dim) if self.parity[i] == 0)

    @property
    def odd_mask(self) -> int:
        return sum(1 << i for i in range(self.dim) if self.parity[i] == 1)

    def even_indices(self) -> list[int]:
        return [i for i in range(self.dim) if self.parity[i] == 0]

    def odd_indices(self) -> list[int]:
        return [i for i in range(self.dim) if self.parity[i] == 1]

    @property
    def sdim(self) -> tuple[int, int]:
        odd = self.odd_mask.bit_count()
        return (self.dim - odd, odd)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def element(self, expr: str | Iterable[str]) -> int:
        """Parse 'p + q' or a name iterable into a bitmask element."""
        if isinstance(expr, str):
            parts = [p for p in re.split(r"[+\s]+", expr) if p]
        else:
            parts = list(expr)
        v = 0
        for p in parts:
            v ^= 1 << self.index(p)
        return v

    def format_element(self, v: int) -> str:
        if v == 0:
            return "0"
        return " + ".join(self.names[i] for i in bits(v))

    def parity_of(self, v: int) -> int | None:
        """0/1 for homogeneous nonzero v, None for mixed or zero."""
        if v == 0:
            return None
        ev, od = v & self.even_mask, v & self.odd_mask
        if ev and od:
            return None
        return 0 if ev else 1


def bracket(g: SuperAlgebra, x: int, y: int) -> int:
    """Bilinear extension of the structure constants."""
    if x >> g.dim or y >> g.dim:
        raise DimensionMismatch("element outside the algebra")
    acc = 0
    table = g.bracket_table
    for i in bits(x):
        row = table[i]
        for j in bits(y):
            acc ^= row[j]
    return acc


def square_element(g: SuperAlgebra, x: int) -> int:
    """The squaring s(x) of an odd element, by polarization."""
    if x >> g.dim:
        raise DimensionMismatch("element outside the algebra")
    if x & g.even_mask:
        raise NotOdd(f"square of non-odd element {g.format_element(x)}")
    acc = 0
    idx = list(bits(x))
    table = g.bracket_table
    for a, i in enumerate(idx):
        acc ^= g.squaring[i]
        row = table[i]
        for j in idx[a + 1 :]:
            acc ^= row[j]
    return acc


def ad(g: SuperAlgebra, v: int) -> list[int]:
    """Images of the adjoint map ad_v, one per basis vector."""
    return [bracket(g, v, 1 << j) for j in range(g.dim)]


# ---------------------------------------------------------------------------
# Axiom checking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    witness: tuple[int, ...]
    detail: str


@dataclass
class ValidationReport:
    failures: list[AxiomFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self, g: SuperAlgebra | None = None) -> str:
        if self.passed:
            return "all axioms hold"
        lines = []
        for f in self.failures[:20]:
            w = ",".join(
                g.names[i] if g is not None else str(i) for i in f.witness
            )
            lines.append(f"{f.axiom} fails at ({w}): {f.detail}")
        if len(self.failures) > 20:
            lines.append(f"... {len(self.failures) - 20} more")
        return "\n".join(lines)


def validate(g: SuperAlgebra, max_failures: int = 64) -> ValidationReport:
    """Check the superalgebra axioms on the structure constants."""
    report = ValidationReport()
    n = g.dim
    table = g.bracket_table

    def fail(axiom, witness, detail):
        if len(report.failures) < max_failures:
            report.failures.append(AxiomFailure(axiom, witness, detail))

    for i in range(n):
        if table[i][i]:
            fail("alternating", (i, i), "[e,e] != 0")
        if g.parity[i] == 0 and g.squaring[i]:
            fail("squaring-domain", (i,), "squaring value on even vector")
        if g.squaring[i] & g.odd_mask:
            fail("grading", (i,), "squaring value not even")
        for j in range(i + 1, n):
            if table[i][j] != table[j][i]:
                fail("symmetry", (i, j), "bracket table not symmetric")
            want = g.parity[i] ^ g.parity[j]
            bad = table[i][j] & (g.odd_mask if want == 0 else g.even_mask)
            if bad:
                fail("grading", (i, j), "bracket value has wrong parity")
    if report.failures:
        # Jacobi witnesses would be noise on a malformed table.
        return report

    for i in range(n):
        for j in range(i + 1, n):
            bij = table[i][j]
            for k in range(j + 1, n):
                acc = bracket(g, 1 << i, table[j][k])
                acc ^= bracket(g, 1 << j, table[i][k])
                acc ^= bracket(g, 1 << k, bij)
                if acc:
                    fail(
                        "jacobi",
                        (i, j, k),
                        f"cycle sum = {g.format_element(acc)}",
                    )
                    if len(report.failures) >= max_failures:
                        return report

    for i in g.odd_indices():
        si = g.squaring[i]
        for j in range(n):
            lhs = bracket(g, si, 1 << j)
            rhs = bracket(g, 1 << i, table[i][j])
            if lhs != rhs:
                fail(
                    "squaring-jacobi",
                    (i, j),
                    f"[s(f),g] = {g.format_element(lhs)}"
                    f" but [f,[f,g]] = {g.format_element(rhs)}",
                )
    return report


# ---------------------------------------------------------------------------
# Structural subspaces
# ---------------------------------------------------------------------------


def parity_split(g: SuperAlgebra, vectors: Iterable[int]) -> tuple[list[int], list[int]]:
    """Split a graded subspace into even and odd parts.

    Valid whenever the subspace is graded (all the subspaces this module
    produces are); the two masked spans then add up to the original one.
    """
    ev, od = SpanBasis(), SpanBasis()
    total = SpanBasis()
    for v in vectors:
        total.add(v)
        ev.add(v & g.even_mask)
        od.add(v & g.odd_mask)
    if ev.dim + od.dim != total.dim:
        raise ValueError("subspace is not graded")
    return ev.vectors(), od.vectors()


def squares_span(g: SuperAlgebra) -> list[int]:
    """Span of {s(f) : f odd}; generated by basis squares and odd brackets."""
    basis = SpanBasis(g.squaring[i] for i in g.odd_indices())
    odd = g.odd_indices()
    for a, i in enumerate(odd):
        for j in odd[a + 1 :]:
            basis.add(g.bracket_table[i][j])
    return basis.vectors()


def derived_subalgebra(g: SuperAlgebra, step: int = 1) -> list[int]:
    """Basis of the step-th derived algebra g^(step)."""
    if step < 0:
        raise ValueError("step must be >= 0")
    current = [1 << i for i in range(g.dim)]
    for _ in range(step):
        nxt = SpanBasis()
        ev, od = parity_split(g, current)
        homog = ev + od
        for a, u in enumerate(homog):
            for v in homog[a:]:
                nxt.add(bracket(g, u, v))
        for u in od:
            nxt.add(square_element(g, u))
        current = nxt.vectors()
    return current


def adjoint_relations(g: SuperAlgebra) -> GF2Matrix:
    """Matrix whose kernel is the center: rows (j,k) |-> c[i][j]_k over i."""
    rows = []
    n = g.dim
    for j in range(n):
        cols = [g.bracket_table[i][j] for i in range(n)]
        for k in range(n):
            row = 0
            for i in range(n):
                if (cols[i] >> k) & 1:
                    row |= 1 << i
            if row:
                rows.append(row)
    return GF2Matrix(rows, n)


def center(g: SuperAlgebra) -> list[int]:
    return adjoint_relations(g).kernel_basis()


def orthogonality_rows(g: SuperAlgebra, gram: GF2Matrix, vectors: Iterable[int]) -> list[int]:
    """Constraint rows for {x : B(x, v) = 0 for all given v}."""
    rows = []
    for v in vectors:
        row = 0
        for j in range(g.dim):
            if dot(gram.rows[j], v):
                row |= 1 << j
        rows.append(row)
    return rows


def special_center(g: SuperAlgebra, gram: GF2Matrix) -> tuple[list[int], list[int], list[int]]:
    """z_s(g) = z(g) cut by orthogonality to all squares; plus parity parts."""
    rows = adjoint_relations(g).rows + orthogonality_rows(
        g, gram, squares_span(g)
    )
    basis = GF2Matrix(rows, g.dim).kernel_basis()
    ev, od = parity_split(g, basis)
    return span_basis(basis), ev, od


def cone_contains(g: SuperAlgebra, gram: GF2Matrix, x: int) -> bool:
    """Membership in {x odd : B(s(x), s(t)) = 0 for all odd t}."""
    if x & g.even_mask:
        raise NotOdd("cone membership is defined for odd elements")
    sx = square_element(g, x)
    return all(not dot(gram.mat_vec(w), sx) for w in squares_span(g))


def cone_basis_witnesses(g: SuperAlgebra, gram: GF2Matrix) -> list[int]:
    """Span of the odd basis vectors lying in the cone."""
    return span_basis(
        1 << i for i in g.odd_indices() if cone_contains(g, gram, 1 << i)
    )


def sharp_complement(
    g: SuperAlgebra, gram: GF2Matrix, subspace: Sequence[int]
) -> list[int]:
    """V-sharp: B(x,V)=0, and B(s(x),V)=0 for odd x.

    The odd-part condition is quadratic in general; it cuts a subspace
    exactly when B([x,y],V)=0 on the orthogonal kernel, which holds for
    ideals, which is the intended use.  A non-additive instance raises
    ValueError.
    """
    v_ev, v_od = parity_split(g, subspace)
    v_basis = v_ev + v_od
    perp = GF2Matrix(
        orthogonality_rows(g, gram, v_basis) or [0], g.dim
    ).kernel_basis()
    k_ev, k_od = parity_split(g, perp)
    if not v_basis:
        return span_basis(k_ev + k_od)
    for a, u in enumerate(k_od):
        for w in k_od[a + 1 :]:
            cross = bracket(g, u, w)
            if any(dot(gram.mat_vec(v), cross) for v in v_basis):
                raise ValueError(
                    "sharp complement is not a subspace for this V"
                )
    rows = []
    targets = [gram.mat_vec(v) for v in v_basis]
    for t in targets:
        row = 0
        for a, u in enumerate(k_od):
            if dot(t, square_element(g, u)):
                row |= 1 << a
        rows.append(row)
    coords = GF2Matrix(rows, len(k_od)).kernel_basis() if k_od else []
    odd_part = []
    for cvec in coords:
        u = 0
        for a in bits(cvec):
            u ^= k_od[a]
        odd_part.append(u)
    return span_basis(k_ev + odd_part)


def is_two_step_nilpotent(g: SuperAlgebra) -> bool:
    """[g,[g,g]] = 0, [g, s(g_odd)] = 0, and s([g_even, g_odd]) = 0."""
    derived = SpanBasis()
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            derived.add(g.bracket_table[i][j])
    for w in derived.vectors():
        for j in range(n):
            if bracket(g, w, 1 << j):
                return False
    for w in squares_span(g):
        for j in range(n):
            if bracket(g, w, 1 << j):
                return False
    mixed = SpanBasis()
    for i in g.even_indices():
        for j in g.odd_indices():
            mixed.add(g.bracket_table[i][j])
    # [V,V] = 0 at this point, so s is additive on V = [g_ev, g_od].
    for w in mixed.vectors():
        if square_element(g, w):
            return False
    return True


# ---------------------------------------------------------------------------
# Ideals and the best-effort irreducibility flag
# ---------------------------------------------------------------------------


def ideal_closure(g: SuperAlgebra, seed: int) -> list[int]:
    """Smallest ideal containing the homogeneous element `seed`.

    Closed under bracketing with g and under the squaring of its odd part.
    """
    if g.parity_of(seed) is None and seed != 0:
        raise ValueError("ideal_closure expects a homogeneous seed")
    basis = SpanBasis([seed] if seed else [])
    # brackets and squares of homogeneous vectors stay homogeneous, so the
    # frontier spans the closure through homogeneous vectors only
    frontier = [seed] if seed else []
    while frontier:
        new = []
        for w in frontier:
            for j in range(g.dim):
                b = bracket(g, w, 1 << j)
                if b and basis.add(b):
                    new.append(b)
            if g.parity_of(w) == 1:
                sq = square_element(g, w)
                if sq and basis.add(sq):
                    new.append(sq)
        frontier = new
    return basis.vectors()


def is_ideal(g: SuperAlgebra, vectors: Sequence[int]) -> bool:
    basis = SpanBasis(vectors)
    try:
        ev, od = parity_split(g, vectors)
    except ValueError:
        return False
    for w in ev + od:
        for j in range(g.dim):
            if not basis.contains(bracket(g, w, 1 << j)):
                return False
    for w in od:
        if not basis.contains(square_element(g, w)):
            return False
    return True


def find_orthogonal_decomposition(
    g: SuperAlgebra, gram: GF2Matrix
) -> tuple[list[int], list[int]] | None:
    """Search for g = I + I-perp with both summands nonzero ideals.

    Seeds are the ideals generated by single basis vectors; exhausting them
    without a hit does not prove irreducibility (best-effort flag).
    """
    n = g.dim
    for i in range(n):
        ideal = ideal_closure(g, 1 << i)
        d = len(ideal)
        if d == 0 or d == n:
            continue
        sub_gram = GF2Matrix(
            [sum(dot(gram.mat_vec(u), v) << k for k, v in enumerate(ideal))
             for u in ideal],
            d,
        )
        if sub_gram.rank() != d:
            continue
        perp = GF2Matrix(
            orthogonality_rows(g, gram, ideal), n
        ).kernel_basis()
        if len(perp) == n - d and is_ideal(g, perp):
            return ideal, perp
    return None


def irreducible_flag(g: SuperAlgebra, gram: GF2Matrix) -> bool:
    """True when no orthogonal ideal decomposition was found (best effort)."""
    return find_orthogonal_decomposition(g, gram) is None


# ---------------------------------------------------------------------------
# Restriction to a coordinate subalgebra
# ---------------------------------------------------------------------------


def restrict_to_coordinates(
    g: SuperAlgebra, indices: Sequence[int]
) -> SuperAlgebra:
    """Substructure on a subset of basis vectors (must be closed)."""
    pos = {i: k for k, i in enumerate(indices)}

    def compress(v: int) -> int:
        out = 0
        for i in bits(v):
            if i not in pos:
                raise ValueError("subset is not closed under the structure")
            out |= 1 << pos[i]
        return out

    table = tuple(
        tuple(compress(g.bracket_table[i][j]) for j in indices)
        for i in indices
    )
    return SuperAlgebra(
        names=tuple(g.names[i] for i in indices),
        parity=tuple(g.parity[i] for i in indices),
        bracket_table=table,
        squaring=tuple(compress(g.squaring[i]) for i in indices),
        degrees=None
        if g.degrees is None
        else tuple(g.degrees[i] for i in indices),
    )
