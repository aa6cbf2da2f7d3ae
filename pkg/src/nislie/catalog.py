"""Constructors for the worked examples: doubles, Hamiltonian and Poisson
algebras, matrix algebras, named cocycles, and the named-extension recipes.

Basis conventions (fixed so that Gram matrices and cocycle matrices come out
bit-exactly):

* Manin doubles list the original basis first, then the duals, in order.
* Monomial algebras order the basis by ascending degree, lexicographically
  within a degree, with theta before xi1 < xi2 < eta1 < eta2 when present;
  complementation then reverses the order and the pairing form is
  antidiag(1, ..., 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .derivations import Derivation
from .errors import OutOfRange, UnknownName
from .extension import ExtensionRecipe, ExtensionResult, extend
from .forms import BilinearForm, QuadraticForm
from .gf2 import GF2Matrix
from .superalgebra import (
    SuperAlgebra,
    derived_subalgebra,
    restrict_to_coordinates,
)


def _algebra(names, parity, brackets, squaring=None, degrees=None):
    n = len(names)
    idx = {nm: i for i, nm in enumerate(names)}
    table = [[0] * n for _ in range(n)]
    for (u, v), words in brackets.items():
        i, j = idx[u], idx[v]
        val = 0
        for w in words.split():
            val ^= 1 << idx[w]
        table[i][j] ^= val
        table[j][i] ^= val
    sq = [0] * n
    for u, words in (squaring or {}).items():
        val = 0
        for w in words.split():
            val ^= 1 << idx[w]
        sq[idx[u]] = val
    return SuperAlgebra(
        names=tuple(names),
        parity=tuple(parity),
        bracket_table=tuple(tuple(r) for r in table),
        squaring=tuple(sq),
        degrees=None if degrees is None else tuple(degrees),
    )


def heisenberg_0_2() -> SuperAlgebra:
    """hei(0|2): p, q odd and z even with [p, q] = z."""
    return _algebra(
        ["p", "q", "z"], [1, 1, 0], {("p", "q"): "z"}
    )


def ba_1() -> SuperAlgebra:
    """ba(1): theta, z odd and q even with [q, theta] = z."""
    return _algebra(
        ["theta", "q", "z"], [1, 0, 1], {("q", "theta"): "z"}
    )


def manin_double(
    h: SuperAlgebra, odd_dual: bool = False
) -> tuple[SuperAlgebra, BilinearForm]:
    """h + h* (or h + Pi(h*)) with the evaluation pairing.

    The dual copy is abelian; h acts on it by the coadjoint action, and the
    squaring of h extends by s(h + pi) = s(h) + pi o ad_h.
    """
    n = h.dim
    names = tuple(h.names) + tuple(f"{nm}star" for nm in h.names)
    dual_shift = 1 if odd_dual else 0
    parity = tuple(h.parity) + tuple((p + dual_shift) & 1 for p in h.parity)
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            table[i][j] = h.bracket_table[i][j]
    for i in range(n):
        for j in range(n):
            # [e_i, e_j*] = sum_k c[i][k][j] e_k*
            val = 0
            for k in range(n):
                if (h.bracket_table[i][k] >> j) & 1:
                    val |= 1 << (n + k)
            table[i][n + j] = val
            table[n + j][i] = val
    squaring = [0] * (2 * n)
    for i in h.odd_indices():
        squaring[i] = h.squaring[i]
    gram = [1 << (n + i) for i in range(n)] + [1 << i for i in range(n)]
    g = SuperAlgebra(
        names=names,
        parity=parity,
        bracket_table=tuple(tuple(r) for r in table),
        squaring=tuple(squaring),
    )
    return g, BilinearForm(GF2Matrix(gram, 2 * n), 1 if odd_dual else 0)


def purely_odd() -> tuple[SuperAlgebra, BilinearForm]:
    """Two odd generators, zero bracket and squaring, B(a,b) = 1."""
    g = _algebra(["a", "b"], [1, 1], {})
    return g, BilinearForm(GF2Matrix([2, 1], 2), 0)


# ---------------------------------------------------------------------------
# Monomial algebras: h(0|m), its derived algebra, and the Poisson algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialBasis:
    m: int
    var_names: tuple[str, ...]
    monomials: tuple[frozenset, ...]
    index: dict
    conj_pairs: tuple[tuple[int, int], ...]
    theta: int | None

    def name(self, s: frozenset) -> str:
        if not s:
            return "1"
        return "".join(self.var_names[v] for v in sorted(s))

    def find(self, text: str) -> int:
        """Index of a monomial given as e.g. 'xi1 eta2 theta'."""
        rev = {nm: v for v, nm in enumerate(self.var_names)}
        s = frozenset(rev[t] for t in text.split())
        return self.index[s]


def monomial_basis(
    m: int, include_constant: bool, include_top: bool
) -> MonomialBasis:
    if not 1 <= m <= 12:
        raise OutOfRange("monomial algebras supported for 1 <= m <= 12")
    k = m // 2
    # variable order: theta (for odd m) < xi1 < ... < xik < eta1 < ... < etak
    names = (["theta"] if m % 2 else []) + [
        f"xi{i+1}" for i in range(k)
    ] + [f"eta{i+1}" for i in range(k)]
    off = 1 if m % 2 else 0
    conj = tuple((off + i, off + k + i) for i in range(k))
    theta_pos = 0 if m % 2 else None

    monos = []
    lo = 0 if include_constant else 1
    hi = m if include_top else m - 1
    for d in range(lo, hi + 1):
        for combo in combinations(range(m), d):
            monos.append(frozenset(combo))
    index = {s: i for i, s in enumerate(monos)}
    return MonomialBasis(
        m=m,
        var_names=tuple(names),
        monomials=tuple(monos),
        index=index,
        conj_pairs=conj,
        theta=theta_pos,
    )


def _product(s1: frozenset, s2: frozenset) -> frozenset | None:
    if s1 & s2:
        return None
    return s1 | s2


def _mono_bracket(basis: MonomialBasis, s1: frozenset, s2: frozenset) -> dict:
    """Poisson bracket of two monomials as {monomial: coefficient}."""
    acc: dict = {}

    def add(term: frozenset | None):
        if term is None:
            return
        acc[term] = acc.get(term, 0) ^ 1

    for a, b in basis.conj_pairs:
        if a in s1 and b in s2:
            add(_product(s1 - {a}, s2 - {b}))
        if b in s1 and a in s2:
            add(_product(s1 - {b}, s2 - {a}))
    t = basis.theta
    if t is not None and t in s1 and t in s2:
        add(_product(s1 - {t}, s2 - {t}))
    return {s: c for s, c in acc.items() if c}


def _monomial_algebra(
    basis: MonomialBasis, drop_constants: bool, squaring_top: int = 0
) -> SuperAlgebra:
    monos = basis.monomials
    n = len(monos)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            val = 0
            for s, _ in _mono_bracket(basis, monos[i], monos[j]).items():
                if drop_constants and not s:
                    continue
                val |= 1 << basis.index[s]
            table[i][j] = val
            table[j][i] = val
    squaring = [0] * n
    if squaring_top and frozenset(range(basis.m)) in basis.index:
        squaring[basis.index[frozenset(range(basis.m))]] = 1 << basis.index[
            frozenset()
        ]
    return SuperAlgebra(
        names=tuple(basis.name(s) for s in monos),
        parity=tuple(len(s) & 1 for s in monos),
        bracket_table=tuple(tuple(r) for r in table),
        squaring=tuple(squaring),
        degrees=tuple(len(s) for s in monos),
    )


def _complement_form(basis: MonomialBasis, g: SuperAlgebra) -> BilinearForm:
    full = frozenset(range(basis.m))
    n = g.dim
    rows = [0] * n
    for i, s in enumerate(basis.monomials):
        partner = full - s
        j = basis.index.get(partner)
        if j is not None:
            rows[i] |= 1 << j
    return BilinearForm(GF2Matrix(rows, n), basis.m & 1)


def hamiltonian(m: int, derived: bool = True):
    """h(0|m) on the nonconstant monomials, or its derived algebra.

    Returns (algebra, form, basis).  The pairing form reads off the
    coefficient of the top monomial in a product; it is non-degenerate
    exactly on the derived algebra (the top monomial pairs with nothing
    once constants are gone).
    """
    if not 2 <= m <= 8:
        raise OutOfRange("hamiltonian(m) supported for 2 <= m <= 8")
    basis = monomial_basis(m, include_constant=False, include_top=True)
    g = _monomial_algebra(basis, drop_constants=True)
    if derived:
        sub = derived_subalgebra(g, 1)
        if any(v.bit_count() != 1 for v in sub):
            raise AssertionError("derived algebra is not coordinate-aligned")
        indices = sorted(v.bit_length() - 1 for v in sub)
        g = restrict_to_coordinates(g, indices)
        kept = [basis.monomials[i] for i in indices]
        basis = MonomialBasis(
            m=basis.m,
            var_names=basis.var_names,
            monomials=tuple(kept),
            index={s: i for i, s in enumerate(kept)},
            conj_pairs=basis.conj_pairs,
            theta=basis.theta,
        )
    return g, _complement_form(basis, g), basis


def poisson(m: int, m_param: int = 0):
    """The full 2^m-dimensional Poisson structure, constants included.

    For odd m this data is not a Lie superalgebra in characteristic 2 (the
    theta-diagonal of the analytic bracket cannot be encoded); it is kept to
    compare against the literal double-extension output.
    """
    if not 2 <= m <= 8:
        raise OutOfRange("poisson(m) supported for 2 <= m <= 8")
    if m_param and m % 2 == 0:
        raise OutOfRange("the squaring parameter needs odd m")
    basis = monomial_basis(m, include_constant=True, include_top=True)
    g = _monomial_algebra(basis, drop_constants=False, squaring_top=m_param)
    return g, _complement_form(basis, g), basis


def gl(p: int, q: int) -> tuple[SuperAlgebra, BilinearForm]:
    """gl(p|q) with bracket XY + YX, squaring X^2, and the trace form."""
    if p < 1 or q < 1 or p + q > 8:
        raise OutOfRange("gl(p|q) supported for p, q >= 1 and p+q <= 8")
    d = p + q
    units = [(i, j) for i in range(d) for j in range(d)]
    index = {u: k for k, u in enumerate(units)}
    n = d * d
    par = lambda i: 0 if i < p else 1

    table = [[0] * n for _ in range(n)]
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if a >= b:
                continue
            val = 0
            if j == k:
                val ^= 1 << index[(i, l)]
            if l == i:
                val ^= 1 << index[(k, j)]
            table[a][b] = val
            table[b][a] = val
    rows = [1 << index[(j, i)] for (i, j) in units]
    g = SuperAlgebra(
        names=tuple(f"E{i+1}{j+1}" for (i, j) in units),
        parity=tuple((par(i) + par(j)) & 1 for (i, j) in units),
        bracket_table=tuple(tuple(r) for r in table),
        squaring=(0,) * n,
    )
    return g, BilinearForm(GF2Matrix(rows, n), 0)


# ---------------------------------------------------------------------------
# Reference cocycle tables
# ---------------------------------------------------------------------------


def _derivation_from_map(g: SuperAlgebra, pairs: dict, parity: int) -> Derivation:
    images = [0] * g.dim
    for src, targets in pairs.items():
        val = 0
        for t in targets.split():
            val ^= 1 << g.index(t)
        images[g.index(src)] = val
    return Derivation(tuple(images), parity)


def hei_double_cocycles(g: SuperAlgebra) -> dict[str, Derivation]:
    """Outer-class representatives for hei(0|2) + its dual."""
    d = _derivation_from_map
    return {
        "D1": d(g, {"p": "qstar"}, 0),
        "D2": d(g, {"q": "qstar"}, 0),
        "D3": d(g, {"zstar": "qstar"}, 1),
        "D4": d(g, {"p": "pstar"}, 0),
        "D5": d(g, {"zstar": "pstar"}, 1),
        "D6": d(g, {"zstar": "q", "qstar": "z"}, 1),
        "D7": d(g, {"zstar": "p", "pstar": "z"}, 1),
        "D8": d(g, {"zstar": "z"}, 0),
        "D9": d(g, {"p": "p", "qstar": "qstar", "z": "z"}, 0),
        "D10": d(g, {"q": "q", "pstar": "pstar", "z": "z"}, 0),
        "D11": d(g, {"qstar": "qstar", "pstar": "pstar", "zstar": "zstar"}, 0),
    }


def ba_double_cocycles(g: SuperAlgebra) -> dict[str, Derivation]:
    d = _derivation_from_map
    return {
        "D1": d(g, {"q": "qstar"}, 0),
        "D2": d(g, {"theta": "qstar"}, 1),
        "D3": d(g, {"zstar": "qstar"}, 1),
        "D4": d(g, {"thetastar": "qstar", "q": "theta"}, 1),
        "D5": d(g, {"theta": "thetastar"}, 0),
        "D6": d(g, {"zstar": "thetastar"}, 0),
        "D7": d(g, {"zstar": "z"}, 0),
        "D8": d(g, {"z": "qstar", "q": "zstar"}, 1),
        "D9": d(g, {"q": "q", "thetastar": "thetastar", "z": "z"}, 0),
        "D10": d(g, {"qstar": "qstar", "theta": "theta", "z": "z"}, 0),
        "D11": d(
            g, {"qstar": "qstar", "thetastar": "thetastar", "zstar": "zstar"}, 0
        ),
    }


def _mono_derivation(
    g: SuperAlgebra, basis: MonomialBasis, pairs: list[tuple[str, str]], parity: int
) -> Derivation:
    images = [0] * g.dim
    for src, dst in pairs:
        images[basis.find(src)] ^= 1 << basis.find(dst)
    return Derivation(tuple(images), parity)


def h104_cocycles(g: SuperAlgebra, basis: MonomialBasis) -> dict[str, Derivation]:
    d = lambda pairs, p=0: _mono_derivation(g, basis, pairs, p)
    return {
        "D1": d(
            [
                ("xi1 xi2 eta2", "xi1"),
                ("xi1 xi2 eta1", "xi2"),
                ("xi2 eta1 eta2", "eta1"),
                ("xi1 eta1 eta2", "eta2"),
            ]
        ),
        "D2": d(
            [
                ("eta1", "xi1"),
                ("xi2 eta1", "xi1 xi2"),
                ("eta1 eta2", "xi1 eta2"),
                ("xi2 eta1 eta2", "xi1 xi2 eta2"),
            ]
        ),
        "D3": d(
            [
                ("eta2", "xi2"),
                ("xi1 eta2", "xi1 xi2"),
                ("eta1 eta2", "xi2 eta1"),
                ("xi1 eta1 eta2", "xi1 xi2 eta1"),
            ]
        ),
        "D4": d(
            [
                ("xi1", "eta1"),
                ("xi1 xi2", "xi2 eta1"),
                ("xi1 eta2", "eta1 eta2"),
                ("xi1 xi2 eta2", "xi2 eta1 eta2"),
            ]
        ),
        "D5": d(
            [
                ("xi2", "eta2"),
                ("xi1 xi2", "xi1 eta2"),
                ("xi2 eta1", "eta1 eta2"),
                ("xi1 xi2 eta1", "xi1 eta1 eta2"),
            ]
        ),
        "D6": d(
            [
                ("xi2", "xi2"),
                ("eta1", "eta1"),
                ("xi1 eta2", "xi1 eta2"),
                ("xi2 eta1", "xi2 eta1"),
                ("xi1 xi2 eta2", "xi1 xi2 eta2"),
                ("xi1 eta1 eta2", "xi1 eta1 eta2"),
            ]
        ),
        "D7": d(
            [
                ("xi2", "xi1 xi2 eta1"),
                ("xi1", "xi1 xi2 eta2"),
                ("eta2", "xi1 eta1 eta2"),
                ("eta1", "xi2 eta1 eta2"),
            ]
        ),
    }


def h105_cocycles(g: SuperAlgebra, basis: MonomialBasis) -> dict[str, Derivation]:
    """The six outer-class representatives for the derived h(0|5).

    D1..D4 are the multiplication operators xi_i d/d(eta_i) and
    eta_i d/d(xi_i); D5 is the projection on the odd part; D6 is bracketing
    with the (absent) top monomial.
    """
    rev = {nm: v for v, nm in enumerate(basis.var_names)}

    def mult_op(var: str, dvar: str) -> Derivation:
        v, dv = rev[var], rev[dvar]
        images = [0] * g.dim
        for i, s in enumerate(basis.monomials):
            if dv in s and v not in s:
                images[i] = 1 << basis.index[(s - {dv}) | {v}]
        return Derivation(tuple(images), 0)

    def parity_op() -> Derivation:
        images = [0] * g.dim
        for i, s in enumerate(basis.monomials):
            if len(s) & 1:
                images[i] = 1 << i
        return Derivation(tuple(images), 0)

    def top_bracket() -> Derivation:
        full = frozenset(range(basis.m))
        images = [0] * g.dim
        for i, s in enumerate(basis.monomials):
            val = 0
            for t, c in _mono_bracket(basis, full, s).items():
                if c and t in basis.index:
                    val ^= 1 << basis.index[t]
            images[i] = val
        return Derivation(tuple(images), 1)

    return {
        "D1": mult_op("xi1", "eta1"),
        "D2": mult_op("xi2", "eta2"),
        "D3": mult_op("eta1", "xi1"),
        "D4": mult_op("eta2", "xi2"),
        "D5": parity_op(),
        "D6": top_bracket(),
    }


def _odd_positions(g: SuperAlgebra) -> dict[int, int]:
    return {i: k for k, i in enumerate(g.odd_indices())}


def quadratic_by_pairs(
    g: SuperAlgebra, pairs: list[tuple[int, int]], diag: list[int] = ()
) -> QuadraticForm:
    """Quadratic form on the odd part given by coordinate products."""
    pos = _odd_positions(g)
    k = len(pos)
    rows = [0] * k
    for i, j in pairs:
        a, b = pos[i], pos[j]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    d = 0
    for i in diag:
        d |= 1 << pos[i]
    return QuadraticForm(k, d, GF2Matrix(rows, k))


def transport_quadratic(
    g: SuperAlgebra, alpha: QuadraticForm, pi0_images: tuple[int, ...]
) -> QuadraticForm:
    """alpha o pi0^(-1) on the odd part of g (pi0 parity-preserving)."""
    from .gf2 import bits

    odd = g.odd_indices()
    pos = {i: k for k, i in enumerate(odd)}
    n = len(odd)
    cols = [0] * n  # pi0 restricted to the odd part, in odd coordinates
    for k, i in enumerate(odd):
        img = pi0_images[i]
        c = 0
        for b in bits(img):
            c |= 1 << pos[b]
        cols[k] = c
    pmat = GF2Matrix(
        [sum(((cols[k] >> r) & 1) << k for k in range(n)) for r in range(n)], n
    )
    inv = pmat.inverse()
    diag = 0
    for k in range(n):
        pre = inv.mat_vec(1 << k)
        if alpha.evaluate(pre):
            diag |= 1 << k
    rows = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            pre_a, pre_b = inv.mat_vec(1 << a), inv.mat_vec(1 << b)
            val = (
                alpha.evaluate(pre_a ^ pre_b)
                ^ alpha.evaluate(pre_a)
                ^ alpha.evaluate(pre_b)
            )
            if val:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return QuadraticForm(n, diag, GF2Matrix(rows, n))


# ---------------------------------------------------------------------------
# Variable-substitution isometries of the monomial algebras
# ---------------------------------------------------------------------------


def substitution_map(
    g: SuperAlgebra, basis: MonomialBasis, swaps: dict[str, str]
) -> tuple[int, ...]:
    """Extend a permutation of the indeterminates to all monomials."""
    rev = {nm: v for v, nm in enumerate(basis.var_names)}
    perm = {v: v for v in range(basis.m)}
    for a, b in swaps.items():
        perm[rev[a]] = rev[b]
    images = []
    for s in basis.monomials:
        images.append(1 << basis.index[frozenset(perm[v] for v in s)])
    return tuple(images)


def h104_deg_swap(g: SuperAlgebra, basis: MonomialBasis) -> tuple[int, ...]:
    """The degree-1 <-> degree-3 involution fixing the middle monomials."""
    pairs = [
        ("xi1", "xi1 xi2 eta2"),
        ("xi2", "xi1 xi2 eta1"),
        ("eta1", "xi2 eta1 eta2"),
        ("eta2", "xi1 eta1 eta2"),
    ]
    images = [1 << i for i in range(g.dim)]
    for a, b in pairs:
        ia, ib = basis.find(a), basis.find(b)
        images[ia], images[ib] = 1 << ib, 1 << ia
    return tuple(images)


# ---------------------------------------------------------------------------
# The named catalog
# ---------------------------------------------------------------------------


@dataclass
class CatalogObject:
    algebra: SuperAlgebra
    form: BilinearForm | None
    extension: ExtensionResult | None = None
    basis: MonomialBasis | None = None


@dataclass
class CatalogEntry:
    name: str
    build: Callable[[], CatalogObject]
    sdim: tuple[int, int] | None = None
    out_dim: int | None = None
    valid: bool = True
    note: str = ""
    aliases: tuple[str, ...] = ()


def _hei_double() -> CatalogObject:
    g, b = manin_double(heisenberg_0_2())
    return CatalogObject(g, b)


def _ba_double() -> CatalogObject:
    g, b = manin_double(ba_1())
    return CatalogObject(g, b)


def _purely_odd() -> CatalogObject:
    g, b = purely_odd()
    return CatalogObject(g, b)


def _h1(m: int) -> CatalogObject:
    g, b, basis = hamiltonian(m, derived=True)
    return CatalogObject(g, b, basis=basis)


def _gl(p: int, q: int) -> CatalogObject:
    g, b = gl(p, q)
    return CatalogObject(g, b)


def _poisson(m: int, m_param: int = 0) -> CatalogObject:
    g, b, basis = poisson(m, m_param)
    return CatalogObject(g, b, basis=basis)


def hei_even_recipe(g: SuperAlgebra) -> ExtensionRecipe:
    cocycles = hei_double_cocycles(g)
    d = cocycles["D9"].add(cocycles["D10"])
    alpha = quadratic_by_pairs(
        g, [(g.index("p"), g.index("pstar")), (g.index("q"), g.index("qstar"))]
    )
    return ExtensionRecipe("evenB-evenD", d, alpha=alpha, beta_star=0)


def hei_odd_recipe(g: SuperAlgebra) -> ExtensionRecipe:
    return ExtensionRecipe("evenB-oddD", hei_double_cocycles(g)["D6"], a0=0)


def ba_even_recipe(g: SuperAlgebra) -> ExtensionRecipe:
    cocycles = ba_double_cocycles(g)
    d = cocycles["D10"].add(cocycles["D11"])
    alpha = quadratic_by_pairs(
        g,
        [
            (g.index("theta"), g.index("thetastar")),
            (g.index("z"), g.index("zstar")),
        ],
    )
    return ExtensionRecipe("evenB-evenD", d, alpha=alpha, beta_star=0)


def ba_odd_recipe(g: SuperAlgebra) -> ExtensionRecipe:
    return ExtensionRecipe("evenB-oddD", ba_double_cocycles(g)["D4"], a0=0)


def purely_odd_recipe(g: SuperAlgebra) -> ExtensionRecipe:
    d = Derivation(tuple(1 << i for i in range(2)), 0)
    alpha = quadratic_by_pairs(g, [(0, 1)])
    return ExtensionRecipe("evenB-evenD", d, alpha=alpha, beta_star=0)


def h104_alphas(g: SuperAlgebra, basis: MonomialBasis) -> dict[str, QuadraticForm]:
    f = basis.find
    return {
        "alpha1": quadratic_by_pairs(
            g,
            [
                (f("xi1 xi2 eta2"), f("xi2 eta1 eta2")),
                (f("xi1 xi2 eta1"), f("xi1 eta1 eta2")),
            ],
        ),
        "alpha2": quadratic_by_pairs(g, [(f("eta1"), f("xi2 eta1 eta2"))]),
        "alpha6": quadratic_by_pairs(
            g,
            [
                (f("xi2"), f("xi1 eta1 eta2")),
                (f("eta1"), f("xi1 xi2 eta2")),
            ],
        ),
        "alpha7": quadratic_by_pairs(
            g, [(f("xi1"), f("eta1")), (f("xi2"), f("eta2"))]
        ),
    }


def h105_alpha6(g: SuperAlgebra, basis: MonomialBasis) -> QuadraticForm:
    f = basis.find
    return quadratic_by_pairs(
        g, [(f("xi1"), f("eta1")), (f("xi2"), f("eta2"))]
    )


def _h104_extension(which: str) -> CatalogObject:
    obj = _h1(4)
    cocycles = h104_cocycles(obj.algebra, obj.basis)
    alphas = h104_alphas(obj.algebra, obj.basis)
    beta = 1 if which == "D6" else 0
    res = extend(
        obj.algebra,
        obj.form,
        ExtensionRecipe(
            "evenB-evenD",
            cocycles[which],
            alpha=alphas[f"alpha{which[1:]}"],
            beta_star=beta,
        ),
    )
    return CatalogObject(res.algebra, res.form, extension=res, basis=obj.basis)


def _h105_d1_extension() -> CatalogObject:
    obj = _h1(5)
    cocycles = h105_cocycles(obj.algebra, obj.basis)
    res = extend(
        obj.algebra, obj.form, ExtensionRecipe("oddB-evenD", cocycles["D1"])
    )
    return CatalogObject(res.algebra, res.form, extension=res, basis=obj.basis)


def _po05_extension(m_param: int) -> CatalogObject:
    # literal reference data; fails the odd-diagonal polar condition,
    # see the catalog entry note
    obj = _h1(5)
    cocycles = h105_cocycles(obj.algebra, obj.basis)
    res = extend(
        obj.algebra,
        obj.form,
        ExtensionRecipe(
            "oddB-oddD",
            cocycles["D6"],
            alpha=h105_alpha6(obj.algebra, obj.basis),
            a0=0,
            m=m_param,
        ),
        unchecked=True,
    )
    return CatalogObject(res.algebra, res.form, extension=res, basis=obj.basis)


def _simple_ext(builder, recipe_fn) -> Callable[[], CatalogObject]:
    def build():
        obj = builder()
        res = extend(obj.algebra, obj.form, recipe_fn(obj.algebra))
        return CatalogObject(res.algebra, res.form, extension=res)

    return build


_DEFECT_NOTE = (
    "literal structure from the odd-theta family; B(D(theta), theta) = 1"
    " obstructs the quadratic lift, so the data is not a Lie superalgebra"
    " (see the witness triples reported by validate/check_nis)"
)


def _entries() -> dict[str, CatalogEntry]:
    entries = [
        CatalogEntry("hei-0-2", lambda: CatalogObject(heisenberg_0_2(), None), (1, 2)),
        CatalogEntry("ba-1", lambda: CatalogObject(ba_1(), None), (1, 2)),
        CatalogEntry("hei-double", _hei_double, (2, 4), out_dim=11),
        CatalogEntry("ba-double", _ba_double, (2, 4), out_dim=11),
        CatalogEntry("purely-odd", _purely_odd, (0, 2), out_dim=4),
        CatalogEntry(
            "purely-odd-ext",
            _simple_ext(_purely_odd, purely_odd_recipe),
            (2, 2),
        ),
        CatalogEntry(
            "hei-evenD-ext", _simple_ext(_hei_double, hei_even_recipe), (4, 4)
        ),
        CatalogEntry(
            "hei-oddD-ext", _simple_ext(_hei_double, hei_odd_recipe), (2, 6)
        ),
        CatalogEntry(
            "ba-evenD-ext", _simple_ext(_ba_double, ba_even_recipe), (4, 4)
        ),
        CatalogEntry(
            "ba-oddD-ext", _simple_ext(_ba_double, ba_odd_recipe), (2, 6)
        ),
        CatalogEntry("h1-0-4", lambda: _h1(4), (6, 8), out_dim=7),
        CatalogEntry("h1-0-5", lambda: _h1(5), (15, 15), out_dim=6),
        CatalogEntry("gl-1-1", lambda: _gl(1, 1), (2, 2)),
        CatalogEntry("gl-2-2", lambda: _gl(2, 2), (8, 8), out_dim=1),
        CatalogEntry(
            "h104-D2ext",
            lambda: _h104_extension("D2"),
            (8, 8),
            out_dim=5,
            aliases=("tilde-po-0-4",),
        ),
        CatalogEntry(
            "h104-D6ext", lambda: _h104_extension("D6"), (8, 8), out_dim=1
        ),
        CatalogEntry(
            "h104-D7ext", lambda: _h104_extension("D7"), (8, 8), out_dim=3
        ),
        CatalogEntry("po-0-4", lambda: _poisson(4), (8, 8), out_dim=3),
        CatalogEntry(
            "tilde-po-0-5",
            _h105_d1_extension,
            (16, 16),
            aliases=("h105-D1ext",),
        ),
        CatalogEntry(
            "po05-m0",
            lambda: _po05_extension(0),
            (16, 16),
            valid=False,
            note=_DEFECT_NOTE,
        ),
        CatalogEntry(
            "po05-m1",
            lambda: _po05_extension(1),
            (16, 16),
            valid=False,
            note=_DEFECT_NOTE,
        ),
        CatalogEntry(
            "po-0-5",
            lambda: _poisson(5, 0),
            (16, 16),
            valid=False,
            note=_DEFECT_NOTE,
        ),
    ]
    table = {}
    for e in entries:
        table[e.name] = e
        for a in e.aliases:
            table[a] = e
    return table


_REGISTRY = None


def registry() -> dict[str, CatalogEntry]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _entries()
    return _REGISTRY


def entry_names(include_defective: bool = True) -> list[str]:
    seen = []
    for name, e in registry().items():
        if name != e.name:
            continue
        if not include_defective and not e.valid:
            continue
        seen.append(name)
    return seen


def named(name: str) -> CatalogObject:
    """Build a catalog object by its public name."""
    e = registry().get(name)
    if e is None:
        raise UnknownName(f"no catalog entry named {name!r}")
    return e.build()


def cocycles_for(name: str):
    """Named cocycles (and quadratic forms) attached to a catalog algebra."""
    if name in ("hei-double",):
        obj = named(name)
        return obj, hei_double_cocycles(obj.algebra), {}
    if name in ("ba-double",):
        obj = named(name)
        return obj, ba_double_cocycles(obj.algebra), {}
    if name in ("h1-0-4",):
        obj = named(name)
        return (
            obj,
            h104_cocycles(obj.algebra, obj.basis),
            h104_alphas(obj.algebra, obj.basis),
        )
    if name in ("h1-0-5",):
        obj = named(name)
        return (
            obj,
            h105_cocycles(obj.algebra, obj.basis),
            {"alpha6": h105_alpha6(obj.algebra, obj.basis)},
        )
    raise UnknownName(f"no cocycle table for {name!r}")
