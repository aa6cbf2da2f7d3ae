"""Isometries between NIS superalgebras.

verify_isometry is the basis-level decision procedure (bilinearity and the
polarization argument make basis checks sufficient).  build_adapted_isometry
assembles the block maps of the four adapted-isometry constructions from
(pi0, t, nu) after checking the case's condition set.  search_isometry is a
budgeted generator-image backtracking; the adapted decision procedure
implements the linear t-forcing route used by the negative results.

Over GF(2) the scalar lambda of the adapted conditions is 1, which collapses
semi-triviality to a single affine solve: conjugating by an isometry of the
base preserves inner derivations, so an extension is adapted-isometric to an
inner-derivation extension exactly when its own derivation is inner.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .derivations import Derivation, case_parities, cohomologous
from .errors import (
    ConditionViolated,
    DimensionMismatch,
    SearchBudgetExceeded,
    UnderdeterminedMap,
)
from .extension import ExtensionRecipe, extend
from .forms import BilinearForm, QuadraticForm, evaluate_on_algebra
from .gf2 import GF2Matrix, SpanBasis, bits, solve_affine
from .superalgebra import SuperAlgebra, bracket, square_element


@dataclass(frozen=True)
class Isometry:
    images: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.images)

    def apply(self, x: int) -> int:
        y = 0
        for j in bits(x):
            y ^= self.images[j]
        return y

    def matrix(self) -> GF2Matrix:
        n = len(self.images)
        rows = [0] * n
        for j, im in enumerate(self.images):
            for i in bits(im):
                rows[i] |= 1 << j
        return GF2Matrix(rows, n)

    def inverse(self) -> "Isometry":
        inv = self.matrix().inverse()
        return Isometry(tuple(inv.mat_vec(1 << j) for j in range(self.dim)))

    def compose(self, other: "Isometry") -> "Isometry":
        return Isometry(tuple(self.apply(w) for w in other.images))


def verify_isometry(
    g1: SuperAlgebra,
    b1: BilinearForm | None,
    g2: SuperAlgebra,
    b2: BilinearForm | None,
    images: Sequence[int],
) -> tuple[bool, tuple | None]:
    """Check bracket, squaring, and form preservation on basis instances."""
    n = g1.dim
    if g2.dim != n or len(images) != n:
        raise DimensionMismatch("isometry must map equal dimensions")
    for i in range(n):
        p = g2.parity_of(images[i])
        if images[i] == 0 or p != g1.parity[i]:
            return False, ("parity", i)
    if GF2Matrix(list(images), n).rank() != n:
        return False, ("invertible",)
    pi = Isometry(tuple(images))
    for i in range(n):
        for j in range(i + 1, n):
            if pi.apply(g1.bracket_table[i][j]) != bracket(
                g2, images[i], images[j]
            ):
                return False, ("bracket", i, j)
    for i in g1.odd_indices():
        if pi.apply(g1.squaring[i]) != square_element(g2, images[i]):
            return False, ("squaring", i)
    if b1 is not None and b2 is not None:
        for i in range(n):
            for j in range(i, n):
                if b1.pair(1 << i, 1 << j) != b2.pair(images[i], images[j]):
                    return False, ("form", i, j)
    return True, None


def is_isometry(g, b, images) -> bool:
    ok, _ = verify_isometry(g, b, g, b, images)
    return ok


# ---------------------------------------------------------------------------
# Adapted isometries of double extensions
# ---------------------------------------------------------------------------


def _quadratic_equal_on_odd(
    a: SuperAlgebra, q1_eval, q2_eval
) -> tuple[bool, int | None]:
    """Compare two quadratic maps on the odd part: basis values and polars."""
    odd = a.odd_indices()
    for i in odd:
        if q1_eval(1 << i) != q2_eval(1 << i):
            return False, i
    for s, i in enumerate(odd):
        for j in odd[s + 1 :]:
            v = (1 << i) | (1 << j)
            p1 = q1_eval(v) ^ q1_eval(1 << i) ^ q1_eval(1 << j)
            p2 = q2_eval(v) ^ q2_eval(1 << i) ^ q2_eval(1 << j)
            if p1 != p2:
                return False, i
    return True, None


def build_adapted_isometry(
    a: SuperAlgebra,
    form: BilinearForm,
    recipe_src: ExtensionRecipe,
    recipe_tgt: ExtensionRecipe,
    pi0: Sequence[int],
    t: int = 0,
    nu: int = 0,
) -> Isometry:
    """The block isometry between two extensions of (a, B) from (pi0, t, nu).

    Raises ConditionViolated naming the first failing condition.  The output
    always verifies (checked), mapping source basis [a..., x, x*/e] to the
    target's.
    """
    case = recipe_src.case
    if recipe_tgt.case != case:
        raise ConditionViolated("case", None, "recipes of different cases")
    recipe_src = recipe_src.normalized()
    recipe_tgt = recipe_tgt.normalized()
    ok, w = verify_isometry(a, form, a, form, pi0)
    if not ok:
        raise ConditionViolated("pi0", w, "pi0 is not an isometry of the base")
    _, der_parity = case_parities(case)
    t_parity = 1 if case in ("evenB-oddD", "oddB-oddD") else 0
    if t and a.parity_of(t) != t_parity:
        raise ConditionViolated("t-parity", None, f"t must have parity {t_parity}")

    d_src, d_tgt = recipe_src.derivation, recipe_tgt.derivation
    pi = Isometry(tuple(pi0))
    pi_inv = pi.inverse()

    def conjugated(j: int) -> int:
        return pi_inv.apply(d_tgt.apply(pi.images[j]))

    # derivation transport: pi0^{-1} D~ pi0 = D + ad_t
    domain = (
        range(a.dim)
        if case in ("evenB-oddD", "oddB-evenD")
        else a.even_indices()
    )
    label = {
        "evenB-evenD": "Cd",
        "evenB-oddD": "Cd",
        "oddB-oddD": "3Cd",
        "oddB-evenD": "4Cd",
    }[case]
    for j in domain:
        want = d_src.images[j] ^ bracket(a, t, 1 << j)
        if conjugated(j) != want:
            raise ConditionViolated(label, (j,), "derivation transport fails")

    if case in ("evenB-evenD", "oddB-oddD"):
        alpha_s, alpha_t = recipe_src.alpha, recipe_tgt.alpha

        def lhs(v: int) -> int:
            return evaluate_on_algebra(a, alpha_t, pi.apply(v))

        def rhs(v: int) -> int:
            val = evaluate_on_algebra(a, alpha_s, v)
            sq = square_element(a, v)
            return val ^ form.pair(t, sq)

        ok, w = _quadratic_equal_on_odd(a, lhs, rhs)
        if not ok:
            raise ConditionViolated(
                "Ca" if case == "evenB-evenD" else "3Ca",
                (w,),
                "quadratic-form transport fails",
            )

    if case == "evenB-evenD":
        if (recipe_src.beta_star or 0) != (
            form.pair(t, t) ^ (recipe_tgt.beta_star or 0)
        ):
            raise ConditionViolated(
                "beta-star", None, "B(x*,x*) relation fails"
            )
    if case in ("evenB-oddD", "oddB-oddD"):
        want = (
            pi.apply(recipe_src.a0 or 0)
            ^ square_element(a, pi.apply(t))
            ^ pi.apply(d_src.apply(t))
        )
        if (recipe_tgt.a0 or 0) != want:
            raise ConditionViolated(
                "a0-transport" if case == "evenB-oddD" else "3Ce",
                None,
                "a0 transport fails",
            )
    if case == "oddB-oddD":
        alpha_s = recipe_src.alpha
        want = (
            evaluate_on_algebra(a, alpha_s, t)
            ^ form.pair(t, square_element(a, t) ^ (recipe_src.a0 or 0))
            ^ (recipe_src.m or 0)
        )
        if (recipe_tgt.m or 0) != want:
            raise ConditionViolated("3Cf", None, "the scalar m transport fails")

    n = a.dim
    xb, sb = 1 << n, 1 << (n + 1)
    images = []
    for j in range(n):
        im = pi.images[j]
        if form.pair(t, 1 << j):
            im |= xb
        images.append(im)
    images.append(xb)
    star = sb | pi.apply(t)
    if case in ("evenB-evenD", "evenB-oddD") and nu:
        star ^= xb
    images.append(star)
    result = Isometry(tuple(images))

    # constructive soundness: the produced map verifies on the two
    # extensions (guaranteed by the construction on valid input)
    src = extend(a, form, recipe_src, unchecked=True)
    tgt = extend(a, form, recipe_tgt, unchecked=True)
    ok, w = verify_isometry(
        src.algebra, src.form, tgt.algebra, tgt.form, result.images
    )
    if not ok:
        raise ConditionViolated("verify", w, "constructed map fails to verify")
    return result


# ---------------------------------------------------------------------------
# Semi-triviality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemiTriviality:
    status: str  # "semi-trivial" | "not-semi-trivial" | "unknown"
    witness_t: int | None = None
    target: ExtensionRecipe | None = None
    certificate: str = ""


def is_semi_trivial(
    a: SuperAlgebra, form: BilinearForm, recipe: ExtensionRecipe
) -> SemiTriviality:
    """Is the extension adapted-isometric to one by an inner derivation?

    Over GF(2) this reduces to D being inner: lambda = 1 and automorphism
    conjugation preserves inner derivations, so the transport condition
    pi0^{-1} ad_T pi0 = D + ad_t forces D = ad_{pi0^{-1}(T) + t}.  When D is
    inner the auxiliary data always transports: the target quadratic form
    alpha + B(t, s(.)) polarizes back to zero, the target a0 picks up s(t)
    with ad-compatibility from the squaring axiom, and beta*/m follow the
    corollary formulas.
    """
    recipe = recipe.normalized()
    d = recipe.derivation
    t = cohomologous(a, d, Derivation((0,) * a.dim, d.parity))
    if t is None:
        return SemiTriviality(
            status="not-semi-trivial",
            certificate=(
                "the affine system D = ad_t is inconsistent, and adapted"
                " isometries transport inner derivations to inner ones"
            ),
        )
    case = recipe.case
    target = None
    if case == "evenB-evenD":
        alpha = recipe.alpha

        def shifted_eval(v):
            return evaluate_on_algebra(a, alpha, v) ^ form.pair(
                t, square_element(a, v)
            )

        target = ExtensionRecipe(
            case,
            Derivation((0,) * a.dim, 0),
            alpha=_quadratic_from_eval(a, shifted_eval),
            beta_star=(recipe.beta_star or 0) ^ form.pair(t, t),
        )
    elif case == "evenB-oddD":
        target = ExtensionRecipe(
            case,
            Derivation((0,) * a.dim, 1),
            a0=(recipe.a0 or 0)
            ^ square_element(a, t)
            ^ d.apply(t),
        )
    elif case == "oddB-oddD":
        target = ExtensionRecipe(
            case,
            Derivation((0,) * a.dim, 1),
            alpha=_quadratic_from_eval(
                a,
                lambda v: evaluate_on_algebra(a, recipe.alpha, v)
                ^ form.pair(t, square_element(a, v)),
            ),
            a0=(recipe.a0 or 0) ^ square_element(a, t) ^ d.apply(t),
            m=(recipe.m or 0)
            ^ evaluate_on_algebra(a, recipe.alpha, t)
            ^ form.pair(t, square_element(a, t) ^ (recipe.a0 or 0)),
        )
    else:
        target = ExtensionRecipe(case, Derivation((0,) * a.dim, 0))
    return SemiTriviality(
        status="semi-trivial", witness_t=t, target=target.normalized()
    )


def _quadratic_from_eval(a: SuperAlgebra, fn) -> QuadraticForm:
    odd = a.odd_indices()
    k = len(odd)
    diag = 0
    for pos, i in enumerate(odd):
        if fn(1 << i):
            diag |= 1 << pos
    rows = [0] * k
    for s, i in enumerate(odd):
        for r in range(s + 1, k):
            j = odd[r]
            val = fn((1 << i) | (1 << j)) ^ fn(1 << i) ^ fn(1 << j)
            if val:
                rows[s] |= 1 << r
                rows[r] |= 1 << s
    return QuadraticForm(k, diag, GF2Matrix(rows, k))


# ---------------------------------------------------------------------------
# Bracket-closure completion of partial maps
# ---------------------------------------------------------------------------


class _PairSpan:
    """Row space of (v, w) pairs encoding a partial linear map v -> w."""

    def __init__(self, n1: int, n2: int):
        self.n1, self.n2 = n1, n2
        self.basis = SpanBasis()
        self.mask1 = (1 << n1) - 1

    def clone(self) -> "_PairSpan":
        c = _PairSpan(self.n1, self.n2)
        c.basis = SpanBasis()
        c.basis.pivot_rows = dict(self.basis.pivot_rows)
        return c

    def add(self, v: int, w: int) -> bool:
        """Insert the constraint pi(v) = w; False on inconsistency."""
        combined = self.basis.reduce(v | (w << self.n1))
        if combined and not (combined & self.mask1):
            return False  # forces 0 -> nonzero
        if combined:
            self.basis.add(combined)
        return True

    @property
    def rank(self) -> int:
        return sum(
            1 for p in self.basis.pivot_rows if p < self.n1
        )

    def image_of(self, v: int) -> int | None:
        combined = self.basis.reduce(v)
        if combined & self.mask1:
            return None
        return combined >> self.n1

    def pairs(self) -> list[tuple[int, int]]:
        out = []
        for p, row in sorted(self.basis.pivot_rows.items()):
            if p < self.n1:
                out.append((row & self.mask1, row >> self.n1))
        return out


def complete_by_bracketing(
    g1: SuperAlgebra,
    g2: SuperAlgebra,
    pairs: Sequence[tuple[int, int]],
    max_rounds: int = 64,
) -> tuple[int, ...]:
    """Extend generator images to a full map by closing under brackets
    and squarings; raises on inconsistency or underdetermination."""
    span = _PairSpan(g1.dim, g2.dim)
    frontier = []
    for v, w in pairs:
        if not span.add(v, w):
            raise ValueError("inconsistent generator images")
        frontier.append((v, w))
    known = list(pairs)
    for _ in range(max_rounds):
        if span.rank == g1.dim:
            break
        new = []
        for v, w in frontier:
            for v2, w2 in known:
                bv = bracket(g1, v, v2)
                bw = bracket(g2, w, w2)
                if bv or bw:
                    if not span.add(bv, bw):
                        raise ValueError("bracket closure is inconsistent")
                    new.append((bv, bw))
            if g1.parity_of(v) == 1 and g2.parity_of(w) == 1:
                sv, sw = square_element(g1, v), square_element(g2, w)
                if sv or sw:
                    if not span.add(sv, sw):
                        raise ValueError("squaring closure is inconsistent")
                    new.append((sv, sw))
        if not new:
            break
        known.extend(new)
        frontier = new
    if span.rank != g1.dim:
        raise UnderdeterminedMap(
            f"bracket closure determined rank {span.rank} of {g1.dim}"
        )
    images = []
    for j in range(g1.dim):
        w = span.image_of(1 << j)
        if w is None:
            raise UnderdeterminedMap("basis vector not reachable")
        images.append(w)
    return tuple(images)


# ---------------------------------------------------------------------------
# Isometry search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "not-found" | "budget-exhausted"
    isometry: Isometry | None = None
    proved: bool = False
    nodes: int = 0
    reason: str = ""


def _subalgebra_closure(g: SuperAlgebra, seeds: list[int]) -> SpanBasis:
    s = SpanBasis(seeds)
    changed = True
    while changed:
        changed = False
        vs = s.vectors()
        for x in vs:
            for y in vs:
                b = bracket(g, x, y)
                if b and s.add(b):
                    changed = True
            if g.parity_of(x) == 1:
                sq = square_element(g, x)
                if sq and s.add(sq):
                    changed = True
    return s


def _generating_sequence(g: SuperAlgebra) -> list[int]:
    """Greedy basis sequence whose subalgebra closure is all of g."""
    chosen: list[int] = []
    span = SpanBasis()
    while span.dim < g.dim:
        best, best_span, best_idx = -1, None, None
        for i in range(g.dim):
            if span.contains(1 << i):
                continue
            s = _subalgebra_closure(g, span.vectors() + [1 << i])
            if s.dim > best:
                best, best_span, best_idx = s.dim, s, i
            if s.dim == g.dim:
                break
        chosen.append(best_idx)
        span = best_span
    return chosen


def _candidate_images(
    g2: SuperAlgebra,
    b1: BilinearForm,
    b2: BilinearForm,
    v: int,
    parity: int,
    determined: list[tuple[int, int]],
    limit: int,
) -> list[int]:
    """Homogeneous candidates w with B2(w, w_k) = B1(v, v_k) for known pairs."""
    idxs = g2.even_indices() if parity == 0 else g2.odd_indices()
    rows = []
    rhs = 0
    for r, (vk, wk) in enumerate(determined):
        row = 0
        prow = b2.pair_row(wk)
        for pos, i in enumerate(idxs):
            if (prow >> i) & 1:
                row |= 1 << pos
        rows.append(row)
        if b1.pair(v, vk):
            rhs |= 1 << r
    sol = solve_affine(GF2Matrix(rows or [0], len(idxs)), rhs)
    if sol is None:
        return []
    out = []
    k = len(sol.kernel_basis)
    cap = min(1 << k, max(limit, 1))
    for count, x in enumerate(sol):
        if count >= cap:
            break
        w = 0
        for pos in bits(x):
            w |= 1 << idxs[pos]
        if w:
            out.append(w)
    return out


def search_isometry(
    g1: SuperAlgebra,
    b1: BilinearForm,
    g2: SuperAlgebra,
    b2: BilinearForm,
    budget: int = 200_000,
    seed_pairs: Sequence[tuple[int, int]] | None = None,
) -> SearchResult:
    """Backtracking over generator images with form/bracket propagation."""
    if g1.sdim != g2.sdim or b1.parity != b2.parity:
        return SearchResult(
            "not-found", proved=True, reason="superdimension or form parity differ"
        )
    gens = _generating_sequence(g1)
    seeds = {v: w for v, w in (seed_pairs or [])}
    nodes = 0

    def backtrack(level: int, span: _PairSpan, determined):
        nonlocal nodes
        if level == len(gens):
            if span.rank < g1.dim:
                return None
            images = tuple(span.image_of(1 << j) for j in range(g1.dim))
            if any(im is None for im in images):
                return None
            ok, _ = verify_isometry(g1, b1, g2, b2, images)
            return images if ok else None
        gi = gens[level]
        v = 1 << gi
        fixed = span.image_of(v)
        if fixed is not None:
            return backtrack(level + 1, span, determined)
        cands = _candidate_images(
            g2, b1, b2, v, g1.parity[gi], determined, limit=4096
        )
        seeded = seeds.get(v)
        if seeded is not None and seeded in cands:
            cands.remove(seeded)
            cands.insert(0, seeded)
        for w in cands:
            nodes += 1
            if nodes > budget:
                raise _Budget()
            child = span.clone()
            if not child.add(v, w):
                continue
            pairs_now = determined + [(v, w)]
            if not _close(g1, g2, b1, b2, child, pairs_now):
                continue
            res = backtrack(level + 1, child, pairs_now)
            if res is not None:
                return res
        return None

    try:
        images = backtrack(0, _PairSpan(g1.dim, g2.dim), [])
    except _Budget:
        return SearchResult("budget-exhausted", nodes=nodes)
    if images is None:
        return SearchResult(
            "not-found",
            nodes=nodes,
            proved=False,
            reason="generator-image search exhausted (pruned by form and"
            " bracket constraints)",
        )
    return SearchResult("found", Isometry(images), nodes=nodes)


class _Budget(Exception):
    pass


def _close(g1, g2, b1, b2, span: _PairSpan, pairs) -> bool:
    """Close the pair span under brackets/squares; check form consistency."""
    frontier = list(pairs)
    rounds = 0
    while frontier and rounds < 8:
        rounds += 1
        new = []
        items = span.pairs()
        for v, w in frontier:
            for v2, w2 in items:
                bv, bw = bracket(g1, v, v2), bracket(g2, w, w2)
                if bv or bw:
                    before = span.rank
                    if not span.add(bv, bw):
                        return False
                    if span.rank > before:
                        new.append((bv, bw))
            if g1.parity_of(v) == 1 and g2.parity_of(w) == 1:
                sv, sw = square_element(g1, v), square_element(g2, w)
                if sv or sw:
                    before = span.rank
                    if not span.add(sv, sw):
                        return False
                    if span.rank > before:
                        new.append((sv, sw))
        # form consistency across the determined pairs
        items = span.pairs()
        for i, (v, w) in enumerate(items):
            for v2, w2 in items[i:]:
                if b1.pair(v, v2) != b2.pair(w, w2):
                    return False
        frontier = new
    return True


def isometry_group(
    g: SuperAlgebra, form: BilinearForm, budget: int = 500_000
) -> list[Isometry]:
    """All isometries of (g, form); exhaustive backtracking, small dims only.

    Raises SearchBudgetExceeded rather than returning a partial group, so
    callers can rely on completeness of a returned list.
    """
    gens = _generating_sequence(g)
    found: list[Isometry] = []
    nodes = 0

    def backtrack(level: int, span: _PairSpan, determined):
        nonlocal nodes
        if level == len(gens):
            images = tuple(span.image_of(1 << j) for j in range(g.dim))
            if any(im is None for im in images):
                return
            ok, _ = verify_isometry(g, form, g, form, images)
            if ok:
                found.append(Isometry(images))
            return
        gi = gens[level]
        v = 1 << gi
        if span.image_of(v) is not None:
            backtrack(level + 1, span, determined)
            return
        for w in _candidate_images(
            g, form, form, v, g.parity[gi], determined, limit=1 << g.dim
        ):
            nodes += 1
            if nodes > budget:
                raise _Budget()
            child = span.clone()
            if not child.add(v, w):
                continue
            pairs_now = determined + [(v, w)]
            if not _close(g, g, form, form, child, pairs_now):
                continue
            backtrack(level + 1, child, pairs_now)

    try:
        backtrack(0, _PairSpan(g.dim, g.dim), [])
    except _Budget as exc:
        raise SearchBudgetExceeded(
            f"isometry-group enumeration exceeded {budget} nodes"
        ) from exc
    return found


# ---------------------------------------------------------------------------
# Adapted-mode decision for extension pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdaptedDecision:
    status: str  # "found" | "not-found-proved" | "budget-exhausted"
    isometry: Isometry | None = None
    reason: str = ""


def adapted_isometry_decision(
    a: SuperAlgebra,
    form: BilinearForm,
    recipe_src: ExtensionRecipe,
    recipe_tgt: ExtensionRecipe,
    budget: int = 200_000,
) -> AdaptedDecision:
    """Decide existence of an adapted isometry between two extensions.

    First tries the t-forcing route: when both derivations vanish on the
    even part, the transport condition forces [t, a_even] = 0 independently
    of pi0, and the pi0-free conditions (the m relation, and the a0 relation
    when both a0 vanish) can refute every admissible t.  Otherwise falls
    back to enumerating the isometry group of the base.
    """
    recipe_src = recipe_src.normalized()
    recipe_tgt = recipe_tgt.normalized()
    if recipe_src.case != recipe_tgt.case:
        return AdaptedDecision(
            "not-found-proved", reason="extension cases differ"
        )
    case = recipe_src.case
    d_s, d_t = recipe_src.derivation, recipe_tgt.derivation
    t_parity = 1 if case in ("evenB-oddD", "oddB-oddD") else 0
    t_idxs = a.odd_indices() if t_parity else a.even_indices()

    # fast positive route: pi0 = id with t solved linearly
    identity = Isometry(tuple(1 << i for i in range(a.dim)))
    for t in _solve_t(a, recipe_src, recipe_tgt, identity)[:256]:
        try:
            pi = build_adapted_isometry(
                a, form, recipe_src, recipe_tgt, identity.images, t
            )
            return AdaptedDecision("found", pi)
        except ConditionViolated:
            continue

    evens = a.even_indices()
    if all(d_s.images[j] == 0 for j in evens) and all(
        d_t.images[j] == 0 for j in evens
    ):
        # [t, a_even] = 0, independently of pi0
        row_list = []
        for j in evens:
            for k in range(a.dim):
                row = 0
                for pos, i in enumerate(t_idxs):
                    if (a.bracket_table[i][j] >> k) & 1:
                        row |= 1 << pos
                row_list.append(row)
        kernel = GF2Matrix(row_list or [0], len(t_idxs)).kernel_basis()
        if len(kernel) <= 12:
            viable = []
            for mask in range(1 << len(kernel)):
                tv = 0
                for p in bits(mask):
                    tv ^= kernel[p]
                t = 0
                for pos in bits(tv):
                    t |= 1 << t_idxs[pos]
                if _pi0_free_conditions_fail(a, form, recipe_src, recipe_tgt, t):
                    continue
                viable.append(t)
            if not viable:
                return AdaptedDecision(
                    "not-found-proved",
                    reason=(
                        "every t with [t, a_even] = 0 violates a pi0-free"
                        " condition (m / a0 / beta* transport)"
                    ),
                )
    # fall back: enumerate isometries of the base and solve for t
    if a.dim > 10:
        return AdaptedDecision(
            "budget-exhausted",
            reason="base too large to enumerate its isometry group",
        )
    try:
        group = isometry_group(a, form, budget=budget)
    except SearchBudgetExceeded:
        return AdaptedDecision("budget-exhausted")
    for pi0 in group:
        t_sol = _solve_t(a, recipe_src, recipe_tgt, pi0)
        for t in t_sol:
            try:
                pi = build_adapted_isometry(
                    a, form, recipe_src, recipe_tgt, pi0.images, t
                )
            except ConditionViolated:
                continue
            return AdaptedDecision("found", pi)
    return AdaptedDecision(
        "not-found-proved",
        reason="exhausted the isometry group of the base",
    )


def _pi0_free_conditions_fail(a, form, recipe_src, recipe_tgt, t) -> bool:
    case = recipe_src.case
    if case == "oddB-oddD":
        want = (
            evaluate_on_algebra(a, recipe_src.alpha, t)
            ^ form.pair(t, square_element(a, t) ^ (recipe_src.a0 or 0))
            ^ (recipe_src.m or 0)
        )
        if (recipe_tgt.m or 0) != want:
            return True
        if t == 0 and (recipe_src.a0 or 0) == 0 and (recipe_tgt.a0 or 0) != 0:
            return True
    if case == "evenB-evenD":
        if (recipe_src.beta_star or 0) != (
            form.pair(t, t) ^ (recipe_tgt.beta_star or 0)
        ):
            return True
    if case == "evenB-oddD":
        if t == 0 and (recipe_src.a0 or 0) == 0 and (recipe_tgt.a0 or 0) != 0:
            return True
    return False


def _solve_t(a, recipe_src, recipe_tgt, pi0: Isometry) -> list[int]:
    """All t with pi0^{-1} D~ pi0 = D + ad_t on the case's domain."""
    case = recipe_src.case
    t_parity = 1 if case in ("evenB-oddD", "oddB-oddD") else 0
    idxs = a.odd_indices() if t_parity else a.even_indices()
    pi_inv = pi0.inverse()
    domain = (
        range(a.dim)
        if case in ("evenB-oddD", "oddB-evenD")
        else a.even_indices()
    )
    rows = []
    rhs = 0
    r = 0
    for j in domain:
        target = (
            pi_inv.apply(recipe_tgt.derivation.apply(pi0.images[j]))
            ^ recipe_src.derivation.images[j]
        )
        for k in range(a.dim):
            row = 0
            for pos, i in enumerate(idxs):
                if (a.bracket_table[i][j] >> k) & 1:
                    row |= 1 << pos
            rows.append(row)
            if (target >> k) & 1:
                rhs |= 1 << r
            r += 1
    sol = solve_affine(GF2Matrix(rows or [0], len(idxs)), rhs)
    if sol is None:
        return []
    out = []
    count = 0
    for x in sol:
        count += 1
        if count > 4096:
            break
        t = 0
        for pos in bits(x):
            t |= 1 << idxs[pos]
        out.append(t)
    return out
