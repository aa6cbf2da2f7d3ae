"""Double extensions: the four constructors and the inverse reduction.

Each constructor adjoins a central element x and a derivation carrier
(x* or e) to a NIS superalgebra, after checking the case's conditions.
The reducer splits a 2-dimensional slice back off a given central element
and recovers the full recipe, bit-exactly on constructor output.

Case tags (form parity - derivation parity):
  evenB-evenD   x even, x* even; needs a quadratic form and beta*
  evenB-oddD    x odd, x* odd; needs a0
  oddB-oddD     x even, e odd; needs a quadratic form, a0 and the scalar m
  oddB-evenD    x odd, e even
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .derivations import Derivation, case_parities, is_derivation
from .errors import (
    CaseParityMismatch,
    ConditionViolated,
    HypothesisNotMet,
    SplitsOff,
)
from .forms import BilinearForm, QuadraticForm
from .gf2 import GF2Matrix, bits, solve_affine, span_basis
from .superalgebra import (
    SuperAlgebra,
    bracket,
    center,
    square_element,
    squares_span,
)


@dataclass(frozen=True)
class ExtensionRecipe:
    case: str
    derivation: Derivation
    alpha: QuadraticForm | None = None
    a0: int | None = None
    m: int | None = None
    beta_star: int | None = None

    def normalized(self) -> "ExtensionRecipe":
        """Fill in the case's defaults and drop inapplicable fields."""
        case = self.case
        kw = dict(alpha=None, a0=None, m=None, beta_star=None)
        if case == "evenB-evenD":
            kw["alpha"] = self.alpha
            kw["beta_star"] = self.beta_star or 0
        elif case == "evenB-oddD":
            kw["a0"] = self.a0 or 0
        elif case == "oddB-oddD":
            kw["alpha"] = self.alpha
            kw["a0"] = self.a0 or 0
            kw["m"] = self.m or 0
        elif case == "oddB-evenD":
            pass
        else:
            raise CaseParityMismatch(f"unknown case {case!r}")
        return replace(self, **kw)


@dataclass(frozen=True)
class ExtensionResult:
    algebra: SuperAlgebra
    form: BilinearForm
    x_index: int
    star_index: int
    recipe: ExtensionRecipe


def _odd_polar_matrix(g: SuperAlgebra, form: BilinearForm, d: Derivation) -> GF2Matrix:
    """B(D(.), .) restricted to the odd part, as a k x k matrix."""
    odd = g.odd_indices()
    rows = []
    for i in odd:
        row = 0
        for b, j in enumerate(odd):
            if form.pair(d.images[i], 1 << j):
                row |= 1 << b
        rows.append(row)
    return GF2Matrix(rows, len(odd))


def check_conditions(
    a: SuperAlgebra, form: BilinearForm, recipe: ExtensionRecipe
) -> None:
    """Raise ConditionViolated at the first failing case hypothesis."""
    case = recipe.case
    form_parity, der_parity = case_parities(case)
    d = recipe.derivation
    if form.parity != form_parity or d.parity != der_parity:
        raise CaseParityMismatch(
            f"case {case} expects B parity {form_parity}, D parity {der_parity}"
        )
    ok, witness = is_derivation(a, d)
    if not ok:
        raise ConditionViolated("Der", witness, "D is not a derivation")

    n = a.dim
    self_adjoint_label = {
        "evenB-evenD": "D1",
        "evenB-oddD": "2D1",
        "oddB-oddD": "3D1",
        "oddB-evenD": "4D1",
    }[case]
    for i in range(n):
        for j in range(i, n):
            if form.pair(d.images[i], 1 << j) != form.pair(1 << i, d.images[j]):
                raise ConditionViolated(
                    self_adjoint_label,
                    (i, j),
                    f"B(D {a.names[i]}, {a.names[j]}) != "
                    f"B({a.names[i]}, D {a.names[j]})",
                )

    if case in ("evenB-evenD", "oddB-oddD"):
        diag_label = "D1" if case == "evenB-evenD" else "3D1p"
        for i in a.even_indices():
            if form.pair(d.images[i], 1 << i):
                raise ConditionViolated(
                    diag_label, (i, i), f"B(D {a.names[i]}, {a.names[i]}) = 1"
                )
        alpha = recipe.alpha
        polar_label = "D3" if case == "evenB-evenD" else "3D-polar"
        if alpha is None or alpha.n != len(a.odd_indices()):
            raise ConditionViolated(
                polar_label, None, "quadratic form missing or of wrong size"
            )
        # polar forms are alternating, so this also enforces
        # B(D a, a) = 0 on the odd part
        want = _odd_polar_matrix(a, form, d)
        if alpha.polar != want:
            odd = a.odd_indices()
            for i in range(len(odd)):
                for j in range(len(odd)):
                    if alpha.polar.entry(i, j) != want.entry(i, j):
                        raise ConditionViolated(
                            polar_label,
                            (odd[i], odd[j]),
                            "polar(alpha) != B(D ., .) on the odd part",
                        )

    if der_parity == 1:
        a0 = recipe.a0 or 0
        if a0 & a.odd_mask:
            raise ConditionViolated("a0-parity", None, "a0 must be even")
        lab2, lab3 = ("2D2", "2D3") if case == "evenB-oddD" else ("3D2", "3D3")
        dd = d.compose(d)
        for j in range(n):
            if dd.images[j] != bracket(a, a0, 1 << j):
                raise ConditionViolated(
                    lab2, (j,), f"D^2 != ad_a0 at {a.names[j]}"
                )
        if d.apply(a0) != 0:
            raise ConditionViolated(lab3, None, "D(a0) != 0")


def _unique_names(base: tuple[str, ...], wanted: list[str]) -> list[str]:
    taken = set(base)
    out = []
    for w in wanted:
        name, k = w, 2
        while name in taken:
            name = f"{w}{k}"
            k += 1
        taken.add(name)
        out.append(name)
    return out


def extend(
    a: SuperAlgebra,
    form: BilinearForm,
    recipe: ExtensionRecipe,
    unchecked: bool = False,
) -> ExtensionResult:
    """Build the double extension for the recipe's case.

    unchecked=True skips the hypothesis checks and materializes the literal
    structure; the result need not satisfy the superalgebra axioms then.
    """
    recipe = recipe.normalized()
    if not unchecked:
        check_conditions(a, form, recipe)
    case = recipe.case
    form_parity, der_parity = case_parities(case)
    d = recipe.derivation
    n = a.dim
    xi, si = n, n + 1

    x_parity = 0 if case in ("evenB-evenD", "oddB-oddD") else 1
    star_parity = (x_parity + form_parity) & 1
    star_name = "xstar" if case.startswith("evenB") else "e"
    names = tuple(a.names) + tuple(_unique_names(a.names, ["x", star_name]))
    parity = tuple(a.parity) + (x_parity, star_parity)

    odd = a.odd_indices()
    odd_pos = {i: k for k, i in enumerate(odd)}
    alpha = recipe.alpha

    def x_coeff(i: int, j: int) -> int:
        # central-extension cocycle: the quadratic-form cases replace the
        # odd-odd block by the (alternating) polar form
        if alpha is not None and a.parity[i] == 1 and a.parity[j] == 1:
            return alpha.polar.entry(odd_pos[i], odd_pos[j])
        return form.pair(d.images[i], 1 << j)

    table = [[0] * (n + 2) for _ in range(n + 2)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            val = a.bracket_table[i][j]
            if x_coeff(i, j):
                val |= 1 << xi
            table[i][j] = val
    for j in range(n):
        table[si][j] = d.images[j]
        table[j][si] = d.images[j]

    squaring = [0] * (n + 2)
    for i in odd:
        val = a.squaring[i]
        if alpha is not None and alpha.evaluate(1 << odd_pos[i]):
            val |= 1 << xi
        squaring[i] = val
    if case == "evenB-oddD":
        squaring[si] = recipe.a0
    elif case == "oddB-oddD":
        squaring[si] = recipe.a0 | ((recipe.m & 1) << xi)
    # oddB-evenD: x odd with s(x) = 0; star is even

    gram_rows = [r for r in form.gram.rows]
    x_row = 1 << si
    star_row = 1 << xi
    if case == "evenB-evenD" and recipe.beta_star:
        star_row |= 1 << si
    gram_rows.append(x_row)
    gram_rows.append(star_row)

    g = SuperAlgebra(
        names=names,
        parity=parity,
        bracket_table=tuple(tuple(r) for r in table),
        squaring=tuple(squaring),
        degrees=None,
    )
    b = BilinearForm(GF2Matrix(gram_rows, n + 2), form.parity)
    return ExtensionResult(g, b, xi, si, recipe)


def extend_evenB_evenD(a, form, derivation, alpha, beta_star=0, unchecked=False):
    return extend(
        a,
        form,
        ExtensionRecipe("evenB-evenD", derivation, alpha=alpha, beta_star=beta_star),
        unchecked,
    )


def extend_evenB_oddD(a, form, derivation, a0=0, unchecked=False):
    return extend(
        a, form, ExtensionRecipe("evenB-oddD", derivation, a0=a0), unchecked
    )


def extend_oddB_oddD(a, form, derivation, alpha, a0=0, m=0, unchecked=False):
    return extend(
        a,
        form,
        ExtensionRecipe("oddB-oddD", derivation, alpha=alpha, a0=a0, m=m),
        unchecked,
    )


def extend_oddB_evenD(a, form, derivation, unchecked=False):
    return extend(a, form, ExtensionRecipe("oddB-evenD", derivation), unchecked)


# ---------------------------------------------------------------------------
# Reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionResult:
    algebra: SuperAlgebra
    form: BilinearForm
    recipe: ExtensionRecipe
    x: int
    xstar: int
    embedding: tuple[int, ...]  # g-elements realizing [a-basis..., x, xstar]


def reduction_candidates(
    g: SuperAlgebra, form: BilinearForm, case: str
) -> list[int]:
    """Basis of the subspace of central elements satisfying the hypothesis.

    The center is graded and s restricted to the odd center is additive
    (cross brackets vanish there), so every hypothesis is a linear cut.
    """
    form_parity, _ = case_parities(case)
    if form.parity != form_parity:
        return []
    z = center(g)
    sq = squares_span(g)
    x_parity = 0 if case in ("evenB-evenD", "oddB-oddD") else 1
    mask = g.even_mask if x_parity == 0 else g.odd_mask
    part = [v for v in (z_v & mask for z_v in z) if v]
    part = span_basis(part)
    if not part:
        return []

    def cut(vectors: list[int], value_lists: list[list[int]]) -> list[int]:
        # value_lists[k] = GF(2)-vector values of linear maps at vectors[k];
        # returns the combinations where every map vanishes
        width = len(vectors)
        rows: dict[int, int] = {}
        for k, values in enumerate(value_lists):
            for pos, val in enumerate(values):
                for comp in bits(val):
                    key = (pos << 12) | comp
                    rows[key] = rows.get(key, 0) | (1 << k)
        coords = GF2Matrix(list(rows.values()) or [0], width).kernel_basis()
        out = []
        for cv in coords:
            u = 0
            for k in bits(cv):
                u ^= vectors[k]
            out.append(u)
        return out

    values: list[list[int]] = []
    if case == "evenB-evenD":
        values = [[form.pair(v, w) for w in sq] for v in part]
    elif case == "oddB-oddD":
        values = [[] for _ in part]
    elif case == "evenB-oddD":
        values = [[square_element(g, v)] for v in part]
    else:  # oddB-evenD
        values = [
            [square_element(g, v)] + [form.pair(v, w) for w in sq]
            for v in part
        ]
    return cut(part, values)


def reduce(
    g: SuperAlgebra, form: BilinearForm, x: int, case: str
) -> ReductionResult:
    """Split off the D-extension along the central element x."""
    form_parity, der_parity = case_parities(case)
    if form.parity != form_parity:
        raise CaseParityMismatch("form parity does not match the case")
    n = g.dim
    x_parity = 0 if case in ("evenB-evenD", "oddB-oddD") else 1
    if x == 0 or g.parity_of(x) != x_parity:
        raise HypothesisNotMet(f"x must be nonzero of parity {x_parity}")
    for j in range(n):
        if bracket(g, x, 1 << j):
            raise HypothesisNotMet("x is not central")
    if case == "evenB-evenD":
        if any(form.pair(x, w) for w in squares_span(g)):
            raise HypothesisNotMet("x is not orthogonal to the squares")
    if case in ("evenB-oddD", "oddB-evenD"):
        if square_element(g, x) != 0:
            raise HypothesisNotMet(
                "s(x) != 0; reduce along s(x) with the even-x case instead"
            )
    if case == "oddB-evenD":
        if any(form.pair(x, w) for w in squares_span(g)):
            raise HypothesisNotMet("x is not orthogonal to the squares")
    if form.pair(x, x):
        raise SplitsOff("B(x,x) != 0, the line through x splits off")

    # dual vector of the right parity with B(x, xstar) = 1
    star_parity = (x_parity + form_parity) & 1
    star_idx = (
        g.even_indices() if star_parity == 0 else g.odd_indices()
    )
    row = 0
    xrow = form.pair_row(x)
    for a_pos, i in enumerate(star_idx):
        if (xrow >> i) & 1:
            row |= 1 << a_pos
    sol = solve_affine(GF2Matrix([row], len(star_idx)), 1)
    if sol is None:
        raise HypothesisNotMet("no dual vector pairs with x (degenerate form?)")
    xstar = 0
    for a_pos in bits(sol.particular):
        xstar |= 1 << star_idx[a_pos]

    # a = orthogonal complement of span{x, xstar}
    a_basis = GF2Matrix(
        [form.pair_row(x), form.pair_row(xstar)], n
    ).kernel_basis()
    if len(a_basis) != n - 2:
        raise HypothesisNotMet("orthogonal complement has wrong dimension")
    for v in a_basis:
        if g.parity_of(v) is None:
            raise HypothesisNotMet("complement basis is not homogeneous")

    cols = a_basis + [x, xstar]
    pmat_rows = [0] * n
    for k, col in enumerate(cols):
        for i in bits(col):
            pmat_rows[i] |= 1 << k
    p = GF2Matrix(pmat_rows, n)
    p_inv = p.inverse()

    d = n - 2
    x_bit, star_bit = 1 << d, 1 << (d + 1)
    amask = x_bit - 1

    def coords(v: int) -> int:
        return p_inv.mat_vec(v)

    def project(v: int, what: str) -> int:
        c = coords(v)
        if c & star_bit:
            raise HypothesisNotMet(f"{what} leaves the ideal K + a")
        return c

    table = [[0] * d for _ in range(d)]
    polar_rows = {}
    sub_odd = [k for k in range(d) if g.parity_of(a_basis[k]) == 1]
    odd_pos = {k: t for t, k in enumerate(sub_odd)}
    cocycle_needed = case in ("evenB-evenD", "oddB-oddD")
    for i in range(d):
        for j in range(i + 1, d):
            c = project(bracket(g, a_basis[i], a_basis[j]), "[a,a]")
            table[i][j] = c & amask
            table[j][i] = c & amask
            if (
                cocycle_needed
                and i in odd_pos
                and j in odd_pos
                and (c & x_bit)
            ):
                polar_rows[odd_pos[i]] = polar_rows.get(odd_pos[i], 0) | (
                    1 << odd_pos[j]
                )
                polar_rows[odd_pos[j]] = polar_rows.get(odd_pos[j], 0) | (
                    1 << odd_pos[i]
                )

    squaring = [0] * d
    alpha_diag = 0
    for k in sub_odd:
        c = project(square_element(g, a_basis[k]), "s(a)")
        squaring[k] = c & amask
        if cocycle_needed and (c & x_bit):
            alpha_diag |= 1 << odd_pos[k]

    d_images = []
    for k in range(d):
        c = project(bracket(g, xstar, a_basis[k]), "[xstar, a]")
        if c & x_bit:
            raise HypothesisNotMet("[xstar, a] has an x component")
        d_images.append(c & amask)

    degrees = None
    if g.degrees is not None and all(v.bit_count() == 1 for v in a_basis):
        degrees = tuple(g.degrees[v.bit_length() - 1] for v in a_basis)
    sub = SuperAlgebra(
        names=tuple(
            g.names[v.bit_length() - 1] if v.bit_count() == 1 else f"a{k}"
            for k, v in enumerate(a_basis)
        ),
        parity=tuple(
            0 if g.parity_of(v) == 0 else 1 for v in a_basis
        ),
        bracket_table=tuple(tuple(r) for r in table),
        squaring=tuple(squaring),
        degrees=degrees,
    )
    gram_rows = []
    for i in range(d):
        r = 0
        for j in range(d):
            if form.pair(a_basis[i], a_basis[j]):
                r |= 1 << j
        gram_rows.append(r)
    sub_form = BilinearForm(GF2Matrix(gram_rows, d), form.parity)
    derivation = Derivation(tuple(d_images), der_parity)

    alpha = None
    a0 = None
    m_val = None
    beta_star = None
    if cocycle_needed:
        k = len(sub_odd)
        alpha = QuadraticForm(
            k,
            alpha_diag,
            GF2Matrix([polar_rows.get(t, 0) for t in range(k)], k),
        )
    if der_parity == 1:
        c = project(square_element(g, xstar), "s(xstar)")
        a0 = c & amask
        if case == "oddB-oddD":
            m_val = 1 if c & x_bit else 0
    if case == "evenB-evenD":
        beta_star = form.pair(xstar, xstar)

    recipe = ExtensionRecipe(
        case,
        derivation,
        alpha=alpha,
        a0=a0,
        m=m_val,
        beta_star=beta_star,
    ).normalized()
    return ReductionResult(
        sub, sub_form, recipe, x, xstar, tuple(cols)
    )
