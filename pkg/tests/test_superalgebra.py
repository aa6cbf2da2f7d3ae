import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nislie.catalog import ba_1, heisenberg_0_2, manin_double, named
from nislie.errors import NotOdd
from nislie.gf2 import span_basis
from nislie.superalgebra import (
    SuperAlgebra,
    bracket,
    center,
    cone_contains,
    derived_subalgebra,
    find_orthogonal_decomposition,
    irreducible_flag,
    is_two_step_nilpotent,
    sharp_complement,
    special_center,
    square_element,
    squares_span,
    validate,
)
from oracles import dense_square, jacobi_defect, unvec, vec


def abelian(parities):
    n = len(parities)
    return SuperAlgebra(
        names=tuple(f"e{i}" for i in range(n)),
        parity=tuple(parities),
        bracket_table=tuple(tuple(0 for _ in range(n)) for _ in range(n)),
        squaring=(0,) * n,
    )


def flip_bracket_bit(g, i, j, k):
    table = [list(r) for r in g.bracket_table]
    table[i][j] ^= 1 << k
    table[j][i] ^= 1 << k
    return SuperAlgebra(
        g.names, g.parity, tuple(tuple(r) for r in table), g.squaring, g.degrees
    )


# --- bracket and squaring -------------------------------------------------


def test_bracket_examples(hei_double, ba_double):
    g = hei_double.algebra
    assert bracket(g, g.element("p"), g.element("q")) == g.element("z")
    assert bracket(g, g.element("p"), g.element("zstar")) == g.element("qstar")
    g2 = ba_double.algebra
    assert bracket(g2, g2.element("theta"), g2.element("q")) == g2.element("z")
    assert bracket(g2, g2.element("theta"), g2.element("zstar")) == g2.element(
        "qstar"
    )


def test_bracket_alternating(hei_double):
    g = hei_double.algebra
    rng = random.Random(0)
    for _ in range(50):
        x = rng.getrandbits(g.dim)
        assert bracket(g, x, x) == 0


def test_squaring_hei_double_formula(hei_double):
    # s(s.p + w.q + u.p* + v.q*) = s w z
    g = hei_double.algebra
    names = ("p", "q", "pstar", "qstar")
    z = g.element("z")
    for mask in range(16):
        coeffs = [(mask >> t) & 1 for t in range(4)]
        x = 0
        for c, nm in zip(coeffs, names):
            if c:
                x ^= g.element(nm)
        s, w = coeffs[0], coeffs[1]
        assert square_element(g, x) == (z if s and w else 0)


def test_squaring_ba_double_formula(ba_double):
    # s(s.theta + w.z + u.theta* + v.z*) = s v qstar
    g = ba_double.algebra
    names = ("theta", "z", "thetastar", "zstar")
    qs = g.element("qstar")
    for mask in range(16):
        coeffs = [(mask >> t) & 1 for t in range(4)]
        x = 0
        for c, nm in zip(coeffs, names):
            if c:
                x ^= g.element(nm)
        s, v = coeffs[0], coeffs[3]
        assert square_element(g, x) == (qs if s and v else 0)


def test_square_of_zero_and_parity_guard(hei_double):
    g = hei_double.algebra
    assert square_element(g, 0) == 0
    with pytest.raises(NotOdd):
        square_element(g, g.element("z"))


def test_square_matches_dense_oracle(h104):
    g = h104.algebra
    rng = random.Random(4)
    for _ in range(40):
        x = rng.getrandbits(g.dim) & g.odd_mask
        assert square_element(g, x) == unvec(dense_square(g, x))


@given(st.integers(min_value=0, max_value=(1 << 6) - 1), st.integers(min_value=0, max_value=63))
@settings(max_examples=100, deadline=None)
def test_property_polarization(xbits, ybits):
    g, _ = manin_double(heisenberg_0_2())
    x = xbits & g.odd_mask
    y = ybits & g.odd_mask
    lhs = square_element(g, x ^ y) ^ square_element(g, x) ^ square_element(g, y)
    assert lhs == bracket(g, x, y)


@given(st.integers(min_value=0, max_value=(1 << 6) - 1), st.integers(min_value=0, max_value=63))
@settings(max_examples=100, deadline=None)
def test_property_squaring_jacobi_on_elements(fbits, gbits):
    g, _ = manin_double(ba_1())
    f = fbits & g.odd_mask
    h = gbits
    lhs = bracket(g, square_element(g, f), h)
    rhs = bracket(g, f, bracket(g, f, h))
    assert lhs == rhs


# --- axiom checking --------------------------------------------------------


def test_validate_passes_on_doubles(hei_double, ba_double):
    assert validate(hei_double.algebra).passed
    assert validate(ba_double.algebra).passed


def test_validate_abelian_zero_squaring():
    assert validate(abelian([0, 1, 0, 1])).passed


def test_validate_detects_flipped_constant_with_correct_witness(hei_double):
    g = hei_double.algebra
    # drop [p, q] = z entirely: still a superalgebra, caught by check_nis
    # instead; here flip a grading-breaking entry to hit the axiom checker
    bad = flip_bracket_bit(g, g.index("p"), g.index("zstar"), g.index("z"))
    rep = validate(bad)
    assert not rep.passed
    kinds = {f.axiom for f in rep.failures}
    assert kinds & {"grading", "jacobi", "squaring-jacobi"}
    for f in rep.failures:
        if f.axiom == "jacobi":
            i, j, k = f.witness
            assert jacobi_defect(bad, i, j, k).any()


def test_validate_jacobi_witness_recomputes(h104):
    g = h104.algebra
    bad = flip_bracket_bit(g, 0, 1, 2)
    rep = validate(bad)
    assert not rep.passed
    jac = [f for f in rep.failures if f.axiom == "jacobi"]
    grading_ok = all(f.axiom != "grading" for f in rep.failures)
    if grading_ok:
        assert jac
    for f in jac[:5]:
        assert jacobi_defect(bad, *f.witness).any()


# --- structural subspaces ---------------------------------------------------


def test_derived_subalgebra_dimensions(h104, h105):
    assert len(derived_subalgebra(h104.algebra, 0)) == 14
    assert derived_subalgebra(abelian([0, 1]), 1) == []
    # the catalog entries are already the derived algebras; they are perfect
    assert len(derived_subalgebra(h104.algebra, 1)) == 14
    assert len(derived_subalgebra(h105.algebra, 1)) == 30


def test_derived_series_decreasing(hei_double):
    g = hei_double.algebra
    prev = derived_subalgebra(g, 0)
    for step in (1, 2, 3):
        cur = derived_subalgebra(g, step)
        assert len(cur) <= len(prev)
        assert span_basis(prev + cur) == span_basis(prev)
        prev = cur


def test_center_examples(hei_double, h104):
    g = hei_double.algebra
    z = center(g)
    zspan = span_basis(z)
    assert g.element("z") in set(zspan) or any(
        v == g.element("z") for v in zspan
    ) or span_basis(zspan + [g.element("z")]) == zspan
    assert len(z) == 3
    assert center(h104.algebra) == []
    ab = abelian([0, 1, 1])
    assert len(center(ab)) == 3


def test_special_center(hei_double):
    g, b = hei_double.algebra, hei_double.form
    zs, zse, zso = special_center(g, b.gram)
    assert span_basis(zs) == span_basis([g.element("z"), g.element("pstar"), g.element("qstar")])
    assert span_basis(zse) == span_basis([g.element("z")])
    ab = abelian([0, 0])
    from nislie.gf2 import GF2Matrix

    gram = GF2Matrix([0b10, 0b01], 2)
    zs, _, _ = special_center(ab, gram)
    assert len(zs) == 2  # whole space


def test_cone(h104):
    g, b = h104.algebra, h104.form
    rng = random.Random(8)
    sq = squares_span(g)
    for _ in range(30):
        x = rng.getrandbits(g.dim) & g.odd_mask
        got = cone_contains(g, b.gram, x)
        sx = square_element(g, x)
        # exhaustive loop over all odd basis t and random odd t
        expect = all(
            not b.pair(sx, square_element(g, 1 << t)) for t in g.odd_indices()
        ) and all(
            not b.pair(sx, square_element(g, rng.getrandbits(g.dim) & g.odd_mask))
            for _ in range(20)
        )
        # the span check is the authoritative one
        expect_span = all(not b.pair(sx, w) for w in sq)
        assert got == expect_span
        if got:
            assert expect
    # s(x) = 0 implies membership
    assert cone_contains(g, b.gram, 0)
    with pytest.raises(NotOdd):
        cone_contains(g, b.gram, g.element("xi1xi2"))


def test_sharp_complement_lemmas(hei_double, ba_double):
    for obj in (hei_double, ba_double):
        g, b = obj.algebra, obj.form
        assert len(sharp_complement(g, b.gram, [])) == g.dim
        comm = []
        for i in range(g.dim):
            for j in range(g.dim):
                comm.append(g.bracket_table[i][j])
        comm = span_basis([v for v in comm if v])
        zs, _, _ = special_center(g, b.gram)
        assert span_basis(sharp_complement(g, b.gram, comm)) == span_basis(zs)
        d1 = derived_subalgebra(g, 1)
        assert span_basis(b.orthogonal_complement(d1)) == span_basis(zs)


def test_two_step_nilpotency(h104):
    assert is_two_step_nilpotent(heisenberg_0_2())
    assert is_two_step_nilpotent(ba_1())
    assert is_two_step_nilpotent(abelian([0, 1, 1]))
    assert not is_two_step_nilpotent(h104.algebra)


def test_irreducibility_flag(hei_double):
    g, b = hei_double.algebra, hei_double.form
    assert irreducible_flag(g, b.gram)
    # a decomposition the single-seed heuristic does find: a 1-dim even
    # summand with B(e,e) = 1 glued to the double
    from nislie.gf2 import GF2Matrix

    n = g.dim + 1
    table = [[0] * n for _ in range(n)]
    for i in range(g.dim):
        for j in range(g.dim):
            table[i][j] = g.bracket_table[i][j]
    gsum = SuperAlgebra(
        g.names + ("w",),
        g.parity + (0,),
        tuple(tuple(r) for r in table),
        g.squaring + (0,),
    )
    gram = GF2Matrix(list(b.gram.rows) + [1 << g.dim], n)
    dec = find_orthogonal_decomposition(gsum, gram)
    assert dec is not None
    left, right = dec
    assert sorted([len(left), len(right)]) == [1, g.dim]
    assert not irreducible_flag(gsum, gram)


def test_special_center_odd_part_equals_center_odd_for_even_form(hei_double, ba_double):
    for obj in (hei_double, ba_double):
        g, b = obj.algebra, obj.form
        _, _, zso = special_center(g, b.gram)
        z = center(g)
        z_odd = span_basis([v & g.odd_mask for v in z if v & g.odd_mask])
        assert span_basis(zso) == z_odd
