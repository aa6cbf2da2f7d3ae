#!/usr/bin/env python3
"""Tour: from hei(0|2) to its double and both extension flavors.

Builds the Heisenberg superalgebra, doubles it against its dual, inspects
the derivation picture, and performs an even and an odd double extension,
reducing each back to check the roundtrip.
"""

from nislie.catalog import (
    hei_double_cocycles,
    hei_even_recipe,
    hei_odd_recipe,
    heisenberg_0_2,
    manin_double,
)
from nislie.derivations import compatible_subspace, find_a0, outer_derivations
from nislie.extension import extend, reduce as ext_reduce
from nislie.forms import check_nis
from nislie.superalgebra import center, validate

h = heisenberg_0_2()
print(f"hei(0|2): dim {h.dim}, sdim {h.sdim}, [p,q] = z")

a, B = manin_double(h)
print(f"double: dim {a.dim}, sdim {a.sdim}, form parity {B.parity}")
print("axioms:", validate(a).summary(a))
print("NIS:", check_nis(a, B).summary())
print("center:", ", ".join(a.format_element(v) for v in center(a)))

oe, oo = outer_derivations(a)
print(f"\nouter derivations: {oe.dim} even + {oo.dim} odd = {oe.dim + oo.dim}")

cocycles = hei_double_cocycles(a)
odd_classes = [cocycles[k] for k in ("D3", "D5", "D6", "D7")]
compat = compatible_subspace(a, B, "evenB-oddD", odd_classes)
print(f"form-compatible odd classes: dimension {compat.dim} (spanned by D6, D7)")

sol = find_a0(a, cocycles["D6"])
print(
    "a0 candidates for D6:",
    " / ".join(a.format_element(x) for x in sol),
)

for recipe, label in [
    (hei_even_recipe(a), "even derivation, new even pair (x, x*)"),
    (hei_odd_recipe(a), "odd derivation D6, new odd pair (x, x*)"),
]:
    res = extend(a, B, recipe)
    g = res.algebra
    print(f"\nextension [{label}]: sdim {g.sdim}")
    print("  axioms pass:", validate(g).passed)
    print("  NIS pass:", check_nis(g, res.form).passed)
    red = ext_reduce(g, res.form, 1 << res.x_index, recipe.case)
    rebuilt = extend(red.algebra, red.form, red.recipe)
    print(
        "  reduce + extend reproduces it bit-exactly:",
        rebuilt.algebra == g and rebuilt.form.gram == res.form.gram,
    )
