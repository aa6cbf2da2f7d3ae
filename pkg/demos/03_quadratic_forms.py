#!/usr/bin/env python3
"""Tour: quadratic forms over GF(2), lifts, and the Arf invariant."""

from nislie.forms import arf_invariant, darboux_form, quadratic_lifts
from nislie.gf2 import GF2Matrix

print("Darboux normal forms on 2n generators, parameter A in {0, 1}:")
for n in (1, 2, 3):
    for a in (0, 1):
        q = darboux_form(n, a)
        zeros = sum(1 for x in range(1 << q.n) if q.evaluate(x) == 0)
        print(
            f"  n={n}, A={a}: {zeros}/{1 << q.n} zeros,"
            f" democratic Arf = {arf_invariant(q)}"
        )

print("\nall lifts of a fixed polar form (free diagonal):")
polar = GF2Matrix([0b0100, 0b1000, 0b0001, 0b0010], 4)  # two hyperbolic pairs
family = quadratic_lifts(polar)
arfs = {}
for q in family:
    arfs.setdefault(arf_invariant(q), 0)
    arfs[arf_invariant(q)] += 1
print(f"  family size {1 << family.dimension}, Arf distribution {arfs}")
