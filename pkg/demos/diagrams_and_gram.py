# Brauer diagrams, loop counting and Gram determinants of the cell layers

from fractions import Fraction

from brauer_ade.diagram import (
    all_diagrams, check_relations, compose, diagram_E, gram_det, semisimple_at, z_set,
)

# %% Stacking two cups closes a loop

E1 = diagram_E(1, 4)
product, loops = compose(E1, E1)
print(product, "loops:", loops)
print(len(all_diagrams(4)), "diagrams on 4 strands")

# %% Defining relations hold in the diagram algebra

for name, ok in check_relations(4).items():
    print(f"{name:20s} {ok}")

# %% Gram determinants per layer, as polynomials in delta

for m in range(2, 6):
    for t in range(1, m // 2 + 1):
        d = gram_det(m, t)
        print(m, t, [str(r) for r in sorted(d.rational_roots())])

# %% Semisimplicity at chosen parameters, checked against the trace form

for x in (Fraction(3), Fraction(1), Fraction(-2), Fraction(1, 2)):
    v = semisimple_at(4, x, with_oracle=True)
    print(x, "semisimple" if v.semisimple else f"fails at {v.vanishing}", v.oracle_agrees)

print("Z(5) =", z_set(5))
