# Admissible root sets and their W-orbits
#
# Walks through a small root system, closes a set of roots, and lists the
# orbits of admissible sets together with the maximal element of each orbit.

from brauer_ade.rootsys import build_root_system
from brauer_ade.admissible import closure, enumerate_all_orbits, is_admissible, roots_of
from brauer_ade.braction import act_word

# %% Positive roots of D4, lowest height first

D4 = build_root_system("D4")
print(len(D4.positive_roots), "positive roots")
for r in D4.positive_roots:
    print(" ", r, "height", sum(r))

# %% Three mutually orthogonal simple roots force a fourth root

X = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1)]
B = closure(D4, X)
print("closure:", roots_of(D4, B))
print("admissible?", is_admissible(D4, B))

# %% Orbits of admissible sets
#
# Each orbit carries a poset generated by raising and lowering moves; its
# unique maximal element is the one used for the Morita blocks.

for k, orbit in enumerate(enumerate_all_orbits("D4")):
    print(k, "size", orbit.orbit_size, "max", roots_of(D4, orbit.maximal))

# %% The monoid action on a set; words act rightmost first

A3 = build_root_system("A3")
start = closure(A3, [(1, 0, 0)])
print(roots_of(A3, act_word(A3, "E3 R2", start)))
