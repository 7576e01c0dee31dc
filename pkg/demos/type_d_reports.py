# Type D: semisimplicity obstructions and the cell poset

from brauer_ade.diagram import d_semisimplicity_report
from brauer_ade.morita import cell_label, cell_poset_D, orbit_count_D

# %% Parameters that force non-semisimplicity

for x in (1, 2, 3, "1/2"):
    r = d_semisimplicity_report(4, x)
    print(x, r.verdict, r.reason)

# %% The same test over a field of characteristic 7

print(d_semisimplicity_report(5, 3, char_e=7).verdict)

# %% Cell poset and its covering relations

P = cell_poset_D(4)
print([cell_label(c) for c in P.elements])
for hi, lo in P.hasse_edges():
    print(cell_label(hi), ">", cell_label(lo))
print("total order?", P.is_total())
print(P.to_dot())

for n in range(4, 9):
    print(n, len(cell_poset_D(n).elements), "cells,", orbit_count_D(n), "orbits")
