# Morita blocks of the simply-laced Brauer algebra and the rank identity

from brauer_ade.morita import blocks, rank_check, wedderburn_sizes

# %% One block per orbit: |orbit|^2 * |W(C)| adds up to the rank

for b in blocks("D4"):
    types = " x ".join(str(t) for t in b.centralizer_types) or "trivial"
    print(b.orbit_id, b.orbit_size, types, b.group_order, b.contribution)

report = rank_check("D4")
print("total", report.total, "oracle", report.oracle_total, report.match)

# %% Matrix sizes inside each block when the centralizer is of type A

for wb in wedderburn_sizes("A4"):
    print(wb.block.orbit_id, wb.sizes if wb.available else "unknown", wb.burnside_ok)

# %% The same totals for E6 take a few seconds

print("E6 rank", rank_check("E6").total)
