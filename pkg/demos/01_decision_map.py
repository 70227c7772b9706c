#!/usr/bin/env python3
"""Walk the (p, q, r) decision map for coordinatewise multiplication.

Every triple of exponents in [1, inf] gets one of four verdicts: the action
preserves unconditional convergence, provably does not, is an open question,
or is not even defined (the product map misses lr).  This script classifies
a handful of landmark triples, sweeps a grid at fixed r, and exports the
plot-ready CSV.
"""

from uncond import ExponentTriple, classify, grid_to_csv, region_grid

landmarks = [
    (2, 2, 2),        # multipliers and series both square-summable
    (1, 1, "inf"),    # sup-norm output: always safe
    ("inf", 2, 1),    # bounded multipliers into a smaller space: tail blows up
    (3, 2, 2),        # strict gap 1/2 + 1/2 > 1/3 + 1/2: orthogonal rows defeat any constant
    (3, 3, 3),        # the open diagonal region
    (3, 3, 1),        # no exponent budget: 1 > 1/3 + 1/3, product map undefined
]

print("landmark triples")
print("-" * 72)
for p, q, r in landmarks:
    c = classify(ExponentTriple.of(p, q, r))
    print(f"  l_{p} x l_{q} -> l_{r}:  {c.verdict.value:<14} clause={c.clause.value:<18} "
          f"margin={c.margin:.4f}")

# A full sweep at r = 2.  The infinite exponent rides along as an extra
# sample on each axis; it is handled exactly (1/inf = 0), never as a large
# stand-in value.
rows = region_grid(2, p_range=(1, 4), q_range=(1, 4), step=0.5)
counts = {}
for c in rows:
    counts[c.verdict.value] = counts.get(c.verdict.value, 0) + 1

print(f"\ngrid at r=2, step 0.5: {len(rows)} points")
for verdict, count in sorted(counts.items()):
    print(f"  {verdict:<14} {count}")

csv_text = grid_to_csv(rows)
print("\nfirst CSV lines (plot-ready; same format as `uncond grid`):")
for line in csv_text.splitlines()[:6]:
    print(" ", line)

# The CLI equivalent:
#   uncond grid --r 2 --p-min 1 --p-max 4 --q-min 1 --q-max 4 --step 0.5 --out grid_r2.csv
