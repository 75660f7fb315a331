"""
From a local algebra to a graded connected one
==============================================

Start from the dual of a p-group algebra.  Grading by the radical, then by
the coradical, then dualizing lands on a connected graded algebra, and the
indicator sequence never moves.
"""

from hopfind import (
    dual,
    graded_from_coradical,
    graded_from_jadic,
    group_algebra,
    indicator_sequence,
    load_group,
)

H = dual(group_algebra(load_group("heisenberg27"), 3))
grJ = graded_from_jadic(H)
grCJ = graded_from_coradical(grJ.base)
top = dual(grCJ.base)

print("gr_J dims:", grJ.graded_dims)
print("gr_C gr_J dims:", grCJ.graded_dims)

for label, K in [("H", H), ("gr_J H", grJ.base), ("gr_C gr_J H", grCJ.base), ("dual", top)]:
    print(f"{label:12s}", indicator_sequence(K, -6, 6).values)
