"""
Restricted enveloping algebras
==============================

u(heis) over GF(2) is connected and cocommutative.  Its coradical filtration
grades it into a truncated polynomial algebra with the same indicators.
"""

from hopfind import (
    coradical_filtration,
    graded_from_coradical,
    heisenberg_lie,
    indicator_report,
    is_commutative,
    restricted_enveloping,
)

# PBW basis of exponent < p monomials, dim p^3
H = restricted_enveloping(heisenberg_lie(2))
print(H.dim, H.labels)
print("commutative:", is_commutative(H))

# H_0 = k1, then each step adds the next PBW degree
F = coradical_filtration(H)
print("coradical dims:", F.dims)

# the graded algebra is commutative: x_i^2 = 0 for each generator
G = graded_from_coradical(H)
print("graded dims:", G.graded_dims, "commutative:", is_commutative(G.base))

# indicators survive the passage to gr_C
print(indicator_report(H, -8, 8).table())
print(indicator_report(G.base, -8, 8).sequence.values)
