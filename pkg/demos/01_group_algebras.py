"""
Indicators of group algebras
============================

For a group algebra kG the n-th indicator counts elements with g^n = 1,
read mod the characteristic.  Here both sides are computed independently.
"""

from hopfind import cyclic_group, group_algebra, indicator_sequence, load_group
from hopfind.oracle import group_indicator_count

# the cyclic group of order 4 over GF(2)
G = cyclic_group(4)
H = group_algebra(G, 2)
seq = indicator_sequence(H, -8, 8)

# trace side and counting side, index by index
for n in seq.indices:
    print(f"n = {n:3d}   nu_n = {seq[n]}   #{{g^n = 1}} mod 2 = {group_indicator_count(G, n, 2)}")

# p-groups give the p-pertinent pattern: 1 off multiples of p, 0 on them
heis = load_group("heisenberg27")
print(indicator_sequence(group_algebra(heis, 3), 1, 9).values)

# S3 over GF(2) lacks the hypotheses yet still counts 1, 4, 3, 4, 1, 6 mod 2
S3 = load_group("symmetric6")
print(indicator_sequence(group_algebra(S3, 2), 1, 8).values)

# C3 over GF(2) is semisimple: every nu_n is 3 mod 2
print(indicator_sequence(group_algebra(cyclic_group(3), 2), 1, 8).values)
