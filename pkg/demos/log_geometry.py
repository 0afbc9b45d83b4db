"""
From boundary structures to deficiency classes
==============================================

A structure here is a dimension d plus standard coefficients, each either
1 or 1 - 1/m.  Its volume-like number v and the deficiency of the tuple of
finite m's determine each other through one linear dictionary, so every
statement about unit-fraction sums translates into one about volumes:

  * if v exceeds a threshold t >= 0 with q*t integral, it exceeds it by at
    least q*(1 - frac(t)) / u(floor(t) + d + 3, q), and
  * v landing exactly on t caps the clearing index (the lcm of the finite
    m's) by u(floor(t) + d + 2, q) / (q*(1 - frac(t))).
"""

from fractions import Fraction

from egyfrac import (
    ONE,
    LogStructure,
    bpf_index,
    deficiency,
    finite,
    gap_bound,
    index_bound,
    refined_index_bound,
    volume,
)

F = Fraction

ls = LogStructure(2, (finite(2), finite(3), finite(4), ONE, ONE))
print("structure: dim 2, coefficients 1/2, 2/3, 3/4, 1, 1")
print("  volume number v =", volume(ls))
print("  deficiency of the finite part =", deficiency(ls))
print("  clearing index =", bpf_index(ls))
print()

# the dictionary in both directions: v = -(d+1) + sum of coefficients,
# deficiency = d - (#ones) + 1 + v
for dim in (1, 2, 3):
    ls = LogStructure(dim, (finite(2), finite(5), ONE))
    v = volume(ls)
    assert deficiency(ls) == dim - ls.ones_count + 1 + v
    print(f"dim {dim}: v = {v}, deficiency = {deficiency(ls)}")
print()

print("gap over t=0 in dim 1:", gap_bound(1, 0, 1))
print("gap over t=1/2 in dim 1:", gap_bound(1, F(1, 2), 2))
print("index bound, dim 1, t=0:", index_bound(1, 0, 1))
# coefficients equal to one sharpen the index: each drops the level by one
print("refined (2 ones):", refined_index_bound(1, 2, 0, 1))
print()

# dimension 1, coefficients 1/2, 2/3, 6/7: the smallest positive v there is,
# and it sits exactly on the gap bound over t = 0
ls = LogStructure(1, (finite(2), finite(3), finite(7)))
v = volume(ls)
print("dim 1, m = (2, 3, 7): v =", v)
print("  gap bound over t=0:", gap_bound(1, 0, 1), "-- attained exactly")
assert v == gap_bound(1, 0, 1)
print("  clearing index", bpf_index(ls), "with index bound",
      index_bound(1, v, v.denominator), "at t = v")
