"""
Sharp bounds for k-term unit-fraction sums
==========================================

Fix a deficiency delta and a modulus q with q*delta an integer.  Among
nondecreasing tuples (m_1, ..., m_k) of positive integers, the reciprocal
sum can land on k - delta exactly; when it falls short of k - delta it must
fall short by at least the gap r / u(s+1, q), where (s, r) comes from the
decomposition delta = s - r/q with s >= 0 and 1 <= r <= q.

The same (s, r) controls the largest lcm a tuple with sum exactly k - delta
can have: lcm <= u(s, q) / r, again sharp.  Both extremes are realized by
tuples built from Sylvester companions, and classify_equality names which
family a tuple that attains a bound belongs to.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from egyfrac import (
    canonical_q,
    classify_equality,
    enumerate_exact,
    extremal_gap_tuple,
    extremal_lcm_tuple,
    gap_amount,
    lcm_bound,
    sharp_sum_bound,
    srq_decompose,
    tuple_lcm,
    tuple_sum,
)

F = Fraction
k = 4

print("delta      (s, r, q)    sum bound          gap              lcm bound")
for delta in (F(-1, 2), F(0), F(1, 3), F(1, 2), F(1), F(3, 2), F(2)):
    q = canonical_q(delta)
    d = srq_decompose(delta, q)
    gap = gap_amount(delta, q)
    ssb = sharp_sum_bound(k, delta, q)
    lb = lcm_bound(delta, q) if delta >= 0 else None
    print(f"{str(delta):<9}  ({d.s}, {d.r}, {q})   {str(ssb):<17}  {str(gap):<15}  {lb}")

print()

# the classical instance: three unit fractions below 1 (deficiency 2) reach
# 41/42 and no further, and (2, 3, 7) is the only tuple doing so
delta, q = F(2), 1
print("sum bound for k=3, delta=2:", sharp_sum_bound(3, delta, q))
print("extremal tuple:", extremal_gap_tuple(3, delta, q))

# independent scan; denominators past 45 only move a below-1 sum further
# down from the leader 1/2 + 1/3 + 1/7
best = max(
    s
    for t in combinations_with_replacement(range(2, 46), 3)
    if (s := sum(F(1, m) for m in t)) < 1
)
print("largest 3-term sum below 1 by scan:", best)

print()

# lcm side: the class of 3-term tuples summing to exactly 2
delta, q = F(1), 1
members = enumerate_exact(3 - delta, 3)
print(f"3-term tuples with sum 2: {members}")
for t in members:
    case = classify_equality(t, delta, q)
    print(f"  {t}: lcm {tuple_lcm(t)} (bound {lcm_bound(delta, q)}), family {case.tag.name}")
print("extremal lcm tuple:", extremal_lcm_tuple(3, delta, q))

print()

# a fractional-delta gap family and a two-term lcm family, side by side:
# (1, 3) attains the sharp sum bound 4/3 for k=2, delta=1/2, and (1, 2, 6)
# attains the lcm bound 6 for k=3, delta=4/3 (s=2 with r=2 > 1)
for t, delta, q in [((1, 3), F(1, 2), 2), ((1, 2, 6), F(4, 3), 3)]:
    case = classify_equality(t, delta, q)
    print(f"classify {t} at delta={delta}: {case.tag.name}")
    assert tuple_sum(t) in (sharp_sum_bound(len(t), delta, q), len(t) - delta)
