"""Two dominance lemmas for nonincreasing positive sequences.

Prefix form: if every prefix product of x is >= the matching prefix product
of y (same length, both nonincreasing), then sum(x) >= sum(y).  Suffix form:
if every suffix sum of x is >= the matching suffix sum of y, then
prod(x) >= prod(y).  Equality holds in either conclusion exactly when
x == y entrywise, and the conclusion helpers return True for the strict
case.  Reciprocals of a nondecreasing denominator tuple are exactly such a
sequence, which is how these feed the sharp bounds.
"""

import math
import random
from fractions import Fraction

from egyfrac import (
    prefix_product_dominates,
    product_dominance_conclusion,
    random_prefix_dominated_pair,
    random_suffix_dominated_pair,
    suffix_sum_dominates,
    sum_dominance_conclusion,
)

F = Fraction

x = (3, 2, 1)
y = (2, 2, F(3, 2))
print(f"x = {x}, y = {y}")
print("prefix products dominate:", prefix_product_dominates(x, y))
print("strict sum dominance:", sum_dominance_conclusion(x, y), f"({sum(x)} > {sum(y)})")
print()

# the suffix form, on the reciprocals of (2, 4, 4) against (2, 3, 6): both
# sum to 1, and the suffix sums of the first dominate
a = tuple(F(1, m) for m in (2, 4, 4))
b = tuple(F(1, m) for m in (2, 3, 6))
print("suffix sums dominate:", suffix_sum_dominates(a, b))
print("strict product dominance:", product_dominance_conclusion(a, b),
      f"({math.prod(a)} > {math.prod(b)})")
print()

# constructive random pairs keep the hypothesis true by building y from x
# through moves that strictly shrink the compared aggregate, so the strict
# conclusion holds exactly on the draws where some move fired
rng = random.Random(11)
equal = 0
for _ in range(20000):
    x, y = random_prefix_dominated_pair(rng)
    assert sum_dominance_conclusion(x, y) == (x != y)
    equal += x == y
print(f"prefix pairs: 20000 draws, strict iff changed, {equal} were identical")

rng = random.Random(12)
equal = 0
for _ in range(20000):
    x, y = random_suffix_dominated_pair(rng)
    assert product_dominance_conclusion(x, y) == (x != y)
    equal += x == y
print(f"suffix pairs: 20000 draws, strict iff changed, {equal} were identical")
