"""Greedy unit-fraction decomposition and the splitting identity.

Greedy always terminates because the reduced numerator strictly drops at
each step, and the number of terms it emits for x with reduced denominator
q never exceeds floor(x) plus the numerator of q * frac(x).
"""

from fractions import Fraction

from egyfrac import floor_frac, greedy, split_expand, tuple_lcm, tuple_sum

F = Fraction

for x in (F(5, 6), F(9, 20), F(4, 17), F(7, 2), F(3)):
    t = greedy(x)
    fl, frac = floor_frac(x)
    bound = fl + frac.numerator
    print(f"greedy({x}) = {t}   terms {len(t)} <= {bound}")
    assert tuple_sum(t) == x

print()

# watch the numerator drop while greedy eats 4/17
x = F(4, 17)
while x:
    m = -(-x.denominator // x.numerator)  # ceil(1/x) for 0 < x <= 1
    print(f"  x = {x!s:>8}  next denominator {m}")
    x -= F(1, m)

print()

# splitting: 1/m = 1/(m+1) + 1/(m*(m+1)), so any representation with k
# terms expands into one with k+1 terms and the same sum
t = (2, 3)
for _ in range(4):
    print(f"{t}  sum {tuple_sum(t)}  lcm {tuple_lcm(t)}")
    t = split_expand(t, len(t) - 1)
print(f"{t}  sum {tuple_sum(t)}  lcm {tuple_lcm(t)}")
