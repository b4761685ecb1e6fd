"""
Too-supersingular disks and field degrees
=========================================

Valuations are exact rationals, never floats.
"""

from fractions import Fraction

from stabred.padic import (
    ValQ,
    disk_exponent,
    in_too_supersingular_disk,
    katz_consistency_check,
    modular_field_degree,
    tame_degree_bound,
)

for p in (5, 7, 11):
    exps = [str(disk_exponent(p, a)) for a in range(2, p)]
    print(f"p={p:>2}  exponents p/(p-1+a): {exps}")

v = ValQ(Fraction(7, 8))
print("v = 7/8 inside D(7, a=2):", in_too_supersingular_disk(v, 7, 2))
print("v = 4/5 inside D(5, a=2):", in_too_supersingular_disk(ValQ(Fraction(4, 5)), 5, 2))

print(" p  tame bound  modular degree")
for p in (5, 7, 11, 13, 17, 19, 23):
    r = (p - 1) // 2
    print(f"{p:>2}  {tame_degree_bound(p, [2] * r):>10}  {modular_field_degree(p):>14}")

print(katz_consistency_check(7).checks)
