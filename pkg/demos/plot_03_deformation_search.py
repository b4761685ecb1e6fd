"""
Searching for special deformation data
======================================

Enumerate branch points lambda in F_{p^k} \\ {0, 1} and keep those whose
differential is an eigenvector of the Cartier operator.
"""

from stabred.deformation import SpecialDeformationDatum, sdd_s3_transform, sdd_search
from stabred.field import build_field

res = sdd_search(5, (2, 2), k=2)
print(f"{res.count} special tuple(s) among {res.candidates} candidates")
for tup, gamma in zip(res.tuples, res.eigenvalues):
    print("  lambdas", tup, "eigenvalue", gamma)

# the answer is stable under the anharmonic group
F = build_field(5, 2)
d = SpecialDeformationDatum(F, res.tuples[0], res.signature)
for name in ("1-t", "1/t", "t/(t-1)"):
    print(f"  {name:>8}:", sorted(sdd_s3_transform(d, name).lambdas))

# unequal exponents over the prime field
print(sdd_search(7, (4, 2), k=1).to_json())
