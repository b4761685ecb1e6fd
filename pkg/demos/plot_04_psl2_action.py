"""
PSL_2(p) acting on y^((p+1)/2) = x^p - x
========================================

Each matrix acts by x -> (ax+b)/(cx+d), y -> y/(cx+d)^2.
"""

from stabred import build_field
from stabred.psl2 import (
    PSL2Element,
    SuperellipticCurve,
    act_on_point,
    curve_genus,
    orbit,
    psl2_enumerate,
    verify_action_axioms,
)

p = 7
G = psl2_enumerate(p)
print("|PSL_2(7)| =", len(G), " genus =", curve_genus(p))

F = build_field(p, 2)
C = SuperellipticCurve(F)
P = C.affine_points()[10]
A = PSL2Element(p, 0, -1, 1, 0)
print("P =", P, " A.P =", act_on_point(A, P, F))
print("orbit size of P:", len(orbit(P, G, F)))

report = verify_action_axioms(p, samples=300, seed=1)
for name, ok in report.checks.items():
    print(f"  {name:<32} {ok}")
