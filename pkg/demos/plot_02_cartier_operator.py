"""
The Cartier operator on differentials
=====================================

C kills exact forms, fixes logarithmic forms and is 1/p-linear.
On the cover z^r = Phi_p(t) the form z dt/(t(t-1)) is fixed.
"""

from stabred import build_field
from stabred.cartier import (
    PlaneDifferential,
    cartier_eigenvalue,
    cartier_plane,
    exact_differential,
    is_logarithmic,
    log_differential,
)
from stabred.deformation import sdd_differential
from stabred.field import Polynomial, RationalFunction
from stabred.modular import build_x2p_datum

F = build_field(5, 2)
t = Polynomial.t(F)
f = RationalFunction(t**3 + 2 * t + F.gen(), t**2 + 1)

print("C(df)      =", cartier_plane(exact_differential(f)))
print("C(df/f)    =", cartier_plane(log_differential(f)))
print("df/f       =", log_differential(f))

# semilinearity: C(f^p w) = f C(w)
w = PlaneDifferential(RationalFunction(t**9 + 1, t - 2))
print("C(f^5 w) == f C(w):", cartier_plane(w * f**5) == cartier_plane(w) * f)

for p in (5, 7, 11, 13):
    omega = sdd_differential(build_x2p_datum(p))
    print(f"p={p:>2}  eigenvalue {cartier_eigenvalue(omega)}  logarithmic {is_logarithmic(omega)}")
