"""
Supersingular Legendre curves and the Hasse polynomial
======================================================

Three independent ways to find the supersingular values of t for
E_t: y^2 = x(x-1)(x-t) agree on every t in F_{p^2}.
"""

from stabred import build_field, poly_roots
from stabred.modular import hasse_polynomial, is_supersingular_by_count, legendre_hasse_invariant

p = 7
F = build_field(p, 2)

# Phi_p(t) = sum_j binom(r, j)^2 t^j with r = (p-1)/2, little-endian
phi = hasse_polynomial(p)
print("Phi_7 coefficients:", phi.coefficients())
roots = poly_roots(phi.over(F))
print("roots in F_49:", roots)

# point counting: supersingular iff #E_t(F_49) = 1 mod 7
by_count = [t for t in F if t not in (F(0), F(1)) and is_supersingular_by_count(t)]
print("supersingular by count:", by_count)

# the coefficient of x^(p-1) in (x(x-1)(x-t))^r
by_invariant = [t for t in F if t not in (F(0), F(1)) and legendre_hasse_invariant(t).is_zero()]
print("zeros of the invariant:", by_invariant)

assert roots == by_count == by_invariant
