"""Supersingular Legendre parameters and the special deformation datum of X(2p).

Three independent descriptions of the supersingular locus are computed here:

* roots of the Hasse polynomial ``Phi_p(t) = sum_j C(r, j)^2 t^j``, r = (p-1)/2;
* vanishing of the x^(p-1) coefficient of (x(x-1)(x-t))^r, by expanding the
  power as a polynomial in x over F_q;
* naive point counting on E_t : y^2 = x(x-1)(x-t), where supersingular means
  #E(F_q) = 1 mod p.

:func:`supersingular_lambda_set` refuses to return unless the first and the
last agree on every t.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cartier import is_logarithmic
from .deformation import Signature, SpecialDeformationDatum, sdd_differential
from .field import (
    FieldElement,
    FiniteField,
    Polynomial,
    binom_mod_p,
    build_field,
    is_prime,
    poly_roots,
)

__all__ = [
    "DEFAULT_PRIME_CAP",
    "OracleDisagreement",
    "HassePolynomial",
    "LegendreCurve",
    "hasse_polynomial",
    "legendre_hasse_invariant",
    "legendre_point_count",
    "is_supersingular_by_count",
    "supersingular_lambda_set",
    "build_x2p_datum",
    "verify_x2p_theorem",
    "X2pReport",
    "check_prime",
]

DEFAULT_PRIME_CAP = 23


class OracleDisagreement(RuntimeError):
    """Two supersingularity oracles disagree; this is an implementation bug."""


def check_prime(p: int, *, minimum: int = 5, cap: int | None = DEFAULT_PRIME_CAP) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < minimum:
        raise ValueError(f"p={p} is too small; need p >= {minimum}")
    if cap is not None and p > cap:
        raise ValueError(f"p={p} exceeds the default cap {cap}")


@dataclass(frozen=True)
class HassePolynomial:
    p: int
    r: int
    poly: Polynomial

    def over(self, F: FiniteField) -> Polynomial:
        """The same polynomial with coefficients read in an extension F."""
        return Polynomial(F, self.poly.prime_field_ints())

    def coefficients(self) -> list[int]:
        return self.poly.prime_field_ints()


@dataclass(frozen=True)
class LegendreCurve:
    """y^2 = x(x-1)(x-t)."""

    t: FieldElement

    def __post_init__(self):
        if self.t.is_zero() or self.t == 1:
            raise ValueError("Legendre parameter must avoid 0 and 1")

    @property
    def field(self) -> FiniteField:
        return self.t.field

    def cubic(self) -> Polynomial:
        F = self.field
        x = Polynomial.t(F)
        return x * (x - 1) * (x - self.t)


def hasse_polynomial(p: int, *, cap: int | None = None) -> HassePolynomial:
    check_prime(p, cap=cap)
    r = (p - 1) // 2
    F = build_field(p, 1)
    poly = Polynomial(F, [binom_mod_p(r, j, p) ** 2 for j in range(r + 1)])
    return HassePolynomial(p, r, poly)


def legendre_hasse_invariant(t: FieldElement, p: int | None = None) -> FieldElement:
    """Coefficient of x^(p-1) in (x(x-1)(x-t))^((p-1)/2)."""
    p = p or t.field.p
    if p != t.field.p:
        raise ValueError("p does not match the characteristic of t")
    curve = LegendreCurve(t)
    return (curve.cubic() ** ((p - 1) // 2))[p - 1]


def _square_counts(F: FiniteField) -> list[int]:
    counts = [0] * F.q
    for y in range(F.q):
        counts[F.mul(y, y)] += 1
    return counts


_SQUARE_COUNT_CACHE: dict[tuple[int, int], list[int]] = {}


def legendre_point_count(t: FieldElement) -> int:
    """#E_t(F_q) including the point at infinity, by exhaustion over x and y."""
    F = t.field
    key = (F.p, F.k)
    if key not in _SQUARE_COUNT_CACHE:
        _SQUARE_COUNT_CACHE[key] = _square_counts(F)
    counts = _SQUARE_COUNT_CACHE[key]
    cubic = LegendreCurve(t).cubic()
    return 1 + sum(counts[cubic.eval_packed(x)] for x in range(F.q))


def is_supersingular_by_count(t: FieldElement) -> bool:
    """E_t is supersingular iff its trace of Frobenius vanishes mod p, i.e.
    #E(F_q) = q + 1 - a = 1 (mod p)."""
    return legendre_point_count(t) % t.field.p == 1


def supersingular_lambda_set(p: int, F: FiniteField | None = None, *,
                             cap: int | None = DEFAULT_PRIME_CAP,
                             cross_check: bool = True) -> list[FieldElement]:
    """Roots of Phi_p in F_{p^2} (or F), cross-checked against point counts."""
    check_prime(p, cap=cap)
    F = F or build_field(p, 2)
    phi = hasse_polynomial(p).over(F)
    roots = poly_roots(phi)
    if cross_check:
        root_set = set(roots)
        for x in F:
            if x.is_zero() or x == 1:
                continue
            if (x in root_set) != is_supersingular_by_count(x):
                raise OracleDisagreement(f"Hasse roots and point counts disagree at t={x} (p={p})")
    return roots


def build_x2p_datum(p: int, *, cap: int | None = DEFAULT_PRIME_CAP,
                    cross_check: bool = False) -> SpecialDeformationDatum:
    """z^r = Phi_p(t), omega_0 = z dt/(t(t-1)), all exponents 2, c = 1."""
    check_prime(p, cap=cap)
    F = build_field(p, 2)
    lambdas = supersingular_lambda_set(p, F, cap=cap, cross_check=cross_check)
    r = (p - 1) // 2
    return SpecialDeformationDatum(F, tuple(lambdas), Signature([2] * len(lambdas)), F.one(), degree=r)


@dataclass
class X2pReport:
    p: int
    r: int
    phi: list[int]
    lambdas: list[FieldElement]
    checks: dict[str, bool] = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "phi": self.phi,
            "lambdas": [lam.to_json() for lam in self.lambdas],
            "checks": dict(self.checks),
        }


def verify_x2p_theorem(p: int, *, cap: int | None = DEFAULT_PRIME_CAP) -> X2pReport:
    """Check the supersingular-point statements for X(2p) at the prime p."""
    t0 = time.perf_counter()
    check_prime(p, cap=cap)
    F = build_field(p, 2)
    hp = hasse_polynomial(p)
    r = hp.r
    phi = hp.over(F)
    roots = poly_roots(phi)
    root_set = set(roots)
    agree = all(
        (x in root_set) == is_supersingular_by_count(x)
        for x in F
        if not x.is_zero() and x != 1
    )
    datum = SpecialDeformationDatum(F, tuple(roots), Signature([2] * len(roots)), F.one(), degree=r)
    try:
        logarithmic = is_logarithmic(sdd_differential(datum))
    except ValueError:
        logarithmic = False
    checks = {
        "roots-match-point-count": agree,
        "root-count-equals-r": len(roots) == r and phi.is_squarefree(),
        "omega0-logarithmic": logarithmic,
        "lambdas-avoid-0-1": all(not x.is_zero() and x != 1 for x in roots),
    }
    elapsed = int((time.perf_counter() - t0) * 1000)
    return X2pReport(p, r, hp.coefficients(), roots, checks, elapsed)
