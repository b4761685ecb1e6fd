"""Exact valuations, supersingular disks and tame field degrees.

A point t near a lift of lambda_i is represented only by the valuation
v(t - lambda_i) of its distance to the center, normalized by v(p) = 1.  The
open supersingular disk is v > 0.  The closed too-supersingular disk inside
it is ``v >= p/(p-1+a_i)``.  For the modular datum (a_i = 2) its radius
exponent is p/(p+1).  That is the threshold at which the p-torsion of a
Legendre curve stops having a canonical subgroup.  This agreement is
documentation only; nothing here imports canonical-subgroup theory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce, total_ordering
from math import lcm
from typing import Sequence

from .deformation import Signature
from .field import build_field, is_prime
from .modular import check_prime, hasse_polynomial

__all__ = [
    "ValQ",
    "INF",
    "DiskSpec",
    "disk_exponent",
    "in_too_supersingular_disk",
    "in_supersingular_disk",
    "tame_degree_bound",
    "modular_field_degree",
    "degree_ratio",
    "katz_consistency_check",
    "hasse_valuation",
    "DiskReport",
]


@total_ordering
class ValQ:
    """An exact rational valuation, or +infinity."""

    __slots__ = ("value",)

    def __init__(self, value: Fraction | int | str | None):
        if value is None or (isinstance(value, str) and value in ("inf", "+inf")):
            self.value = None
        elif isinstance(value, float):
            raise TypeError("valuations are exact; floats are not accepted")
        else:
            self.value = Fraction(value)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _key(self):
        return (1, 0) if self.value is None else (0, self.value)

    @staticmethod
    def _wrap(other) -> "ValQ":
        return other if isinstance(other, ValQ) else ValQ(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (ValQ, Fraction, int)):
            return self._key() == ValQ._wrap(other)._key()
        return NotImplemented

    def __lt__(self, other) -> bool:
        return self._key() < ValQ._wrap(other)._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __add__(self, other) -> "ValQ":
        other = ValQ._wrap(other)
        if self.is_infinite or other.is_infinite:
            return INF
        return ValQ(self.value + other.value)

    __radd__ = __add__

    def __str__(self) -> str:
        if self.value is None:
            return "inf"
        return f"{self.value.numerator}/{self.value.denominator}"

    def __repr__(self) -> str:
        return f"ValQ({self})"


INF = ValQ(None)


@dataclass(frozen=True)
class DiskSpec:
    """The too-supersingular disk around the i-th supersingular point."""

    p: int
    a: int
    center: int = 0
    allow_degenerate: bool = False

    def __post_init__(self):
        _check_exponent(self.p, self.a, self.allow_degenerate)

    @property
    def exponent(self) -> ValQ:
        return disk_exponent(self.p, self.a, allow_degenerate=self.allow_degenerate)

    def contains(self, vdist: ValQ) -> bool:
        return in_too_supersingular_disk(vdist, self.p, self.a, allow_degenerate=self.allow_degenerate)


def _check_exponent(p: int, a: int, allow_degenerate: bool) -> None:
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    low = 1 if allow_degenerate else 2
    if not low <= a <= p - 1:
        raise ValueError(f"exponent a={a} outside [{low}, {p - 1}]")


def disk_exponent(p: int, a: int, *, allow_degenerate: bool = False) -> ValQ:
    """p/(p-1+a): the disk is |t - lambda| <= |p|^(p/(p-1+a))."""
    _check_exponent(p, a, allow_degenerate)
    return ValQ(Fraction(p, p - 1 + a))


def in_too_supersingular_disk(vdist: ValQ, p: int, a: int, *, allow_degenerate: bool = False) -> bool:
    vdist = ValQ._wrap(vdist)
    if vdist < 0:
        raise ValueError("t must be integral (distance valuation >= 0)")
    return vdist >= disk_exponent(p, a, allow_degenerate=allow_degenerate)


def in_supersingular_disk(vdist: ValQ) -> bool:
    return ValQ._wrap(vdist) > 0


def tame_degree_bound(p: int, sig: Signature | Sequence[int], *, allow_degenerate: bool = False) -> int:
    """(p-1) * lcm_i(p-1+a_i)."""
    sig = sig if isinstance(sig, Signature) else Signature(sig)
    sig.check(p, allow_degenerate)
    return (p - 1) * reduce(lcm, (p - 1 + a for a in sig.a))


def modular_field_degree(p: int, *, cap: int | None = None) -> int:
    """(p^2 - 1)/2."""
    check_prime(p, cap=cap)
    return (p * p - 1) // 2


def degree_ratio(p: int) -> Fraction:
    """tame_degree_bound(all-2 signature) / modular_field_degree."""
    r = (p - 1) // 2
    return Fraction(tame_degree_bound(p, [2] * r), modular_field_degree(p))


def hasse_valuation(vdist: ValQ, other_distances: Sequence[ValQ]) -> ValQ:
    """v(Phi~(t)) = sum_j v(t - rho_j) for monic Phi~ with roots rho_j, where
    v(t - rho_i) = vdist and the other distances are given."""
    total = ValQ._wrap(vdist)
    for v in other_distances:
        total = total + v
    return total


def _sample_valuations() -> list[ValQ]:
    vals = {Fraction(i, j) for j in range(1, 13) for i in range(0, 2 * j + 1)}
    return [ValQ(v) for v in sorted(vals)] + [INF]


@dataclass
class DiskReport:
    p: int
    threshold: ValQ
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"p": self.p, "threshold": str(self.threshold), "checks": dict(self.checks)}


def katz_consistency_check(p: int, *, cap: int | None = None) -> DiskReport:
    """Relate the a_i = 2 disk to the valuation of the Hasse polynomial.

    Checks that the exponent equals p/(p+1) and that the disk predicate
    agrees with a direct comparison on a grid of rational valuations.  It also
    checks that Phi_p has simple roots, which makes v(t - rho_j) = 0 for the
    other roots.  Then v(Phi~(t)) = v(t - rho_i) whenever 0 < v(t - rho_i) <= 1,
    so the disk can be read off the valuation of the Hasse invariant.
    """
    check_prime(p, cap=cap)
    threshold = disk_exponent(p, 2)
    report = DiskReport(p, threshold)
    report.checks["threshold-is-p/(p+1)"] = threshold == ValQ(Fraction(p, p + 1))
    report.checks["predicate-matches-threshold"] = all(
        in_too_supersingular_disk(v, p, 2) == (v >= Fraction(p, p + 1)) for v in _sample_valuations()
    )
    report.checks["boundary-inside"] = in_too_supersingular_disk(ValQ(Fraction(p, p + 1)), p, 2)
    report.checks["nested-in-supersingular-disk"] = all(
        in_supersingular_disk(v) for v in _sample_valuations() if v > 0 and in_too_supersingular_disk(v, p, 2)
    )
    F = build_field(p, 2)
    phi = hasse_polynomial(p).over(F)
    simple = phi.is_squarefree()
    report.checks["hasse-roots-simple"] = simple
    r = (p - 1) // 2
    # simple roots are residually distinct, so distances to the other roots have valuation 0
    others = [ValQ(0)] * (r - 1) if simple else [INF] * (r - 1)
    report.checks["hasse-valuation-equals-distance"] = all(
        hasse_valuation(v, others) == v for v in _sample_valuations() if 0 < v <= 1
    )
    return report
