"""Special deformation data on the original component.

A datum is a list of points lambda_i in k - {0, 1}, exponents a_i with
sum(a_i) = p - 1, and a constant c.  It defines the cyclic cover
``z^(p-1) = prod (t - lambda_i)^(a_i)`` and the differential
``omega = c z dt / (t (t - 1))``.  The datum is special when omega is fixed
by the Cartier operator.

When every a_i is divisible by d = (p-1)/n the same datum can be written as a
degree-n cover ``z^n = prod (t - lambda_i)^(a_i/d)``; the modular datum uses
n = (p-1)/2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cartier import CyclicCoverDifferential, cartier_eigenvalue, is_logarithmic
from .field import FieldElement, FiniteField, Polynomial, RationalFunction, build_field

__all__ = [
    "Signature",
    "SpecialDeformationDatum",
    "ValidationReport",
    "SearchResult",
    "MOBIUS_MAPS",
    "sdd_validate",
    "sdd_differential",
    "sdd_is_special",
    "sdd_eigenvalue",
    "normalizing_constant",
    "sdd_search",
    "sdd_s3_transform",
    "SEARCH_FIELD_BOUND",
    "SEARCH_CANDIDATE_BOUND",
]

SEARCH_FIELD_BOUND = 10_000
SEARCH_CANDIDATE_BOUND = 250_000


@dataclass(frozen=True)
class Signature:
    """Exponents (a_1, ..., a_r) of the cover z^(p-1) = prod (t - lambda_i)^(a_i)."""

    a: tuple[int, ...]

    def __init__(self, a: Iterable[int]):
        object.__setattr__(self, "a", tuple(int(x) for x in a))

    @classmethod
    def parse(cls, text: str) -> "Signature":
        return cls(int(x) for x in text.split(",") if x.strip())

    def __len__(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def violations(self, p: int, allow_degenerate: bool = False) -> list[str]:
        out = []
        if not self.a:
            out.append("signature-empty")
        if sum(self.a) != p - 1:
            out.append("signature-sum")
        low = 1 if allow_degenerate else 2
        if any(not low <= x <= p - 1 for x in self.a):
            out.append("exponent-range")
        return out

    def check(self, p: int, allow_degenerate: bool = False) -> None:
        bad = self.violations(p, allow_degenerate)
        if "signature-sum" in bad:
            raise ValueError(f"signature sum {sum(self.a)} != p-1 = {p - 1}")
        if bad:
            lo = 1 if allow_degenerate else 2
            raise ValueError(f"signature {list(self.a)} invalid for p={p} ({', '.join(bad)}; need {lo} <= a_i <= {p - 1})")

    def __str__(self) -> str:
        return ",".join(map(str, self.a))


@dataclass(frozen=True)
class SpecialDeformationDatum:
    """Candidate special deformation datum.

    ``c=None`` means search mode: the constant is left to the algebraic
    closure and specialness is tested as "Cartier eigenvector with nonzero
    eigenvalue".  ``degree`` is the cover degree n; it defaults to p - 1.
    """

    F: FiniteField
    lambdas: tuple[FieldElement, ...]
    sig: Signature
    c: FieldElement | None = None
    degree: int | None = None
    allow_degenerate: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        if not isinstance(self.sig, Signature):
            object.__setattr__(self, "sig", Signature(self.sig))
        if self.degree is None:
            object.__setattr__(self, "degree", self.F.p - 1)
        for lam in self.lambdas:
            if not isinstance(lam, FieldElement) or lam.field is not self.F:
                raise TypeError("lambdas must be elements of the datum's field")
        if self.c is not None and (not isinstance(self.c, FieldElement) or self.c.field is not self.F):
            raise TypeError("c must be an element of the datum's field")

    @property
    def p(self) -> int:
        return self.F.p

    @property
    def variant(self) -> str:
        return "p-1" if self.degree == self.p - 1 else f"degree-{self.degree}"

    def cover_exponents(self) -> tuple[int, ...]:
        d, rem = divmod(self.p - 1, self.degree)
        if rem or any(a % d for a in self.sig.a):
            raise ValueError(f"degree {self.degree} incompatible with signature {self.sig}")
        return tuple(a // d for a in self.sig.a)

    def cover_polynomial(self) -> Polynomial:
        return Polynomial.from_roots(self.F, self.lambdas, self.cover_exponents())

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.F.k,
            "modulus": list(self.F.modulus),
            "lambdas": [lam.to_json() for lam in self.lambdas],
            "signature": list(self.sig.a),
            "c": None if self.c is None else self.c.to_json(),
            "degree-variant": self.variant,
            "degree": self.degree,
        }


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def sdd_validate(d: SpecialDeformationDatum) -> ValidationReport:
    """Check every datum constraint and name each violated one."""
    bad = list(d.sig.violations(d.p, d.allow_degenerate))
    if len(d.lambdas) != len(d.sig):
        bad.append("length-mismatch")
    if len(set(d.lambdas)) != len(d.lambdas):
        bad.append("lambdas-distinct")
    if any(lam.is_zero() or lam == 1 for lam in d.lambdas):
        bad.append("lambdas-avoid-0-1")
    if d.c is not None and d.c.is_zero():
        bad.append("c-nonzero")
    degree_ok = True
    try:
        d.cover_exponents()
    except ValueError:
        degree_ok = False
        bad.append("degree-compatible")
    if d.lambdas and not Polynomial.from_roots(d.F, d.lambdas).is_squarefree():
        bad.append("squarefree")
    if degree_ok and d.degree % d.p == 0:
        bad.append("degree-prime-to-p")
    return ValidationReport(bad)


def _require_valid(d: SpecialDeformationDatum) -> None:
    report = sdd_validate(d)
    if not report.valid:
        raise ValueError(f"invalid deformation datum: {', '.join(report.violations)}")


def sdd_differential(d: SpecialDeformationDatum) -> CyclicCoverDifferential:
    """omega = c z dt/(t(t-1)) on the datum's cover (c = 1 in search mode)."""
    _require_valid(d)
    F = d.F
    t = Polynomial.t(F)
    c = d.c if d.c is not None else F.one()
    h = RationalFunction(Polynomial(F, [c]), t * (t - 1))
    return CyclicCoverDifferential(d.degree, d.cover_polynomial(), 1 % d.degree, h)


def sdd_eigenvalue(d: SpecialDeformationDatum) -> FieldElement | None:
    return cartier_eigenvalue(sdd_differential(d))


def sdd_is_special(d: SpecialDeformationDatum) -> bool:
    w = sdd_differential(d)
    if d.c is not None:
        return is_logarithmic(w)
    gamma = cartier_eigenvalue(w)
    return gamma is not None and not gamma.is_zero()


def normalizing_constant(gamma: FieldElement) -> FieldElement | None:
    """A c in the field with C(c w) = c w, given C(w) = gamma w.

    C(c w) = c^(1/p) gamma w, so c must satisfy c^(p-1) = gamma^p.  Returns the
    smallest such c in canonical order, or None if it needs a field extension.
    """
    F = gamma.field
    if gamma.is_zero():
        return None
    target = gamma ** F.p
    for x in sorted(F):
        if x and x ** (F.p - 1) == target:
            return x
    return None


# ---------------------------------------------------------------------------
# S_3 action on the branch locus {0, 1, oo}

def _id(x):
    return x


MOBIUS_MAPS = {
    "id": _id,
    "1-t": lambda x: 1 - x,
    "1/t": lambda x: x.inverse(),
    "t/(t-1)": lambda x: x / (x - 1),
    "1/(1-t)": lambda x: (1 - x).inverse(),
    "(t-1)/t": lambda x: (x - 1) / x,
}


def sdd_s3_transform(d: SpecialDeformationDatum, sigma: str) -> SpecialDeformationDatum:
    """Move the lambdas by one of the six Mobius maps permuting 0, 1, oo."""
    _require_valid(d)
    try:
        fn = MOBIUS_MAPS[sigma]
    except KeyError:
        raise ValueError(f"unknown permutation {sigma!r}; choose from {sorted(MOBIUS_MAPS)}") from None
    new = []
    for lam in d.lambdas:
        if lam.is_zero() or lam == 1:
            raise ValueError(f"lambda {lam} maps into the branch locus")
        new.append(fn(lam))
    return SpecialDeformationDatum(d.F, tuple(new), d.sig, d.c, d.degree, d.allow_degenerate)


# ---------------------------------------------------------------------------


@dataclass
class SearchResult:
    p: int
    k: int
    signature: Signature
    tuples: list[tuple[FieldElement, ...]]
    candidates: int
    eigenvalues: list[FieldElement] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.tuples)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "signature": list(self.signature.a),
            "tuples": [[lam.to_json() for lam in tup] for tup in self.tuples],
            "eigenvalues": [g.to_json() for g in self.eigenvalues],
            "count": self.count,
            "candidates": self.candidates,
        }


def _candidate_tuples(points: Sequence[FieldElement], sig: Signature):
    """Assignments of distinct points to exponents, one per unordered choice.

    Exponents are grouped by value; inside a group the points are chosen as a
    sorted combination, so each geometric configuration appears exactly once.
    """
    groups: list[tuple[int, int]] = []  # (exponent, multiplicity), in signature order
    for a in sig.a:
        if groups and groups[-1][0] == a:
            groups[-1] = (a, groups[-1][1] + 1)
        else:
            groups.append((a, 1))

    def rec(i, used):
        if i == len(groups):
            yield ()
            return
        avail = [x for x in points if x not in used]
        for combo in itertools.combinations(avail, groups[i][1]):
            for rest in rec(i + 1, used | set(combo)):
                yield combo + rest

    yield from rec(0, frozenset())


def _count_candidates(npoints: int, sig: Signature) -> int:
    from math import comb

    total, left = 1, npoints
    counts: dict[int, int] = {}
    for a in sig.a:
        counts[a] = counts.get(a, 0) + 1
    for mult in counts.values():
        total *= comb(left, mult)
        left -= mult
    return total


def sdd_search(p: int, sig: Signature | Sequence[int], k: int = 1, *,
               allow_degenerate: bool = False, degree: int | None = None) -> SearchResult:
    """All lambda-configurations whose differential is a Cartier eigenvector
    with nonzero eigenvalue, by exhaustion over F_{p^k} - {0, 1}.

    The signature is put in non-increasing order first; tuples come back in
    canonical order (sorted by serialized coefficient vectors).
    """
    sig = Signature(sorted(Signature(sig).a, reverse=True))
    sig.check(p, allow_degenerate)
    F = build_field(p, k)
    if F.q > SEARCH_FIELD_BOUND:
        raise ValueError(f"search space too large: p^k = {F.q} exceeds the bound {SEARCH_FIELD_BOUND}")
    points = sorted(x for x in F if not x.is_zero() and x != 1)
    total = _count_candidates(len(points), sig)
    if total > SEARCH_CANDIDATE_BOUND:
        raise ValueError(f"search space too large: {total} candidate tuples exceed the bound {SEARCH_CANDIDATE_BOUND}")
    found, gammas = [], []
    for tup in _candidate_tuples(points, sig):
        d = SpecialDeformationDatum(F, tup, sig, None, degree, allow_degenerate)
        gamma = sdd_eigenvalue(d)
        if gamma is not None and not gamma.is_zero():
            found.append(tup)
            gammas.append(gamma)
    order = sorted(range(len(found)), key=lambda i: [lam.coeffs for lam in found[i]])
    return SearchResult(p, k, sig, [found[i] for i in order], total, [gammas[i] for i in order])


def canonical_tuple(tup: Sequence[FieldElement], sig: Signature) -> tuple[FieldElement, ...]:
    """Sort lambdas within each block of equal exponents."""
    out, i = [], 0
    a = sig.a
    while i < len(a):
        j = i
        while j < len(a) and a[j] == a[i]:
            j += 1
        out.extend(sorted(tup[i:j]))
        i = j
    return tuple(out)
