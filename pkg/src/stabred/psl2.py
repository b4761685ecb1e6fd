"""PSL_2(p) acting on the curve y^((p+1)/2) = x^p - x.

A matrix [[a, b], [c, d]] of determinant 1 sends (x, y) to
((ax + b)/(cx + d), y/(cx + d)^2).  Because 2N = p + 1 for N = (p+1)/2 and
``((ax+b)/(cx+d))^p - (ax+b)/(cx+d) = (x^p - x)/(cx+d)^(p+1)`` when ad - bc = 1,
the image lies on the curve again.

Projective convention: the curve has one point over x = oo (gcd(N, p) = 1),
written ``CurvePoint.infinity()``.  Affine points with cx + d = 0 have x in F_p,
hence y = 0, and go to infinity.  Infinity goes to (a/c, 0), or to itself when
c = 0.  The p + 1 points with y = 0 or x = oo are thus permuted like P^1(F_p).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .field import FieldElement, FiniteField, Polynomial, RationalFunction, build_field, is_prime

__all__ = [
    "PSL2Element",
    "SuperellipticCurve",
    "CurvePoint",
    "psl2_enumerate",
    "psl2_compose",
    "psl2_inverse",
    "act_on_point",
    "act_by_matrix",
    "symbolic_preserves_curve",
    "verify_action_axioms",
    "ActionReport",
    "curve_genus",
    "orbit",
]


def _canonical(p: int, a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    entries = (a % p, b % p, c % p, d % p)
    lead = next(x for x in entries if x)
    if lead > (p - 1) // 2:
        entries = tuple((-x) % p for x in entries)
    return entries


@dataclass(frozen=True, order=True)
class PSL2Element:
    """Class of +-[[a, b], [c, d]] in PSL_2(F_p).

    The stored representative has its first nonzero entry (scanning a, b, c, d)
    in [1, (p-1)/2].
    """

    p: int
    a: int
    b: int
    c: int
    d: int

    def __init__(self, p: int, a: int, b: int, c: int, d: int):
        if (a * d - b * c) % p != 1:
            raise ValueError(f"determinant of [[{a},{b}],[{c},{d}]] is not 1 mod {p}")
        for name, value in zip("pabcd", (p, *_canonical(p, a, b, c, d))):
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls, p: int) -> "PSL2Element":
        return cls(p, 1, 0, 0, 1)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def __matmul__(self, other: "PSL2Element") -> "PSL2Element":
        return psl2_compose(self, other)

    def to_json(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __repr__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]] mod {self.p}"


def psl2_enumerate(p: int) -> list[PSL2Element]:
    """All p(p^2-1)/2 elements of PSL_2(F_p), sorted by canonical entries."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    seen = set()
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            seen.add(_canonical(p, a, b, c, d))
    return [PSL2Element(p, *e) for e in sorted(seen)]


def psl2_compose(A: PSL2Element, B: PSL2Element) -> PSL2Element:
    if A.p != B.p:
        raise ValueError(f"cannot compose elements of PSL_2({A.p}) and PSL_2({B.p})")
    p = A.p
    return PSL2Element(
        p,
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def psl2_inverse(A: PSL2Element) -> PSL2Element:
    return PSL2Element(A.p, A.d, -A.b, -A.c, A.a)


@dataclass(frozen=True)
class SuperellipticCurve:
    """y^N = x^p - x with N = (p+1)/2, over F_{p^k}."""

    F: FiniteField

    @property
    def p(self) -> int:
        return self.F.p

    @property
    def N(self) -> int:
        return (self.F.p + 1) // 2

    def f(self) -> Polynomial:
        x = Polynomial.t(self.F)
        return x**self.p - x

    def contains(self, P: "CurvePoint") -> bool:
        if P.is_infinity:
            return True
        return P.y ** self.N == P.x ** self.p - P.x

    def affine_points(self) -> list["CurvePoint"]:
        """Every affine point, by exhaustion over y (one N-th power per y)."""
        F = self.F
        by_value: dict[int, list[int]] = {}
        for y in range(F.q):
            by_value.setdefault(F.power(y, self.N), []).append(y)
        pts = []
        for x in range(F.q):
            v = F.sub(F.power(x, self.p), x)
            for y in by_value.get(v, ()):
                pts.append(CurvePoint(F.element(x), F.element(y)))
        return pts


@dataclass(frozen=True)
class CurvePoint:
    x: FieldElement | None
    y: FieldElement | None

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_json(self):
        if self.is_infinity:
            return "inf"
        return [self.x.to_json(), self.y.to_json()]

    def __repr__(self) -> str:
        return "(oo)" if self.is_infinity else f"({self.x}, {self.y})"


def act_by_matrix(matrix, P: CurvePoint, F: FiniteField | None = None) -> CurvePoint:
    """Apply the raw matrix ((a, b), (c, d)) to P without canonicalizing signs."""
    (a, b), (c, d) = matrix
    if P.is_infinity:
        if F is None:
            raise ValueError("field needed to act on the point at infinity")
        if c % F.p == 0:
            return P
        return CurvePoint(F(a) / F(c), F.zero())
    F = P.x.field
    den = P.x * c + d
    if den.is_zero():
        return CurvePoint.infinity()
    return CurvePoint((P.x * a + b) / den, P.y / (den * den))


def act_on_point(A: PSL2Element, P: CurvePoint, F: FiniteField | None = None) -> CurvePoint:
    if F is not None and F.p != A.p:
        raise ValueError("group and curve have different characteristics")
    return act_by_matrix(((A.a, A.b), (A.c, A.d)), P, F)


def symbolic_preserves_curve(A: PSL2Element) -> bool:
    """Check u^p - u = (x^p - x)/(cx+d)^(p+1) for u = (ax+b)/(cx+d) in F_p(x),
    together with 2N = p + 1 so that (y/(cx+d)^2)^N = y^N/(cx+d)^(p+1)."""
    p = A.p
    F = build_field(p, 1)
    x = Polynomial.t(F)
    num = x * A.a + A.b
    den = x * A.c + A.d
    u = RationalFunction(num, den)
    lhs = u**p - u
    rhs = RationalFunction(x**p - x, den ** (p + 1))
    return lhs == rhs and 2 * ((p + 1) // 2) == p + 1


def orbit(P: CurvePoint, group: list[PSL2Element], F: FiniteField) -> set[CurvePoint]:
    return {act_on_point(A, P, F) for A in group}


def curve_genus(p: int) -> int:
    """Genus (N-1)(p-1)/2 of y^N = x^p - x, N = (p+1)/2 (gcd(N, p) = 1, f separable)."""
    if not is_prime(p) or p < 5:
        raise ValueError(f"need a prime p >= 5, got {p}")
    N = (p + 1) // 2
    return (N - 1) * (p - 1) // 2


@dataclass
class ActionReport:
    p: int
    k: int
    group_order: int
    samples: int
    genus: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "group-order": self.group_order,
            "symbolic-pass": self.checks.get("symbolic-curve-preservation"),
            "composition-samples": self.samples,
            "composition-pass": self.checks.get("homomorphism"),
            "minus-I-trivial": self.checks.get("minus-identity-trivial"),
            "genus": self.genus,
            "checks": dict(self.checks),
        }


def verify_action_axioms(p: int, k: int = 2, samples: int = 1000, *, seed: int = 0,
                         faithfulness_points: int = 50) -> ActionReport:
    """Symbolic curve preservation for every element, plus sampled checks of
    the homomorphism law, sign invariance, on-curve images and faithfulness."""
    if not is_prime(p) or p < 5:
        raise ValueError(f"need a prime p >= 5, got {p}")
    rng = random.Random(seed)
    F = build_field(p, k)
    curve = SuperellipticCurve(F)
    group = psl2_enumerate(p)
    report = ActionReport(p, k, len(group), samples, curve_genus(p))

    bad = [A for A in group if not symbolic_preserves_curve(A)]
    report.checks["symbolic-curve-preservation"] = not bad
    report.failures += [f"symbolic: {A}" for A in bad]

    points = curve.affine_points() + [CurvePoint.infinity()]
    hom_ok = on_curve_ok = True
    for _ in range(samples):
        A, B = rng.choice(group), rng.choice(group)
        P = rng.choice(points)
        lhs = act_on_point(A, act_on_point(B, P, F), F)
        rhs = act_on_point(psl2_compose(A, B), P, F)
        if lhs != rhs:
            hom_ok = False
            report.failures.append(f"homomorphism: A={A} B={B} P={P}")
        if not curve.contains(rhs):
            on_curve_ok = False
            report.failures.append(f"off-curve image: A={A} P={P}")
    report.checks["homomorphism"] = hom_ok
    report.checks["images-on-curve"] = on_curve_ok

    minus_ok = True
    for _ in range(min(samples, 200)):
        P = rng.choice(points)
        if act_by_matrix(((-1, 0), (0, -1)), P, F) != P:
            minus_ok = False
        A = rng.choice(group)
        neg = ((-A.a, -A.b), (-A.c, -A.d))
        if act_by_matrix(neg, P, F) != act_on_point(A, P, F):
            minus_ok = False
    report.checks["minus-identity-trivial"] = minus_ok

    sample_pts = rng.sample(points, min(faithfulness_points, len(points)))
    fixers = [A for A in group if not A.is_identity()
              and all(act_on_point(A, P, F) == P for P in sample_pts)]
    report.checks["faithful-on-samples"] = not fixers
    report.failures += [f"fixes all samples: {A}" for A in fixers]
    return report
