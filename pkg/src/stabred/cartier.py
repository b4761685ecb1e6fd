"""The Cartier operator on differentials of P^1 and of cyclic covers z^n = g(t).

On a polynomial form the operator is coefficient extraction followed by the
inverse Frobenius::

    C(sum_j c_j t^j dt) = sum_j c_{pj+p-1}^(1/p) t^j dt

and a rational form P/Q dt is handled through ``P/Q = P Q^(p-1) / Q^p`` and
p^(-1)-linearity, ``C(f^p w) = f C(w)``.  No partial fractions are needed.

For a cover z^n = g(t) with p prime to n, the form z^m h(t) dt is rewritten
as ``z^(p m') g^e h dt`` with ``p m' = m (mod n)`` and ``e = (m - p m')/n``.
Its image is ``z^(m') C(g^e h dt)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .field import FieldElement, FiniteField, Polynomial, RationalFunction

__all__ = [
    "PlaneDifferential",
    "CyclicCoverDifferential",
    "cartier_polynomial",
    "cartier_plane",
    "cartier_cyclic",
    "cartier_eigenvalue",
    "is_logarithmic",
    "is_exact",
    "exact_differential",
    "log_differential",
]


@dataclass(frozen=True)
class PlaneDifferential:
    """u(t) dt on P^1."""

    u: RationalFunction

    @property
    def field(self) -> FiniteField:
        return self.u.field

    def is_zero(self) -> bool:
        return self.u.is_zero()

    def __add__(self, other: "PlaneDifferential") -> "PlaneDifferential":
        return PlaneDifferential(self.u + other.u)

    def __mul__(self, f) -> "PlaneDifferential":
        return PlaneDifferential(self.u * f)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"({self.u}) dt"


@dataclass(frozen=True)
class CyclicCoverDifferential:
    """z^m h(t) dt on the cyclic cover z^n = g(t)."""

    n: int
    g: Polynomial
    m: int
    h: RationalFunction

    def __post_init__(self):
        p = self.g.field.p
        if self.n < 1 or gcd(self.n, p) != 1:
            raise ValueError(f"cover degree {self.n} must be positive and prime to p={p}")
        if self.g.is_zero():
            raise ValueError("cover equation z^n = 0 is degenerate")
        if not 0 <= self.m < self.n:
            raise ValueError(f"exponent m={self.m} outside [0, {self.n})")
        if self.h.field is not self.g.field:
            raise ValueError("h and g live over different fields")

    @classmethod
    def on_line(cls, u: RationalFunction) -> "CyclicCoverDifferential":
        """u dt regarded on the trivial cover (n = 1)."""
        F = u.field
        return cls(1, Polynomial(F, [1]), 0, u)

    @property
    def field(self) -> FiniteField:
        return self.g.field

    def is_zero(self) -> bool:
        return self.h.is_zero()

    def with_h(self, h: RationalFunction, m: int | None = None) -> "CyclicCoverDifferential":
        return CyclicCoverDifferential(self.n, self.g, self.m if m is None else m, h)

    def __add__(self, other: "CyclicCoverDifferential") -> "CyclicCoverDifferential":
        if (self.n, self.g) != (other.n, other.g):
            raise ValueError("differentials live on different covers")
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.m != other.m:
            raise ValueError("sum of forms from different eigencomponents")
        return self.with_h(self.h + other.h)

    def __mul__(self, f) -> "CyclicCoverDifferential":
        """Multiply by a function of t (or a constant)."""
        return self.with_h(self.h * f)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicCoverDifferential):
            return NotImplemented
        if (self.n, self.g) != (other.n, other.g):
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.m == other.m and self.h == other.h

    def __hash__(self) -> int:
        return hash((self.n, self.g, self.m if not self.is_zero() else 0, self.h))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "g": self.g.to_json(),
            "m": self.m,
            "h_num": self.h.num.to_json(),
            "h_den": self.h.den.to_json(),
        }

    def __repr__(self) -> str:
        zpart = "" if self.m == 0 else ("z * " if self.m == 1 else f"z^{self.m} * ")
        return f"{zpart}({self.h}) dt  on  z^{self.n} = {self.g}"


def cartier_polynomial(f: Polynomial) -> Polynomial:
    """C(f dt) for a polynomial f, returned as the coefficient polynomial."""
    F = f.field
    p = F.p
    c = f.packed
    out = [F.frobenius_inverse(c[i]) for i in range(p - 1, len(c), p)]
    return Polynomial._raw(F, out)


def cartier_plane(w: PlaneDifferential) -> PlaneDifferential:
    u = w.u
    p = u.field.p
    if u.is_polynomial():
        # den is monic of degree 0, i.e. 1
        return PlaneDifferential(RationalFunction(cartier_polynomial(u.num)))
    q = u.den
    top = cartier_polynomial(u.num * q ** (p - 1))
    return PlaneDifferential(RationalFunction(top, q))


def cartier_cyclic(w: CyclicCoverDifferential) -> CyclicCoverDifferential:
    n, p = w.n, w.field.p
    if gcd(n, p) != 1:
        raise ValueError(f"Cartier operator on z^{n} = g needs gcd(n, p) = 1")
    m_new = (w.m * pow(p, -1, n)) % n if n > 1 else 0
    e, rem = divmod(w.m - p * m_new, n)
    assert rem == 0
    twisted = w.h * RationalFunction(w.g) ** e
    image = cartier_plane(PlaneDifferential(twisted)).u
    return CyclicCoverDifferential(n, w.g, m_new, image)


def cartier_eigenvalue(w: CyclicCoverDifferential) -> FieldElement | None:
    """gamma with C(w) = gamma * w, or None when w is not an eigenvector."""
    if w.is_zero():
        raise ValueError("the zero form is an eigenvector for every scalar")
    image = cartier_cyclic(w)
    F = w.field
    if image.is_zero():
        return F.zero()
    if image.m != w.m:
        return None
    ratio = image.h / w.h
    if not ratio.is_constant():
        return None
    return ratio.constant_value()


def is_logarithmic(w: CyclicCoverDifferential) -> bool:
    """Cartier-fixed forms are exactly the logarithmic ones du/u."""
    return cartier_cyclic(w) == w


def is_exact(w: CyclicCoverDifferential) -> bool:
    return cartier_cyclic(w).is_zero()


def exact_differential(f: RationalFunction) -> PlaneDifferential:
    """df."""
    return PlaneDifferential(f.derivative())


def log_differential(f: RationalFunction) -> PlaneDifferential:
    """df/f."""
    return PlaneDifferential(f.derivative() / f)
