"""Exact arithmetic in finite fields F_q (q = p^k) and in F_q[t].

Elements of F_q are stored as packed integers ``n = c_0 + c_1 p + ... +
c_{k-1} p^{k-1}``, where ``(c_0, ..., c_{k-1})`` is the little-endian
coefficient vector of the residue class modulo the defining polynomial.
Multiplication and addition go through exp/log (Zech) tables built once per
field, so every operation on packed integers is a couple of list lookups.

:class:`FieldElement`, :class:`Polynomial` and :class:`RationalFunction` are
immutable value types on top of that.  Polynomials keep their coefficients as
packed integers internally; ``Polynomial.coeffs`` exposes them as
:class:`FieldElement` objects.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

__all__ = [
    "FiniteField",
    "FieldElement",
    "Polynomial",
    "RationalFunction",
    "build_field",
    "pth_root",
    "poly_roots",
    "root_multiplicities",
    "binom_mod_p",
    "binom_mod_p_lucas",
    "is_prime",
]

# exhaustive root scans and table construction are capped here
MAX_FIELD_SIZE = 1_000_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (lists of ints, little-endian)


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _fp_trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        f = a[-1] * inv_lead % p
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - f * mc) % p
        _fp_trim(a)
    return a


def _fp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_mod(out, m, p)


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_is_irreducible(f: list[int], p: int) -> bool:
    """Rabin-style test: gcd(f, t^(p^i) - t) = 1 for 1 <= i <= deg f // 2."""
    k = len(f) - 1
    if k == 1:
        return True
    x = [0, 1]
    power = x
    for _ in range(k // 2):
        # power <- power^p mod f
        acc, base, e = [1], power, p
        while e:
            if e & 1:
                acc = _fp_mulmod(acc, base, f, p)
            base = _fp_mulmod(base, base, f, p)
            e >>= 1
        power = acc
        diff = list(power) + [0] * (2 - len(power)) if len(power) < 2 else list(power)
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(f, _fp_trim(diff), p)
        if len(g) > 1:
            return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # order: coefficient of t^(k-1) most significant, constant term least
    for high_first in itertools.product(range(p), repeat=k):
        f = list(reversed(high_first)) + [1]
        if f[0] == 0:
            continue
        if _fp_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


# ---------------------------------------------------------------------------


class FiniteField:
    """The field F_{p^k} with a fixed monic irreducible modulus.

    Use :func:`build_field` rather than the constructor; it caches instances
    so that two calls with the same ``(p, k)`` return the same object.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k
        self._build_tables()

    # -- table construction -------------------------------------------------

    def _digits(self, n: int) -> list[int]:
        out = []
        for _ in range(self.k):
            n, r = divmod(n, self.p)
            out.append(r)
        return out

    def _pack(self, digits) -> int:
        n = 0
        for c in reversed(digits):
            n = n * self.p + c
        return n

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        if k == 1:
            g = next(x for x in range(1, p) if _order_mod(x, p) == p - 1)
            exp = [1] * (q - 1)
            for i in range(1, q - 1):
                exp[i] = exp[i - 1] * g % p
        else:
            modulus = list(self.modulus)
            exp = None
            for cand in range(p, q):
                gd = _fp_trim(self._digits(cand))
                seq = [1]
                cur = [1]
                while True:
                    cur = _fp_mulmod(cur, gd, modulus, p)
                    packed = self._pack(cur + [0] * (k - len(cur)))
                    if packed == 1:
                        break
                    seq.append(packed)
                if len(seq) == q - 1:
                    exp = seq
                    break
            assert exp is not None
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log
        self.primitive = exp[1] if q > 2 else 1
        # zech[d] = log(1 + g^d), or -1 when 1 + g^d = 0
        one_plus = [0] * (q - 1)
        for d, v in enumerate(exp):
            digits = self._digits(v)
            digits[0] = (digits[0] + 1) % p
            s = self._pack(digits)
            one_plus[d] = -1 if s == 0 else log[s]
        self._zech = one_plus
        self._half = (q - 1) // 2
        self._neg = [0] + [exp[(log[a] + self._half) % (q - 1)] for a in range(1, q)]

    # -- packed-integer arithmetic ---------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius_inverse(self, a: int) -> int:
        if a == 0:
            return 0
        return self.power(a, self.p ** (self.k - 1))

    def from_int(self, n: int) -> int:
        """Packed index of the prime-field element n mod p."""
        return n % self.p

    # -- element-level API -------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (prime-field scalar), FieldElement or coefficient vector."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        coeffs = list(value)
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, self._pack([c % self.p for c in coeffs]))

    def element(self, n: int) -> "FieldElement":
        """Element with packed index n."""
        if not 0 <= n < self.q:
            raise ValueError(f"packed index {n} out of range for F_{self.q}")
        return FieldElement(self, n)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """The class of t modulo the defining polynomial (equals 0 when k = 1)."""
        return FieldElement(self, self.p if self.k > 1 else 0)

    def __iter__(self):
        return (FieldElement(self, n) for n in range(self.q))

    def __len__(self) -> int:
        return self.q

    def is_prime_field_element(self, a: int) -> bool:
        return a < self.p

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        if self.k == 1:
            return f"FiniteField(F_{self.p})"
        return f"FiniteField(F_{self.p}^{self.k}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (build_field, (self.p, self.k))


def _order_mod(x: int, p: int) -> int:
    o, y = 1, x % p
    while y != 1:
        y = y * x % p
        o += 1
    return o


@lru_cache(maxsize=None)
def build_field(p: int, k: int = 1) -> FiniteField:
    """Return F_{p^k} with the lexicographically smallest monic irreducible modulus.

    The order compares coefficient vectors starting at t^(k-1) down to the
    constant term, so over F_5 the quadratic modulus is t^2 + 2.  For k = 1
    the modulus is the placeholder ``t``.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("characteristic 2 is not supported (p must be odd)")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > MAX_FIELD_SIZE:
        raise ValueError(f"field size {p}^{k} exceeds the bound {MAX_FIELD_SIZE}")
    modulus = (0, 1) if k == 1 else _smallest_irreducible(p, k)
    return FiniteField(p, k, modulus)


class FieldElement:
    __slots__ = ("field", "n")

    def __init__(self, field: FiniteField, n: int):
        self.field = field
        self.n = n

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.n))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("mixed fields")
            return other.n
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.n, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.n, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.n))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.n, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.n, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(b, self.n))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.n))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.n, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.n))

    def __bool__(self) -> bool:
        return self.n != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.n == other.n
        if isinstance(other, int):
            return self.n == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.k, self.n))

    def __lt__(self, other: "FieldElement") -> bool:
        # canonical order: compare serialized coefficient vectors
        return self.coeffs < other.coeffs

    def is_zero(self) -> bool:
        return self.n == 0

    def in_prime_field(self) -> bool:
        return self.n < self.field.p

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        if self.field.k == 1:
            return f"{self.n}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(reversed(terms)) or "0"


def pth_root(x: FieldElement, F: FiniteField | None = None) -> FieldElement:
    """Inverse Frobenius: the unique y with y^p = x, computed as x^(p^(k-1))."""
    F = F or x.field
    return FieldElement(F, F.frobenius_inverse(x.n))


def binom_mod_p(n: int, j: int, p: int) -> int:
    """C(n, j) mod p via exact integer binomials."""
    if not 0 <= j <= n:
        raise ValueError(f"binomial index j={j} out of range for n={n}")
    return comb(n, j) % p


def binom_mod_p_lucas(n: int, j: int, p: int) -> int:
    """C(n, j) mod p via Lucas' theorem (digit-wise binomials in base p)."""
    if not 0 <= j <= n:
        raise ValueError(f"binomial index j={j} out of range for n={n}")
    out = 1
    while n or j:
        n, nd = divmod(n, p)
        j, jd = divmod(j, p)
        if jd > nd:
            return 0
        out = out * comb(nd, jd) % p
    return out


# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable univariate polynomial over a finite field.

    ``Polynomial(F, [1, 4, 1])`` is ``1 + 4t + t^2``; integer coefficients are
    prime-field scalars, FieldElement coefficients are taken as is.
    """

    __slots__ = ("field", "_c")

    def __init__(self, field: FiniteField, coeffs=()):
        packed = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field is not field:
                    raise ValueError("coefficient from a different field")
                packed.append(c.n)
            else:
                packed.append(int(c) % field.p)
        while packed and packed[-1] == 0:
            packed.pop()
        self.field = field
        self._c = tuple(packed)

    @classmethod
    def _raw(cls, field: FiniteField, packed) -> "Polynomial":
        obj = cls.__new__(cls)
        packed = list(packed)
        while packed and packed[-1] == 0:
            packed.pop()
        obj.field = field
        obj._c = tuple(packed)
        return obj

    @classmethod
    def t(cls, field: FiniteField) -> "Polynomial":
        return cls._raw(field, (0, 1))

    @classmethod
    def constant(cls, field: FiniteField, c) -> "Polynomial":
        return cls(field, [c])

    @classmethod
    def from_roots(cls, field: FiniteField, roots, exponents=None) -> "Polynomial":
        """prod (t - r_i)^(e_i)."""
        exponents = exponents or [1] * len(roots)
        out = cls._raw(field, (1,))
        for r, e in zip(roots, exponents):
            out = out * cls._raw(field, (field.neg(r.n), 1)) ** e
        return out

    # -- accessors -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self._c)

    @property
    def packed(self) -> tuple[int, ...]:
        return self._c

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.field, self._c[i] if 0 <= i < len(self._c) else 0)

    def leading(self) -> FieldElement:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.field, self._c[-1])

    def monic(self) -> "Polynomial":
        if not self._c:
            return self
        F = self.field
        li = F.inv(self._c[-1])
        return Polynomial._raw(F, (F.mul(c, li) for c in self._c))

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field is not self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F, a, b = self.field, self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial._raw(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial._raw(F, (F.neg(c) for c in self._c))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F, a, b = self.field, self._c, other._c
        if not a or not b:
            return Polynomial._raw(F, ())
        if F.k == 1:
            # convolve over the integers, reduce once
            p = F.p
            acc = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        acc[i + j] += x * y
            return Polynomial._raw(F, [c % p for c in acc])
        out = [0] * (len(a) + len(b) - 1)
        add, log, exp, m = F.add, F._log, F._exp, F.q - 1
        lb = [(j, log[y]) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                lx = log[x]
                for j, ly in lb:
                    out[i + j] = add(out[i + j], exp[(lx + ly) % m])
        return Polynomial._raw(F, out)

    __rmul__ = __mul__

    def scale(self, c: FieldElement | int) -> "Polynomial":
        return self * c

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent; use RationalFunction")
        F = self.field
        if e >= F.p:
            # f^(pq + r) = frob(f)^q * f^r, where frob(f) = sum c_i^p t^(ip)
            q, r = divmod(e, F.p)
            return self.frobenius_twist() ** q * self ** r
        result = Polynomial._raw(F, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Polynomial"):
        other = self._lift(other)
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self._c)
        db = len(other._c) - 1
        inv_lead = F.inv(other._c[-1])
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            coef = rem[i]
            if coef == 0:
                continue
            f = F.mul(coef, inv_lead)
            quot[i - db] = f
            for j, bc in enumerate(other._c):
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(f, bc))
        return Polynomial._raw(F, quot), Polynomial._raw(F, rem[:db] if db else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "Polynomial":
        F = self.field
        return Polynomial._raw(F, (F.mul(c, F.from_int(i)) for i, c in enumerate(self._c) if i > 0))

    def __call__(self, x):
        F = self.field
        xv = x.n if isinstance(x, FieldElement) else F.from_int(x)
        acc = 0
        for c in reversed(self._c):
            acc = F.add(F.mul(acc, xv), c)
        return FieldElement(F, acc)

    def eval_packed(self, xv: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self._c):
            acc = F.add(F.mul(acc, xv), c)
        return acc

    def compose(self, other: "Polynomial") -> "Polynomial":
        out = Polynomial._raw(self.field, ())
        for c in reversed(self._c):
            out = out * other + Polynomial._raw(self.field, (c,))
        return out

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd (zero if both are zero)."""
        a, b = self, self._lift(other)
        while b._c:
            a, b = b, a % b
        return a.monic()

    def is_squarefree(self) -> bool:
        if not self._c:
            return False
        return self.gcd(self.derivative()).degree() == 0

    def frobenius_twist(self) -> "Polynomial":
        """f^p, computed coefficientwise."""
        F, p = self.field, self.field.p
        out = [0] * (p * (len(self._c) - 1) + 1) if self._c else []
        for i, c in enumerate(self._c):
            out[p * i] = F.power(c, p)
        return Polynomial._raw(F, out)

    def frobenius_twist_inverse(self) -> "Polynomial":
        """Apply the inverse Frobenius to each coefficient."""
        F = self.field
        return Polynomial._raw(F, (F.frobenius_inverse(c) for c in self._c))

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.field is other.field and self._c == other._c
        if isinstance(other, (int, FieldElement)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.k, self._c))

    def to_json(self) -> list[list[int]]:
        return [c.to_json() for c in self.coeffs]

    def prime_field_ints(self) -> list[int]:
        """Coefficients as plain ints; only valid when all lie in F_p."""
        if any(c >= self.field.p for c in self._c):
            raise ValueError("polynomial has coefficients outside the prime field")
        return list(self._c)

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = repr(c)
            if self.field.k > 1 and " + " in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(reversed(terms))


def poly_roots(f: Polynomial, F: FiniteField | None = None) -> list[FieldElement]:
    """All roots of f in F_q by exhaustive evaluation, in canonical sorted order."""
    F = F or f.field
    if f.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    if F.q > MAX_FIELD_SIZE:
        raise ValueError(f"exhaustive root scan over F_{F.q} exceeds {MAX_FIELD_SIZE}")
    roots = [FieldElement(F, n) for n in range(F.q) if f.eval_packed(n) == 0]
    return sorted(roots)


def root_multiplicities(f: Polynomial) -> dict[FieldElement, int]:
    """Map each root of f in its field to its multiplicity."""
    out = {}
    for r in poly_roots(f):
        lin = Polynomial._raw(f.field, (f.field.neg(r.n), 1))
        m, g = 0, f
        while True:
            quo, rem = divmod(g, lin)
            if not rem.is_zero():
                break
            g, m = quo, m + 1
        out[r] = m
    return out


# ---------------------------------------------------------------------------


class RationalFunction:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        F = num.field
        if den is None:
            den = Polynomial._raw(F, (1,))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, Polynomial._raw(F, (1,))
        else:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num // g, den // g
            lead = den._c[-1]
            if lead != 1:
                li = F.inv(lead)
                num = Polynomial._raw(F, (F.mul(c, li) for c in num._c))
                den = Polynomial._raw(F, (F.mul(c, li) for c in den._c))
        self.num = num
        self.den = den

    @property
    def field(self) -> FiniteField:
        return self.num.field

    @classmethod
    def lift(cls, F: FiniteField, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Polynomial):
            return cls(x)
        return cls(Polynomial(F, [x]))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def __add__(self, other):
        other = RationalFunction.lift(self.field, other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.lift(self.field, other))

    def __rsub__(self, other):
        return RationalFunction.lift(self.field, other) - self

    def __mul__(self, other):
        other = RationalFunction.lift(self.field, other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.lift(self.field, other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.lift(self.field, other) * self.inverse()

    def __pow__(self, e: int) -> "RationalFunction":
        if e >= 0:
            return RationalFunction(self.num**e, self.den**e)
        return RationalFunction(self.den ** (-e), self.num ** (-e))

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def substitute(self, u: "RationalFunction") -> "RationalFunction":
        """self(u) for a rational function u."""
        F = self.field

        def ev(poly: Polynomial) -> RationalFunction:
            acc = RationalFunction.lift(F, 0)
            for c in reversed(poly._c):
                acc = acc * u + RationalFunction(Polynomial._raw(F, (c,)))
            return acc

        return ev(self.num) / ev(self.den)

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Polynomial, int, FieldElement)):
            return self == RationalFunction.lift(self.field, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num})/({self.den})"
