"""Exact arithmetic in the 2-power cyclotomic tower Q(zeta_{2^k}).

An element of level k is stored as a dense vector of 2^(k-1) rationals in
the power basis zeta^0 .. zeta^(2^(k-1) - 1), with the reduction rule
zeta^(2^(k-1)) = -1 (the minimal polynomial of zeta_{2^k} over Q is
x^(2^(k-1)) + 1 for k >= 2).  Level 1 is Q itself, with zeta_2 = -1.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

DEFAULT_MAX_LEVEL = 16

Scalar = Union[int, Fraction]


class Tower(Enum):
    """Which coefficient field a computation lives in.

    REAL is the maximal real subtower, the union of all
    Q(zeta_{2^k} + zeta_{2^k}^-1); membership means fixed by conjugation.
    FULL is the union of all Q(zeta_{2^k}); every element belongs.
    """

    REAL = "real"
    FULL = "full"


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


@dataclass(frozen=True)
class CycloElem:
    """Element of Q(zeta_{2^level}) as a rational coefficient vector.

    coeffs[j] is the coefficient of zeta_{2^level}^j.  Instances need not
    be at their minimal level (lift deliberately inflates the
    representation); equality and hashing go through the canonical
    minimal-level form.
    """

    level: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        want = 1 << (self.level - 1)
        if len(self.coeffs) != want:
            raise ValueError(
                f"level {self.level} needs {want} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(_as_fraction(c) for c in self.coeffs))

    # -- canonical form -------------------------------------------------

    def normalize(self) -> "CycloElem":
        """Canonical minimal-level representative."""
        level, coeffs = self.level, self.coeffs
        while level > 1 and not any(coeffs[1::2]):
            coeffs = coeffs[0::2]
            level -= 1
        if level == self.level:
            return self
        return CycloElem(level, tuple(coeffs))

    def lift(self, k: int) -> "CycloElem":
        """Re-represent at level k >= level; coefficient j moves to j * 2^(k-level)."""
        if k < self.level:
            raise ValueError(f"cannot lift level {self.level} down to {k}")
        if k == self.level:
            return self
        step = 1 << (k - self.level)
        out = [Fraction(0)] * (1 << (k - 1))
        for j, c in enumerate(self.coeffs):
            if c:
                out[j * step] = c
        return CycloElem(k, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.normalize().level == 1

    def as_rational(self) -> Fraction:
        n = self.normalize()
        if n.level != 1:
            raise ValueError("element is not rational")
        return n.coeffs[0]

    def _items(self) -> list[tuple[int, Fraction]]:
        return [(j, c) for j, c in enumerate(self.coeffs) if c]

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = from_rational(other)
        if not isinstance(other, CycloElem):
            return NotImplemented
        a, b = self.normalize(), other.normalize()
        return a.level == b.level and a.coeffs == b.coeffs

    def __hash__(self) -> int:
        n = self.normalize()
        return hash((n.level, n.coeffs))

    # -- ring operations ------------------------------------------------

    def __add__(self, other) -> "CycloElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        k = max(self.level, other.level)
        a, b = self.lift(k), other.lift(k)
        return CycloElem(k, tuple(x + y for x, y in zip(a.coeffs, b.coeffs))).normalize()

    __radd__ = __add__

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "CycloElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CycloElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "CycloElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        k = max(self.level, other.level)
        sa = 1 << (k - self.level)
        sb = 1 << (k - other.level)
        n = 1 << (k - 1)
        out = [Fraction(0)] * n
        bi = other._items()
        for i, ci in self._items():
            ii = i * sa
            for j, cj in bi:
                t = ii + j * sb
                v = ci * cj
                if t >= n:
                    t -= n
                    v = -v
                out[t] += v
        return CycloElem(k, tuple(out)).normalize()

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CycloElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other) -> "CycloElem":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.invert()

    def __pow__(self, e: int) -> "CycloElem":
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            return self.invert() ** (-e)
        result, base = one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def invert(self) -> "CycloElem":
        """Multiplicative inverse via the extended Euclidean algorithm
        against x^(2^(k-1)) + 1 over Q."""
        x = self.normalize()
        if x.is_zero():
            raise ZeroDivisionError("inverse of zero")
        items = x._items()
        if len(items) == 1:
            # monomial fast path: (c * zeta^j)^-1 = c^-1 * zeta^-j
            j, c = items[0]
            return zeta_pow(x.level, -j) * (1 / c)
        n = 1 << (x.level - 1)
        inv = _poly_invert(list(x.coeffs), n)
        inv += [Fraction(0)] * (n - len(inv))
        y = CycloElem(x.level, tuple(inv)).normalize()
        assert x * y == one()
        return y

    def conj(self) -> "CycloElem":
        """Image under zeta |-> zeta^-1 (complex conjugation)."""
        if self.level == 1:
            return self
        n = 1 << (self.level - 1)
        out = [Fraction(0)] * n
        out[0] = self.coeffs[0]
        for j in range(1, n):
            c = self.coeffs[j]
            if c:
                out[n - j] -= c  # zeta^-j = -zeta^(n-j)
        return CycloElem(self.level, tuple(out)).normalize()

    def to_complex(self) -> complex:
        order = 1 << self.level
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * j / order) for j, c in self._items()),
            complex(0),
        )

    def __repr__(self) -> str:  # debugging aid only; cli owns rendering
        n = self.normalize()
        return f"CycloElem(level={n.level}, coeffs={[str(c) for c in n.coeffs]})"


def _coerce(v):
    if isinstance(v, CycloElem):
        return v
    if isinstance(v, (int, Fraction)):
        return from_rational(v)
    return NotImplemented


# -- rational polynomial helpers for inversion --------------------------


def _ptrim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _pdivmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] * inv_lead
        if coef:
            q[i] = coef
            for j, bj in enumerate(b):
                a[i + j] -= coef * bj
    return _ptrim(q), _ptrim(a)


def _poly_invert(a: list[Fraction], n: int) -> list[Fraction]:
    """Inverse of a(x) modulo x^n + 1 over Q."""
    mod = [Fraction(0)] * (n + 1)
    mod[0] = Fraction(1)
    mod[n] = Fraction(1)
    r0, r1 = mod, _ptrim(a[:])
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
        nxt = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            nxt[i] += c
        for i, c in enumerate(prod):
            nxt[i] -= c
        s0, s1 = s1, _ptrim(nxt)
    assert len(r0) == 1, "x^n + 1 is irreducible over Q; gcd must be constant"
    g = r0[0]
    return [c / g for c in s0]


# -- constructors and named operations -----------------------------------


def from_rational(q: Scalar) -> CycloElem:
    return CycloElem(1, (_as_fraction(q),))


def zero() -> CycloElem:
    return from_rational(0)


def one() -> CycloElem:
    return from_rational(1)


def zeta(k: int) -> CycloElem:
    """The distinguished primitive 2^k-th root of unity; zeta(1) = -1."""
    if k < 1:
        raise ValueError(f"zeta level must be >= 1, got {k}")
    if k == 1:
        return from_rational(-1)
    coeffs = [Fraction(0)] * (1 << (k - 1))
    coeffs[1] = Fraction(1)
    return CycloElem(k, tuple(coeffs))


def zeta_pow(k: int, e: int) -> CycloElem:
    """zeta_{2^k}^e for any integer e, with zeta_{2^0} = 1."""
    if k < 0:
        raise ValueError(f"zeta level must be >= 0, got {k}")
    if k == 0:
        return one()
    e %= 1 << k
    if k == 1:
        return from_rational(1 if e == 0 else -1)
    n = 1 << (k - 1)
    sign = 1
    if e >= n:
        e -= n
        sign = -1
    coeffs = [Fraction(0)] * n
    coeffs[e] = Fraction(sign)
    return CycloElem(k, tuple(coeffs)).normalize()


def cosgen(k: int) -> CycloElem:
    """c_k = zeta(k) + zeta(k)^-1, the generator of the real level-k field."""
    if k < 2:
        raise ValueError(f"cosgen needs k >= 2, got {k}")
    return zeta(k) + zeta_pow(k, -1)


def conj(x: CycloElem) -> CycloElem:
    return x.conj()


def norm2(x: CycloElem) -> CycloElem:
    """Norm of the quadratic extension by i: x * conj(x)."""
    return x * x.conj()


def is_member(x: CycloElem, tower: Tower) -> bool:
    return tower is Tower.FULL or x.conj() == x


def lift(x: CycloElem, k: int) -> CycloElem:
    return x.lift(k)


def normalize(x: CycloElem) -> CycloElem:
    return x.normalize()
