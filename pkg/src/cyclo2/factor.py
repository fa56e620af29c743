"""Decomposition of x^(2^n) - a into irreducible factors over the towers.

Four cases, selected by the coefficient field and by the height of a:
over the full tower the binomial splits into 2^s binomials; over the real
tower it is irreducible (s = 0, or s = 1 with -a a square), or splits into
two binomials plus quadratic-block trinomials (first kind), or into
trinomials only (second kind).  Every factorization is verified by exact
expansion before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import LevelBudgetExceeded, UnsupportedShape, VerificationError, ZeroArgument
from .roots import HeightResult, Kind, _positive_rep, height, pow2_root, sqrt_in_tower
from .tower import (
    DEFAULT_MAX_LEVEL,
    CycloElem,
    Tower,
    from_rational,
    is_member,
    one,
    zero,
    zeta_pow,
)

MAX_N = 24


class FactorCase(Enum):
    CASE1_SPLIT_TOWER = "case1_split_tower"
    CASE2_IRREDUCIBLE = "case2_irreducible"
    CASE3_FIRST_KIND = "case3_first_kind"
    CASE4_SECOND_KIND = "case4_second_kind"


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over the tower; coeffs[d] is the degree-d coefficient."""

    coeffs: tuple[CycloElem, ...]

    def __post_init__(self):
        coeffs = tuple(
            c if isinstance(c, CycloElem) else from_rational(c) for c in self.coeffs
        )
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (zero(),)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_zero()

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly((zero(),))
        acc = [zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(other.coeffs):
                if not cj.is_zero():
                    acc[i + j] = acc[i + j] + ci * cj
        return Poly(tuple(acc))

    def eval_complex(self, z: complex) -> complex:
        acc = complex(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c.to_complex()
        return acc


def binomial_poly(m: int, c: CycloElem) -> Poly:
    """x^m - c."""
    coeffs = [zero()] * (m + 1)
    coeffs[0] = -c
    coeffs[m] = one()
    return Poly(tuple(coeffs))


def _trinomial(m: int, mid: CycloElem, const: CycloElem) -> Poly:
    """x^(2m) - mid * x^m + const."""
    coeffs = [zero()] * (2 * m + 1)
    coeffs[0] = const
    coeffs[m] = -mid
    coeffs[2 * m] = one()
    return Poly(tuple(coeffs))


def expand_product(factors: list[Poly]) -> Poly:
    prod = Poly((one(),))
    for f in factors:
        prod = prod * f
    return prod


@dataclass(frozen=True)
class Factorization:
    case: FactorCase
    n: int
    a: CycloElem
    height: HeightResult
    factors: tuple[Poly, ...]


def _case_of(tower: Tower, h: HeightResult) -> FactorCase:
    if tower is Tower.FULL:
        return FactorCase.CASE1_SPLIT_TOWER
    if h.s == 0 or (h.s == 1 and h.kind is Kind.SECOND):
        return FactorCase.CASE2_IRREDUCIBLE
    if h.kind is Kind.FIRST:
        return FactorCase.CASE3_FIRST_KIND
    return FactorCase.CASE4_SECOND_KIND


def _normalized_witness(h: HeightResult) -> CycloElem:
    # sign is free for s >= 1; fix it so factor lists are reproducible
    if h.s == 0:
        return h.witness
    return _positive_rep(h.witness)


def _case1_factors(n: int, s: int, b: CycloElem) -> list[Poly]:
    m = 1 << (n - s)
    return [binomial_poly(m, b * zeta_pow(s, i)) for i in range(1 << s)]


def _case3_factors(n: int, s: int, b: CycloElem) -> list[Poly]:
    m = 1 << (n - s)
    factors = [binomial_poly(m, b), binomial_poly(m, -b)]
    for i in range(1, 1 << (s - 1)):
        mid = (zeta_pow(s, i) + zeta_pow(s, -i)) * b
        factors.append(_trinomial(m, mid, b * b))
    return factors


def _case4_factors(n: int, s: int, b: CycloElem) -> list[Poly]:
    m = 1 << (n - s)
    factors = []
    for i in range(1 << (s - 1)):
        mid = (zeta_pow(s, i) + zeta_pow(s, -i - 1)) * zeta_pow(s + 1, 1) * b
        factors.append(_trinomial(m, mid, b * b))
    return factors


_EXPECTED_COUNT = {
    FactorCase.CASE1_SPLIT_TOWER: lambda s: 1 << s,
    FactorCase.CASE2_IRREDUCIBLE: lambda s: 1,
    FactorCase.CASE3_FIRST_KIND: lambda s: (1 << (s - 1)) + 1,
    FactorCase.CASE4_SECOND_KIND: lambda s: 1 << (s - 1),
}


def _validate_args(n: int, a: CycloElem, tower: Tower) -> CycloElem:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in [1, {MAX_N}], got {n}")
    a = a.normalize()
    if a.is_zero():
        raise ZeroArgument("a must be nonzero")
    return a


def classify(
    n: int, a: CycloElem, tower: Tower, max_level: int = DEFAULT_MAX_LEVEL
) -> FactorCase:
    a = _validate_args(n, a, tower)
    return _case_of(tower, height(a, n, tower, max_level))


def factorize(
    n: int, a: CycloElem, tower: Tower, max_level: int = DEFAULT_MAX_LEVEL
) -> Factorization:
    a = _validate_args(n, a, tower)
    h = height(a, n, tower, max_level)
    case = _case_of(tower, h)
    b = _normalized_witness(h)
    s = h.s
    if case is FactorCase.CASE1_SPLIT_TOWER:
        factors = _case1_factors(n, s, b)
    elif case is FactorCase.CASE2_IRREDUCIBLE:
        factors = [binomial_poly(1 << n, a)]
    elif case is FactorCase.CASE3_FIRST_KIND:
        factors = _case3_factors(n, s, b)
    else:
        if s + 1 > max_level:
            raise LevelBudgetExceeded(
                f"second-kind factors need level {s + 1}, budget is {max_level}"
            )
        factors = _case4_factors(n, s, b)

    if len(factors) != _EXPECTED_COUNT[case](s):
        raise VerificationError("factor count does not match the case table")
    for f in factors:
        if not f.is_monic():
            raise VerificationError("emitted factor is not monic")
        if any(not is_member(c, tower) for c in f.coeffs):
            raise VerificationError("emitted factor has a coefficient outside the field")
    if expand_product(factors) != binomial_poly(1 << n, a):
        raise VerificationError("expanded factor product differs from x^(2^n) - a")
    return Factorization(case, n, a, HeightResult(s, h.kind, b), tuple(factors))


@dataclass(frozen=True)
class IrreducibilityReport:
    irreducible: bool
    witness: Optional[CycloElem]
    detail: str


def irreducibility_witness(
    p: Poly, tower: Tower, max_level: int = DEFAULT_MAX_LEVEL
) -> IrreducibilityReport:
    """Check irreducibility of a 2-power binomial or a monic quadratic.

    Binomials x^m - alpha use the membership criteria: over the full tower
    alpha must not be a square; over the real tower alpha must avoid both
    the squares and the negated fourth powers (for m >= 4).  Quadratics
    are checked through their discriminant.
    """
    if not p.is_monic():
        raise UnsupportedShape("expected a monic polynomial")
    d = p.degree
    if d < 1:
        raise UnsupportedShape("expected a non-constant polynomial")
    if d == 1:
        return IrreducibilityReport(True, None, "linear polynomial")
    inner_zero = all(c.is_zero() for c in p.coeffs[1:-1])
    if inner_zero and d & (d - 1) == 0:
        alpha = -p.coeffs[0]
        if alpha.is_zero():
            return IrreducibilityReport(False, zero(), "zero constant term")
        if tower is Tower.FULL:
            r = sqrt_in_tower(alpha, tower, max_level)
            if r is not None:
                return IrreducibilityReport(False, r, "constant term is a square")
            return IrreducibilityReport(True, None, "constant term is not a square")
        r = sqrt_in_tower(alpha, tower, max_level)
        if r is not None:
            return IrreducibilityReport(False, r, "constant term is a square")
        if d >= 4:
            r4 = pow2_root(-alpha, 2, tower, max_level)
            if r4 is not None:
                return IrreducibilityReport(
                    False, r4, "negated constant term is a fourth power"
                )
        return IrreducibilityReport(
            True, None, "constant term avoids squares and negated fourth powers"
        )
    if d == 2:
        lin, const = p.coeffs[1], p.coeffs[0]
        disc = lin * lin - 4 * const
        if disc.is_zero():
            return IrreducibilityReport(False, -lin / 2, "zero discriminant (double root)")
        r = sqrt_in_tower(disc, tower, max_level)
        if r is not None:
            return IrreducibilityReport(False, (-lin + r) / 2, "discriminant is a square")
        return IrreducibilityReport(True, None, "discriminant has no square root")
    raise UnsupportedShape(
        "only 2-power binomials and monic quadratics are supported"
    )
