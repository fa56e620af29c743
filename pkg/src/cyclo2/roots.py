"""2-power root extraction in the towers, squareness tests, and heights.

Square roots inside the infinite tower are found by a bounded search: for
an element at minimal level k >= 2, a square root lies in the tower iff it
lies at level k + 1, because the Galois group of the tower over level k is
procyclic with a unique index-2 subgroup (unique quadratic subextension).
Rational base cases are handled by an explicit table of the quadratic
subfields.  Every returned root is re-verified by exact squaring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import LevelBudgetExceeded, NotAMember, VerificationError, ZeroArgument
from .tower import (
    DEFAULT_MAX_LEVEL,
    CycloElem,
    Tower,
    cosgen,
    from_rational,
    is_member,
    zero,
    zeta,
    zeta_pow,
)


class Kind(Enum):
    FIRST = "first"    # a is a 2^s-th power in the field
    SECOND = "second"  # -a is a 2^s-th power in the field


@dataclass(frozen=True)
class HeightResult:
    """Maximal s with a in K^(2^s) or -K^(2^s), with a witness root b.

    FIRST: b^(2^s) = a.  SECOND: b^(2^s) = -a.  At s = 0 the kind is
    FIRST by convention and the witness is a itself.
    """

    s: int
    kind: Kind
    witness: CycloElem


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Nonnegative square root of q when q is a square in Q, else None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _first_nonzero(x: CycloElem) -> Fraction:
    for c in x.normalize().coeffs:
        if c:
            return c
    return Fraction(0)


def _positive_rep(x: CycloElem) -> CycloElem:
    """Pick the sign of +-x whose first canonical coefficient is positive."""
    return -x if _first_nonzero(x) < 0 else x


def _sort_key(x: CycloElem):
    n = x.normalize()
    first = next((j for j, c in enumerate(n.coeffs) if c), len(n.coeffs))
    return (n.level, first, n.coeffs)


def _dedupe(roots: list[CycloElem]) -> list[CycloElem]:
    seen: list[CycloElem] = []
    for r in roots:
        if not any(r == s for s in seen):
            seen.append(r)
    return seen


def _sqrt_at_level(x: CycloElem, m: int) -> list[CycloElem]:
    """All square roots of x inside the fixed level-m field.

    Quadratic-split descent: writing x = x0 + x1 * zeta_{2^m} with halves
    in level m - 1, a root u + v * zeta_{2^m} needs 2uv = x1 and
    u^2 + v^2 * zeta_{2^(m-1)} = x0, reducing to square roots one level
    down; the base case is Q.
    """
    x = x.normalize()
    if x.level > m:
        return []
    if x.is_zero():
        return [zero()]
    if m == 1:
        r = rational_sqrt(x.as_rational())
        if r is None:
            return []
        return _dedupe([from_rational(r), from_rational(-r)])
    rep = x.lift(m)
    x0 = CycloElem(m - 1, rep.coeffs[0::2]).normalize()
    x1 = CycloElem(m - 1, rep.coeffs[1::2]).normalize()
    zm = zeta(m)
    roots: list[CycloElem] = []
    if x1.is_zero():
        roots.extend(_sqrt_at_level(x0, m - 1))
        shifted = x0 * zeta_pow(m - 1, -1)
        roots.extend(v * zm for v in _sqrt_at_level(shifted, m - 1))
    else:
        disc = x0 * x0 - x1 * x1 * zeta_pow(m - 1, 1)
        for d in _sqrt_at_level(disc, m - 1):
            for u in _sqrt_at_level((x0 + d) / 2, m - 1):
                if u.is_zero():
                    continue
                v = x1 / (u * 2)
                roots.append(u + v * zm)
    roots = _dedupe(roots)
    for r in roots:
        if r * r != x:
            raise VerificationError("square-root descent produced a non-root")
    return roots


def sqrt_in_tower(
    a: CycloElem, tower: Tower, max_level: int = DEFAULT_MAX_LEVEL
) -> Optional[CycloElem]:
    """Some b with b^2 = a lying in the tower, or None if no such member exists."""
    a = a.normalize()
    if a.is_zero():
        raise ZeroArgument("square root of zero requested")
    k = a.level
    cands: list[CycloElem] = []
    if k == 1:
        # quadratic subfields over Q: sqrt exists iff q, -q, q/2 or -q/2 is a square
        q = a.as_rational()
        for target, mult in (
            (q, from_rational(1)),
            (-q, zeta(2)),
            (q / 2, cosgen(3)),
            (-q / 2, zeta(2) * cosgen(3)),
        ):
            r = rational_sqrt(target)
            if r is not None:
                cands.append(from_rational(r) * mult)
    else:
        if k + 1 > max_level:
            raise LevelBudgetExceeded(
                f"square-root search needs level {k + 1}, budget is {max_level}"
            )
        cands.extend(_sqrt_at_level(a, k))
        shifted = a * zeta_pow(k, -1)
        cands.extend(v * zeta(k + 1) for v in _sqrt_at_level(shifted, k))
    for b in cands:
        if b * b == a and is_member(b, tower):
            if b.normalize().level > max_level:
                raise LevelBudgetExceeded(
                    f"square root lives at level {b.normalize().level}, budget is {max_level}"
                )
            return _positive_rep(b)
    return None


def pow2_root(
    a: CycloElem, s: int, tower: Tower, max_level: int = DEFAULT_MAX_LEVEL
) -> Optional[CycloElem]:
    """Some member b with b^(2^s) = a, or None.

    Iterated square roots, carrying the full set of member roots at each
    stage (both signs); a single representative can dead-end while its
    negative continues.
    """
    a = a.normalize()
    if a.is_zero():
        raise ZeroArgument("pow2_root of zero requested")
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    if not is_member(a, tower):
        return None
    if s == 0:
        return a
    current = {a}
    for _ in range(s):
        nxt: set[CycloElem] = set()
        for c in current:
            b = sqrt_in_tower(c, tower, max_level)
            if b is not None:
                nxt.add(b)
                nxt.add(-b)
        if not nxt:
            return None
        current = nxt
    b = min((_positive_rep(r) for r in current), key=_sort_key)
    if b ** (1 << s) != a:
        raise VerificationError("pow2_root witness does not re-raise to its target")
    return b


def height(
    a: CycloElem, n: int, tower: Tower, max_level: int = DEFAULT_MAX_LEVEL
) -> HeightResult:
    """Greatest s in [0, n] with a a (signed) 2^s-th power, with kind and witness."""
    a = a.normalize()
    if a.is_zero():
        raise ZeroArgument("height of zero requested")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not is_member(a, tower):
        raise NotAMember("a is not fixed by conjugation, so lies outside the real tower")
    for s in range(n, 0, -1):
        bp = pow2_root(a, s, tower, max_level)
        bm = pow2_root(-a, s, tower, max_level)
        if tower is Tower.REAL and bp is not None and bm is not None:
            raise VerificationError(
                "a and -a are both 2^s-th powers in the real tower; "
                "contradicts kind exclusivity"
            )
        if bp is not None:
            return HeightResult(s, Kind.FIRST, bp)
        if bm is not None:
            return HeightResult(s, Kind.SECOND, bm)
    return HeightResult(0, Kind.FIRST, a)
