"""The 2^n-dimensional commutative algebra K[x]/(x^(2^n) - a).

Elements are coefficient vectors over the powers of the class gbar of x,
with gbar^(2^n) folding to the scalar a.  This realizes the twisted group
algebra of a cyclic group of order 2^n defined by that single relation.
The minimal idempotents are built case by case from the height witness and
fully verified (idempotency, orthogonality, completeness, annihilation by
the matching factor, component dimensions) before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotIdempotent, SpecMismatch, VerificationError, ZeroArgument
from .factor import FactorCase, Factorization, Poly, factorize
from .roots import Kind
from .tower import DEFAULT_MAX_LEVEL, CycloElem, Tower, from_rational, is_member, one, zero, zeta_pow


@dataclass(frozen=True)
class AlgebraSpec:
    """Defines the algebra via gbar^(2^n) = a over the chosen tower."""

    n: int
    a: CycloElem
    tower: Tower

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        a = self.a.normalize()
        if a.is_zero():
            raise ZeroArgument("a must be nonzero")
        if not is_member(a, self.tower):
            raise SpecMismatch("a lies outside the chosen coefficient field")
        object.__setattr__(self, "a", a)

    @property
    def dim(self) -> int:
        return 1 << self.n


@dataclass(frozen=True)
class AlgebraElem:
    spec: AlgebraSpec
    coeffs: tuple[CycloElem, ...]

    def __post_init__(self):
        coeffs = tuple(
            c if isinstance(c, CycloElem) else from_rational(c) for c in self.coeffs
        )
        if len(coeffs) != self.spec.dim:
            raise ValueError(
                f"expected {self.spec.dim} coefficients, got {len(coeffs)}"
            )
        if any(not is_member(c, self.spec.tower) for c in coeffs):
            raise SpecMismatch("coefficient lies outside the coefficient field")
        object.__setattr__(self, "coeffs", coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        return AlgebraElem(
            self.spec, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        return AlgebraElem(
            self.spec, tuple(x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "AlgebraElem":
        return AlgebraElem(self.spec, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElem):
            return alg_mul(self, other)
        if isinstance(other, (int, Fraction, CycloElem)):
            return AlgebraElem(self.spec, tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def _check(self, other: "AlgebraElem") -> None:
        if self.spec != other.spec:
            raise SpecMismatch("elements belong to different algebras")


def zero_elem(spec: AlgebraSpec) -> AlgebraElem:
    return AlgebraElem(spec, tuple(zero() for _ in range(spec.dim)))


def one_elem(spec: AlgebraSpec) -> AlgebraElem:
    coeffs = [zero()] * spec.dim
    coeffs[0] = one()
    return AlgebraElem(spec, tuple(coeffs))


def gbar(spec: AlgebraSpec) -> AlgebraElem:
    return gbar_pow(spec, 1)


def gbar_pow(spec: AlgebraSpec, j: int) -> AlgebraElem:
    """gbar^j for j >= 0, folding through gbar^(2^n) = a."""
    if j < 0:
        raise ValueError("negative powers of gbar are not needed")
    coeffs = [zero()] * spec.dim
    coeffs[j % spec.dim] = spec.a ** (j // spec.dim)
    return AlgebraElem(spec, tuple(coeffs))


# Scalars are handled as sparse {exponent: Fraction} maps at one common
# cyclotomic level while convolving, so the inner loop never rebuilds
# CycloElem instances; products of the mostly-monomial idempotent
# coefficients stay cheap.


def _scalar_items(c: CycloElem, common: int) -> dict:
    step = 1 << (common - c.level)
    return {j * step: f for j, f in enumerate(c.coeffs) if f}


def _scalar_mul_into(acc: dict, d1: dict, d2: dict, half: int) -> None:
    for e1, f1 in d1.items():
        for e2, f2 in d2.items():
            e = e1 + e2
            f = f1 * f2
            if e >= half:
                e -= half
                f = -f
            acc[e] = acc.get(e, 0) + f


def _scalar_build(d: dict, common: int) -> CycloElem:
    coeffs = [Fraction(0)] * (1 << (common - 1))
    for e, f in d.items():
        if f:
            coeffs[e] = f
    return CycloElem(common, tuple(coeffs)).normalize()


def alg_mul(u: AlgebraElem, v: AlgebraElem) -> AlgebraElem:
    """Convolution with indices >= 2^n folded down by one multiplication with a."""
    u._check(v)
    spec = u.spec
    dim = spec.dim
    common = max(
        spec.a.level,
        max(c.level for c in u.coeffs),
        max(c.level for c in v.coeffs),
    )
    half = 1 << (common - 1)
    ud = [(i, _scalar_items(c, common)) for i, c in enumerate(u.coeffs) if not c.is_zero()]
    vd = [(j, _scalar_items(c, common)) for j, c in enumerate(v.coeffs) if not c.is_zero()]
    low: list[dict] = [{} for _ in range(dim)]
    high: list[dict] = [{} for _ in range(dim)]
    for i, di in ud:
        for j, dj in vd:
            t = i + j
            if t < dim:
                _scalar_mul_into(low[t], di, dj, half)
            else:
                _scalar_mul_into(high[t - dim], di, dj, half)
    ad = _scalar_items(spec.a, common)
    for t in range(dim):
        if high[t]:
            _scalar_mul_into(low[t], ad, high[t], half)
    return AlgebraElem(spec, tuple(_scalar_build(d, common) for d in low))


def poly_at_gbar(p: Poly, spec: AlgebraSpec) -> AlgebraElem:
    """Evaluate a polynomial at gbar inside the algebra."""
    coeffs = [zero()] * spec.dim
    for d, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        coeffs[d % spec.dim] = coeffs[d % spec.dim] + c * spec.a ** (d // spec.dim)
    return AlgebraElem(spec, tuple(coeffs))


@dataclass(frozen=True)
class IdempotentSet:
    spec: AlgebraSpec
    case: FactorCase
    members: tuple[tuple[str, AlgebraElem], ...]


@dataclass(frozen=True)
class SystemReport:
    idempotency: bool
    orthogonality: bool
    completeness: bool
    count_matches_case: bool
    factor_annihilation: bool
    dimensions: tuple[int, ...]
    dimensions_match_degrees: bool

    def ok(self) -> bool:
        return (
            self.idempotency
            and self.orthogonality
            and self.completeness
            and self.count_matches_case
            and self.factor_annihilation
            and self.dimensions_match_degrees
        )


def _build_members(
    spec: AlgebraSpec, fct: Factorization
) -> list[tuple[str, AlgebraElem]]:
    s, b = fct.height.s, fct.height.witness
    case = fct.case
    if case is FactorCase.CASE2_IRREDUCIBLE:
        return [("e0", one_elem(spec))]
    step = 1 << (spec.n - s)
    count = 1 << s
    binv = b.invert()
    bpow = [one()]
    for _ in range(count - 1):
        bpow.append(bpow[-1] * binv)
    scale = Fraction(1, count)

    def member(scalars) -> AlgebraElem:
        coeffs = [zero()] * spec.dim
        for j in range(count):
            coeffs[step * j] = scalars(j) * bpow[j] * scale
        return AlgebraElem(spec, tuple(coeffs))

    members: list[tuple[str, AlgebraElem]] = []
    if case is FactorCase.CASE1_SPLIT_TOWER:
        for i in range(count):
            members.append((f"e{i}", member(lambda j, i=i: zeta_pow(s, -i * j))))
    elif case is FactorCase.CASE3_FIRST_KIND:
        members.append(("f1", member(lambda j: one())))
        members.append(("f2", member(lambda j: from_rational((-1) ** j))))
        for i in range(1, 1 << (s - 1)):
            members.append(
                (f"e{i}", member(lambda j, i=i: zeta_pow(s, i * j) + zeta_pow(s, -i * j)))
            )
    else:  # CASE4_SECOND_KIND
        for i in range(1 << (s - 1)):
            members.append(
                (
                    f"e{i}",
                    member(
                        lambda j, i=i: (zeta_pow(s, i * j + j) + zeta_pow(s, -i * j))
                        * zeta_pow(s + 1, -j)
                    ),
                )
            )
    return members


def idempotents(spec: AlgebraSpec, max_level: int = DEFAULT_MAX_LEVEL) -> IdempotentSet:
    """The minimal idempotents of the algebra, fully verified before return."""
    fct = factorize(spec.n, spec.a, spec.tower, max_level)
    iset = IdempotentSet(spec, fct.case, tuple(_build_members(spec, fct)))
    report = verify_system(iset, fct, max_level)
    if not report.ok():
        raise VerificationError(f"idempotent system failed verification: {report}")
    return iset


def verify_system(
    iset: IdempotentSet,
    fct: Optional[Factorization] = None,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> SystemReport:
    """Exact per-check report for an idempotent set; failures are entries, not errors."""
    spec = iset.spec
    if fct is None:
        fct = factorize(spec.n, spec.a, spec.tower, max_level)
    members = [e for _, e in iset.members]
    zero_e = zero_elem(spec)

    idem = all((e * e - e).is_zero() for e in members)
    orth = all(
        (members[i] * members[j]).is_zero()
        for i in range(len(members))
        for j in range(i + 1, len(members))
    )
    total = zero_e
    for e in members:
        total = total + e
    complete = (total - one_elem(spec)).is_zero()
    count_ok = len(members) == len(fct.factors)
    annih = count_ok and all(
        (poly_at_gbar(phi, spec) * e).is_zero()
        for phi, e in zip(fct.factors, members)
    )
    if idem:
        dims = tuple(component_dimension(e) for e in members)
    else:
        dims = ()
    dims_ok = (
        idem
        and count_ok
        and dims == tuple(phi.degree for phi in fct.factors)
        and sum(dims) == spec.dim
    )
    return SystemReport(idem, orth, complete, count_ok, annih, dims, dims_ok)


def component_dimension(e: AlgebraElem) -> int:
    """Dimension over the coefficient field of the component e * A.

    Multiplication by an idempotent is a projection, so its rank equals
    its trace: 2^n times the constant coefficient of e.  For small
    algebras the result is cross-checked against an explicit Gaussian
    elimination rank of the multiplication matrix.
    """
    if not (e * e - e).is_zero():
        raise NotIdempotent("element is not idempotent")
    spec = e.spec
    tr = e.coeffs[0] * spec.dim
    if not tr.is_rational() or tr.as_rational().denominator != 1:
        raise VerificationError("projection trace is not a rational integer")
    dim = int(tr.as_rational())
    if not 0 <= dim <= spec.dim:
        raise VerificationError("projection trace is out of range")
    if spec.dim <= 8 and dim != _mult_matrix_rank(e):
        raise VerificationError("projection trace disagrees with elimination rank")
    return dim


def _mult_matrix_rank(e: AlgebraElem) -> int:
    """Rank of y |-> e * y by exact Gaussian elimination over the field."""
    spec = e.spec
    rows = [list((e * gbar_pow(spec, j)).coeffs) for j in range(spec.dim)]
    rank = 0
    for col in range(spec.dim):
        pivot = next(
            (r for r in range(rank, spec.dim) if not rows[r][col].is_zero()), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].invert()
        rows[rank] = [c * inv for c in rows[rank]]
        for r in range(spec.dim):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [c - factor * p for c, p in zip(rows[r], rows[rank])]
        rank += 1
    return rank
