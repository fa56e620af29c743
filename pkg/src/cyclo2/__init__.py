"""Exact factorization of x^(2^n) - a over 2-power cyclotomic towers and
minimal idempotents of the cyclic algebra K[x]/(x^(2^n) - a)."""

from .algebra import (
    AlgebraElem,
    AlgebraSpec,
    IdempotentSet,
    SystemReport,
    alg_mul,
    component_dimension,
    gbar,
    gbar_pow,
    idempotents,
    one_elem,
    poly_at_gbar,
    verify_system,
    zero_elem,
)
from .errors import (
    ElementSyntaxError,
    LevelBudgetExceeded,
    NotAMember,
    NotIdempotent,
    SpecMismatch,
    UnsupportedShape,
    VerificationError,
    ZeroArgument,
)
from .expr import parse_element, render_element
from .factor import (
    FactorCase,
    Factorization,
    IrreducibilityReport,
    Poly,
    binomial_poly,
    classify,
    expand_product,
    factorize,
    irreducibility_witness,
)
from .roots import (
    HeightResult,
    Kind,
    height,
    pow2_root,
    rational_sqrt,
    sqrt_in_tower,
)
from .tower import (
    DEFAULT_MAX_LEVEL,
    CycloElem,
    Tower,
    conj,
    cosgen,
    from_rational,
    is_member,
    lift,
    norm2,
    normalize,
    one,
    zero,
    zeta,
    zeta_pow,
)

__all__ = [
    "AlgebraElem",
    "AlgebraSpec",
    "CycloElem",
    "DEFAULT_MAX_LEVEL",
    "ElementSyntaxError",
    "FactorCase",
    "Factorization",
    "HeightResult",
    "IdempotentSet",
    "IrreducibilityReport",
    "Kind",
    "LevelBudgetExceeded",
    "NotAMember",
    "NotIdempotent",
    "Poly",
    "SpecMismatch",
    "SystemReport",
    "Tower",
    "UnsupportedShape",
    "VerificationError",
    "ZeroArgument",
    "alg_mul",
    "binomial_poly",
    "classify",
    "component_dimension",
    "conj",
    "cosgen",
    "expand_product",
    "factorize",
    "from_rational",
    "gbar",
    "gbar_pow",
    "height",
    "idempotents",
    "irreducibility_witness",
    "is_member",
    "lift",
    "norm2",
    "normalize",
    "one",
    "one_elem",
    "parse_element",
    "poly_at_gbar",
    "pow2_root",
    "rational_sqrt",
    "render_element",
    "sqrt_in_tower",
    "verify_system",
    "zero",
    "zero_elem",
    "zeta",
    "zeta_pow",
]
