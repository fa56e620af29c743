import random
from fractions import Fraction

import pytest

from cyclo2 import (
    CycloElem,
    Kind,
    LevelBudgetExceeded,
    NotAMember,
    Tower,
    ZeroArgument,
    conj,
    cosgen,
    from_rational,
    height,
    is_member,
    pow2_root,
    rational_sqrt,
    sqrt_in_tower,
    zeta,
    zeta_pow,
)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(0)) == 0
    assert rational_sqrt(Fraction(-4)) is None


def test_sqrt_examples():
    assert sqrt_in_tower(from_rational(2), Tower.REAL) == cosgen(3)
    assert sqrt_in_tower(from_rational(-1), Tower.FULL) == zeta(2)
    assert sqrt_in_tower(from_rational(3), Tower.REAL) is None
    assert sqrt_in_tower(2 * zeta(2), Tower.FULL) == 1 + zeta(2)


def test_sqrt_no_real_root_of_minus_two():
    assert sqrt_in_tower(from_rational(-2), Tower.REAL) is None
    b = sqrt_in_tower(from_rational(-2), Tower.FULL)
    assert b is not None and b * b == -2


def test_sqrt_one_level_up():
    a = 2 + cosgen(3)
    b = sqrt_in_tower(a, Tower.REAL)
    assert b == cosgen(4)


def test_sqrt_of_zeta_chain():
    b = sqrt_in_tower(zeta(3), Tower.FULL)
    assert b == zeta(4)


def test_sqrt_zero_and_budget():
    with pytest.raises(ZeroArgument):
        sqrt_in_tower(from_rational(0), Tower.REAL)
    with pytest.raises(LevelBudgetExceeded):
        sqrt_in_tower(1 + cosgen(5), Tower.REAL, max_level=5)
    with pytest.raises(LevelBudgetExceeded):
        sqrt_in_tower(from_rational(2), Tower.REAL, max_level=2)


def test_sqrt_returned_root_squares_back():
    rng = random.Random(23)
    for _ in range(40):
        k = rng.randint(1, 3)
        x = CycloElem(k, tuple(Fraction(rng.randint(-3, 3)) for _ in range(1 << (k - 1))))
        if x.is_zero():
            continue
        sq = x * x
        b = sqrt_in_tower(sq, Tower.FULL)
        assert b is not None and b * b == sq


def test_pow2_root_examples():
    assert pow2_root(from_rational(4), 2, Tower.REAL) == cosgen(3)
    assert pow2_root(from_rational(16), 2, Tower.REAL) == 2
    assert pow2_root(from_rational(2), 2, Tower.REAL) is None
    assert pow2_root(from_rational(7), 0, Tower.REAL) == 7
    assert pow2_root(zeta(3), 0, Tower.REAL) is None
    with pytest.raises(ZeroArgument):
        pow2_root(from_rational(0), 1, Tower.REAL)


def test_height_examples():
    h = height(from_rational(4), 3, Tower.REAL)
    assert (h.s, h.kind, h.witness) == (2, Kind.FIRST, cosgen(3))

    h = height(from_rational(-1), 5, Tower.REAL)
    assert (h.s, h.kind, h.witness) == (5, Kind.SECOND, from_rational(1))

    h = height(from_rational(-4), 2, Tower.REAL)
    assert (h.s, h.kind, h.witness) == (2, Kind.SECOND, cosgen(3))

    h = height(from_rational(-1), 2, Tower.FULL)
    assert (h.s, h.kind) == (2, Kind.FIRST)
    assert h.witness == zeta(3)


def test_height_errors():
    with pytest.raises(NotAMember):
        height(zeta(3), 2, Tower.REAL)
    with pytest.raises(ZeroArgument):
        height(from_rational(0), 2, Tower.REAL)
    with pytest.raises(ValueError):
        height(from_rational(2), 0, Tower.REAL)


def test_height_witness_reraises():
    for value, n in ((4, 3), (-16, 4), (64, 3), (-64, 5)):
        h = height(from_rational(value), n, Tower.REAL)
        target = from_rational(value if h.kind is Kind.FIRST else -value)
        assert h.witness ** (1 << h.s) == target
        assert is_member(h.witness, Tower.REAL)


def test_monotone_height():
    for value, n in ((4, 2), (2, 1), (16, 2)):
        a = from_rational(value)
        h = height(a, n, Tower.REAL)
        assert h.kind is Kind.FIRST
        h2 = height(a * a, n + 1, Tower.REAL)
        assert h2.s >= h.s + 1


def _random_full_elem(rng, max_level=4, span=3):
    # mix sparse and dense vectors so real powers actually occur
    k = rng.randint(1, max_level)
    size = 1 << (k - 1)
    coeffs = [Fraction(0)] * size
    for _ in range(rng.randint(1, min(4, size))):
        coeffs[rng.randrange(size)] = Fraction(rng.randint(-3, 3))
    return CycloElem(k, tuple(coeffs))


def test_real_power_properties():
    # whenever beta^(2^n) lands in the real tower, its height there is full
    # and beta is a real element times a root of unity
    rng = random.Random(29)
    checked = 0
    for _ in range(60):
        beta = _random_full_elem(rng)
        if beta.is_zero():
            continue
        n = rng.randint(1, 3)
        u = beta ** (1 << n)
        if not is_member(u, Tower.REAL):
            continue
        checked += 1
        h = height(u, n, Tower.REAL)
        assert h.s == n
        assert any(
            is_member(beta * zeta_pow(n + 1, -el), Tower.REAL)
            for el in range(1 << (n + 1))
        )
    assert checked >= 5


def test_sign_exclusivity():
    # a and -a are never both 2-power roots in the real tower
    rng = random.Random(31)
    for _ in range(60):
        x = _random_full_elem(rng)
        a = x + conj(x)
        if a.is_zero():
            continue
        s = rng.randint(1, 3)
        m = rng.randint(1, 3)
        assert not (
            pow2_root(a, s, Tower.REAL) is not None
            and pow2_root(-a, m, Tower.REAL) is not None
        )


def test_height_deterministic():
    a = CycloElem(3, (4, 0, 0, 0))  # non-minimal representation of 4
    h1 = height(from_rational(4), 3, Tower.REAL)
    h2 = height(a, 3, Tower.REAL)
    assert (h1.s, h1.kind, h1.witness) == (h2.s, h2.kind, h2.witness)
