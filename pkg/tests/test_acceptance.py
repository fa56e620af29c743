"""End-to-end acceptance checks.

Run with ``python3 -m pytest tests/test_acceptance.py -s`` to see one
PASS/FAIL line per criterion.  Everything is exact except criterion 7,
which is an explicit floating-point cross-check.
"""

import cmath
import json
import math
import random
from fractions import Fraction

import jsonschema

from cyclo2 import (
    AlgebraSpec,
    CycloElem,
    FactorCase,
    Tower,
    alg_mul,
    binomial_poly,
    conj,
    cosgen,
    expand_product,
    factorize,
    from_rational,
    height,
    parse_element,
    poly_at_gbar,
    pow2_root,
    render_element,
    verify_system,
    zeta,
    zeta_pow,
)
from cyclo2.algebra import IdempotentSet, _build_members
from cyclo2.cli import main


def _report(cid, fn):
    try:
        fn()
    except BaseException:
        print(f"acceptance {cid}: FAIL")
        raise
    print(f"acceptance {cid}: PASS")


def _base_values():
    vals = []
    for q in (1, 2, 3, 4, 16, 64):
        vals.extend([from_rational(q), from_rational(-q)])
    c3 = cosgen(3)
    vals.append(from_rational(2) * c3)
    vals.append(-(c3 ** 4))
    return vals


def _corpus_instances():
    seen = set()
    out = []
    for tower in (Tower.REAL, Tower.FULL):
        extra = [zeta(3), from_rational(2) * zeta(2)] if tower is Tower.FULL else []
        for n in range(1, 6):
            for a in _base_values() + extra:
                key = (tower, n, a)
                if key not in seen:
                    seen.add(key)
                    out.append((tower, n, a))
    return out


_RESULTS = None


def _results():
    """(tower, n, a, factorization, idempotent set, report) per corpus instance."""
    global _RESULTS
    if _RESULTS is None:
        rows = []
        for tower, n, a in _corpus_instances():
            fct = factorize(n, a, tower)
            spec = AlgebraSpec(n, a, tower)
            iset = IdempotentSet(spec, fct.case, tuple(_build_members(spec, fct)))
            rows.append((tower, n, a, fct, iset, verify_system(iset, fct)))
        _RESULTS = rows
    return _RESULTS


def test_acceptance_1_reconstruction():
    def check():
        cases = set()
        for _, n, a, fct, _, _ in _results():
            assert expand_product(list(fct.factors)) == binomial_poly(1 << n, a)
            cases.add(fct.case)
        assert cases == set(FactorCase)

    _report(1, check)


def test_acceptance_2_golden_instances():
    def check():
        minus = factorize(2, from_rational(-4), Tower.REAL)
        assert [list(p.coeffs) for p in minus.factors] == [
            [from_rational(2), from_rational(-2), from_rational(1)],
            [from_rational(2), from_rational(2), from_rational(1)],
        ]
        plus = factorize(2, from_rational(4), Tower.REAL)
        c3 = cosgen(3)
        assert [list(p.coeffs) for p in plus.factors] == [
            [-c3, from_rational(1)],
            [c3, from_rational(1)],
            [from_rational(2), from_rational(0), from_rational(1)],
        ]

    _report(2, check)


def test_acceptance_3_idempotent_systems():
    def check():
        counts = {
            FactorCase.CASE1_SPLIT_TOWER: lambda s: 1 << s,
            FactorCase.CASE2_IRREDUCIBLE: lambda s: 1,
            FactorCase.CASE3_FIRST_KIND: lambda s: (1 << (s - 1)) + 1,
            FactorCase.CASE4_SECOND_KIND: lambda s: 1 << (s - 1),
        }
        for _, n, _, fct, iset, report in _results():
            assert report.ok()
            assert len(iset.members) == counts[fct.case](fct.height.s)
            for phi, (_, e) in zip(fct.factors, iset.members):
                assert alg_mul(poly_at_gbar(phi, iset.spec), e).is_zero()
            assert sum(report.dimensions) == 1 << n
            assert report.dimensions == tuple(p.degree for p in fct.factors)

    _report(3, check)


def test_acceptance_4_conjugation():
    def check():
        for k in range(2, 7):
            z = zeta(k)
            assert conj(z) == z.invert()
            assert conj(z + z.invert()) == z + z.invert()

    _report(4, check)


def _random_element(rng, max_level):
    # sparse-biased sampler: monomials and near-monomials make real powers
    # common enough for the conditional property to be exercised
    level = rng.randint(1, max_level)
    width = 1 if level == 1 else 2 ** (level - 1)
    coeffs = [Fraction(0)] * width
    for _ in range(rng.choice((1, 1, 1, 2))):
        coeffs[rng.randrange(width)] = Fraction(rng.randint(-3, 3))
    return CycloElem(level, tuple(coeffs)).normalize()


def test_acceptance_5_power_realness():
    def check():
        rng = random.Random(1105)
        checked = 0
        for _ in range(200):
            beta = _random_element(rng, 4)
            if beta.is_zero():
                continue
            n = rng.randint(1, 3)
            power = beta ** (1 << n)
            if conj(power) != power:
                continue
            checked += 1
            h = height(power, n, Tower.REAL)
            assert h.s == n
            assert any(
                conj(cand) == cand
                for l in range(1 << (n + 1))
                for cand in (beta * zeta_pow(n + 1, -l),)
            )
        assert checked >= 5

    _report(5, check)


def test_acceptance_6_sign_exclusivity():
    def check():
        rng = random.Random(26)
        for _ in range(200):
            x = _random_element(rng, 4)
            a = x + conj(x)
            if a.is_zero():
                a = from_rational(rng.randint(1, 9))
            s = rng.randint(1, 3)
            m = rng.randint(1, 3)
            plus = pow2_root(a, s, Tower.REAL)
            minus = pow2_root(-a, m, Tower.REAL)
            assert plus is None or minus is None

    _report(6, check)


def test_acceptance_7_numeric_cross_check():
    def check():
        for _, n, a, fct, _, _ in _results():
            av = a.to_complex()
            for k in range(64):
                x = cmath.exp(2j * math.pi * k / 64)
                prod = 1 + 0j
                for p in fct.factors:
                    prod *= p.eval_complex(x)
                want = x ** (1 << n) - av
                scale = max(abs(want), abs(prod), 1.0)
                assert abs(prod - want) <= 1e-9 * scale

    _report(7, check)


def test_acceptance_8_cli_contract(capsys):
    def check():
        def run_json(argv):
            status = main(argv + ["--json"])
            return status, json.loads(capsys.readouterr().out)

        status, payload = run_json(
            ["factor", "--field", "real", "--n", "2", "--a", "-4", "--verify"]
        )
        assert status == 0
        assert payload["case"] == "case4_second_kind"
        assert payload["factors"] == [["2", "-2", "1"], ["2", "2", "1"]]
        assert payload["verified"] is True

        status, payload = run_json(
            ["idempotents", "--field", "real", "--n", "1", "--a", "-1"]
        )
        assert status == 0
        assert len(payload["idempotents"]) == 1
        assert payload["idempotents"][0]["coeffs"] == ["1", "0"]

        status, payload = run_json(
            ["height", "--field", "real", "--n", "3", "--a", "4"]
        )
        assert status == 0
        assert payload["s"] == 2
        assert payload["kind"] == "first"
        assert payload["witness"] == "zeta(3) + -1*zeta(3)^3"

        assert main(["factor", "--field", "real", "--n", "2", "--a", "zeta(3)"]) == 1
        capsys.readouterr()

        schema = {"type": "object", "required": ["command", "field", "a"]}
        for argv in (
            ["factor", "--field", "full", "--n", "3", "--a", "zeta(3)", "--verify"],
            ["idempotents", "--field", "real", "--n", "2", "--a", "-4", "--verify"],
        ):
            status = main(argv + ["--json"])
            assert status == 0
            jsonschema.validate(json.loads(capsys.readouterr().out), schema)

        rng = random.Random(88)
        for _ in range(100):
            level = rng.randint(1, 4)
            width = 1 if level == 1 else 2 ** (level - 1)
            coeffs = tuple(Fraction(rng.randint(-9, 9)) for _ in range(width))
            x = CycloElem(level, coeffs).normalize()
            assert main(["eval", "--a=" + render_element(x)]) == 0
            assert parse_element(capsys.readouterr().out.strip()) == x

    _report(8, check)
