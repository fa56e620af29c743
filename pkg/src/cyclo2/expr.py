"""Element expressions: a small grammar for writing tower elements.

Grammar: rationals via integer literals and `/`, `zeta(k)`, `c(k)` (sugar
for zeta(k) + zeta(k)^-1), binary + - * /, unary -, integer ^ with
negative exponents, parentheses.  Precedence: ^ above unary - above * /
above + -, left-associative within a tier.

Rendering is canonical and parse_element(render_element(x)) == x.
"""

from __future__ import annotations

from .errors import ElementSyntaxError, LevelBudgetExceeded
from .tower import DEFAULT_MAX_LEVEL, CycloElem, cosgen, from_rational, zeta


class _Parser:
    def __init__(self, src: str, max_level: int):
        self.src = src
        self.pos = 0
        self.max_level = max_level

    def parse(self) -> CycloElem:
        value = self._expr()
        self._skip_ws()
        if self.pos != len(self.src):
            raise ElementSyntaxError("unexpected trailing input", self.pos)
        return value.normalize()

    # -- grammar tiers ----------------------------------------------------

    def _expr(self) -> CycloElem:
        value = self._term()
        while True:
            op = self._peek()
            if op == "+":
                self.pos += 1
                value = value + self._term()
            elif op == "-":
                self.pos += 1
                value = value - self._term()
            else:
                return value

    def _term(self) -> CycloElem:
        value = self._unary()
        while True:
            op = self._peek()
            if op == "*":
                self.pos += 1
                value = value * self._unary()
            elif op == "/":
                self.pos += 1
                value = value / self._unary()
            else:
                return value

    def _unary(self) -> CycloElem:
        if self._peek() == "-":
            self.pos += 1
            return -self._unary()
        return self._power()

    def _power(self) -> CycloElem:
        value = self._atom()
        if self._peek() == "^":
            self.pos += 1
            return value ** self._signed_int()
        return value

    def _atom(self) -> CycloElem:
        c = self._peek()
        if c is None:
            raise ElementSyntaxError("expected a value", self.pos)
        if c.isdigit():
            return from_rational(self._integer())
        if c.isalpha():
            return self._call()
        if c == "(":
            self.pos += 1
            value = self._expr()
            self._expect(")")
            return value
        raise ElementSyntaxError(f"unexpected character {c!r}", self.pos)

    def _call(self) -> CycloElem:
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isalpha():
            self.pos += 1
        name = self.src[start : self.pos]
        self._expect("(")
        self._skip_ws()
        arg_pos = self.pos
        k = self._signed_int()
        self._expect(")")
        if name == "zeta":
            if k < 1:
                raise ElementSyntaxError("zeta level must be >= 1", arg_pos)
            self._check_level(k)
            return zeta(k)
        if name == "c":
            if k < 2:
                raise ElementSyntaxError("c level must be >= 2", arg_pos)
            self._check_level(k)
            return cosgen(k)
        raise ElementSyntaxError(f"unknown function {name!r}", start)

    def _check_level(self, k: int) -> None:
        if k > self.max_level:
            raise LevelBudgetExceeded(f"level {k} exceeds budget {self.max_level}")

    # -- lexing helpers ---------------------------------------------------

    def _skip_ws(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else None

    def _expect(self, ch: str) -> None:
        if self._peek() != ch:
            raise ElementSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ElementSyntaxError("expected an integer", self.pos)
        return int(self.src[start : self.pos])

    def _signed_int(self) -> int:
        if self._peek() == "-":
            self.pos += 1
            return -self._integer()
        return self._integer()


def parse_element(src: str, max_level: int = DEFAULT_MAX_LEVEL) -> CycloElem:
    return _Parser(src, max_level).parse()


def render_element(x: CycloElem) -> str:
    """Deterministic canonical rendering; round-trips through parse_element."""
    x = x.normalize()
    if x.level == 1:
        return str(x.coeffs[0])
    k = x.level
    terms = []
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        if j == 0:
            terms.append(str(c))
            continue
        z = f"zeta({k})" if j == 1 else f"zeta({k})^{j}"
        terms.append(z if c == 1 else f"{c}*{z}")
    return " + ".join(terms)
