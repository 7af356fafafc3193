"""Exact scalars: rational functions in one parameter q over the rationals.

A scalar is a reduced fraction num/den of polynomials in q with Fraction
coefficients.  Polynomials are coefficient tuples (index = power of q) with
no trailing zeros; the zero polynomial is the empty tuple.  The denominator
is monic and coprime to the numerator, so equality and hashing are
structural.  Plain rationals are the degree-zero case.

A small recursive-descent parser reads expressions such as
``(q^2 - 1)/(q - 1)`` or ``-3/2 * q``; ``str`` emits a form the parser
reads back.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple, Union

Poly = Tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO)
        for i in range(n)
    )


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _pscale(a: Poly, c: Fraction) -> Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and _trim(r):
        r = list(_trim(r))
        if len(r) < len(b):
            break
        coeff = r[-1] / b[-1]
        deg = len(r) - len(b)
        q[deg] = coeff
        for i, cb in enumerate(b):
            r[deg + i] -= coeff * cb
        r = list(_trim(r))
    return _trim(q), _trim(r)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    return _pscale(a, _ONE / a[-1])  # monic


class Scalar:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, *, _canonical: bool = False):
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not _canonical:
            g = _pgcd(num, den)
            if g and g != (_ONE,):
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = _pscale(num, _ONE / lead)
                den = _pscale(den, _ONE / lead)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(value: Union[int, Fraction]) -> "Scalar":
        f = Fraction(value)
        if f == 0:
            return Scalar((), (_ONE,), _canonical=True)
        return Scalar((f,), (_ONE,), _canonical=True)

    @staticmethod
    def zero() -> "Scalar":
        return Scalar((), (_ONE,), _canonical=True)

    @staticmethod
    def one() -> "Scalar":
        return Scalar((_ONE,), (_ONE,), _canonical=True)

    @staticmethod
    def q() -> "Scalar":
        return Scalar((_ZERO, _ONE), (_ONE,), _canonical=True)

    @staticmethod
    def q_power(n: int) -> "Scalar":
        if n >= 0:
            return Scalar((_ZERO,) * n + (_ONE,), (_ONE,), _canonical=True)
        return Scalar((_ONE,), (_ZERO,) * (-n) + (_ONE,), _canonical=True)

    @staticmethod
    def coerce(value: Union["Scalar", int, Fraction]) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return Scalar.from_rational(value)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        return len(self.num) <= 1 and self.den == (_ONE,)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.coerce(other) / self

    def __pow__(self, n: int) -> "Scalar":
        if n == 0:
            return Scalar.one()
        base = self if n > 0 else Scalar.one() / self
        out = Scalar.one()
        for _ in range(abs(n)):
            out = out * base
        return out

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        num = _poly_str(self.num)
        if self.den == (_ONE,):
            return num
        den = _poly_str(self.den)
        if len(self.num) > 1 or (self.num and self.num[0].denominator != 1):
            num = f"({num})"
        if len(self.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _mono_str(coeff: Fraction, power: int) -> str:
    if power == 0:
        return str(coeff)
    if power == 1:
        base = "q"
    else:
        base = f"q^{power}"
    if coeff == 1:
        return base
    if coeff == -1:
        return f"-{base}"
    return f"{coeff}*{base}"


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for power in range(len(p) - 1, -1, -1):
        c = p[power]
        if c == 0:
            continue
        term = _mono_str(c, power)
        if parts and not term.startswith("-"):
            parts.append("+")
        parts.append(term)
    return " ".join(parts) if len(parts) > 1 else parts[0]


ZERO = Scalar.zero()
ONE = Scalar.one()
Q = Scalar.q()


class ScalarSyntaxError(ValueError):
    """Raised on malformed scalar expressions; carries the offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


class _ScalarParser:
    """expr := term (('+'|'-') term)* ;  term := factor (('*'|'/') factor)* ;
    factor := ['-'] atom ['^' ['-'] int] ;  atom := 'q' | int | '(' expr ')'
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Scalar:
        value = self.expr()
        self._skip()
        if self.pos != len(self.text):
            raise ScalarSyntaxError(
                f"unexpected character {self.text[self.pos]!r}", self.pos
            )
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while self._peek() and self._peek() in "+-":
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self._peek() and self._peek() in "*/":
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.factor()
            if op == "/" and rhs.is_zero():
                raise ScalarSyntaxError("division by zero", self.pos)
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> Scalar:
        if self._peek() == "-":
            self.pos += 1
            return -self.factor()
        value = self.atom()
        if self._peek() == "^":
            self.pos += 1
            sign = 1
            if self._peek() == "-":
                sign = -1
                self.pos += 1
            value = value ** (sign * self._int())
        return value

    def atom(self) -> Scalar:
        ch = self._peek()
        if ch == "q":
            self.pos += 1
            return Scalar.q()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self._peek() != ")":
                raise ScalarSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch.isdigit():
            return Scalar.from_rational(self._int())
        raise ScalarSyntaxError("expected 'q', a number, or '('", self.pos)

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ScalarSyntaxError("expected an integer", self.pos)
        return int(self.text[start : self.pos])


def parse_scalar(text: str) -> Scalar:
    """Parse a rational-function expression in q into a canonical Scalar."""
    return _ScalarParser(text).parse()
