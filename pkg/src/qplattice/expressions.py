"""Wavefunction expressions: a small grammar over the position variable q.

Grammar (precedence low to high, all binary operators left-associative):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' uint)?
    atom   := number | 'q' | name '(' expr ')' | '(' expr ')'

Numbers are unsigned decimal literals and convert exactly to rationals;
exponents are literal nonnegative integers; '^' binds tighter than a unary
minus written outside it (so -q^2 negates the square).  The function catalog
is closed: sin, cos, exp.  A tree without calls is a polynomial and can be
evaluated exactly at rational q; any call forces float evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import EvaluationError, ModeError, ParseError
from .scalars import NumericMode

FUNCTIONS = {"sin": math.sin, "cos": math.cos, "exp": math.exp}


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    argument: "Expr"


Expr = Union[Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call]


# -- tokenizer ---------------------------------------------------------------

_OPERATORS = set("+-*/^()")


@dataclass(frozen=True)
class _Token:
    kind: str       # 'number' | 'name' | operator char | 'end'
    text: str
    position: int
    value: object = None


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPERATORS:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == ".":
                i += 1
                if i >= n or not text[i].isdigit():
                    raise ParseError("malformed number", start)
                while i < n and text[i].isdigit():
                    i += 1
            literal = text[start:i]
            tokens.append(_Token("number", literal, start, Fraction(literal)))
            continue
        if ch.isalpha():
            start = i
            while i < n and text[i].isalnum():
                i += 1
            tokens.append(_Token("name", text[start:i], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise ParseError(f"expected {kind!r}, found {token.text or 'end of input'!r}", token.position)
        return self.advance()

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.term()
            node = Add(node, right) if op.kind == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            right = self.factor()
            node = Mul(node, right) if op.kind == "*" else Div(node, right)
        return node

    def factor(self) -> Expr:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.factor())
        node = self.atom()
        if self.peek().kind == "^":
            self.advance()
            exponent = self.peek()
            if exponent.kind != "number" or "." in exponent.text:
                raise ParseError("exponent must be a nonnegative integer literal", exponent.position)
            self.advance()
            node = Pow(node, int(exponent.text))
        return node

    def atom(self) -> Expr:
        token = self.peek()
        if token.kind == "number":
            self.advance()
            return Number(token.value)
        if token.kind == "name":
            self.advance()
            if token.text == "q":
                return Var()
            if token.text in FUNCTIONS:
                self.expect("(")
                argument = self.expr()
                self.expect(")")
                return Call(token.text, argument)
            raise ParseError(f"unknown function {token.text!r}", token.position)
        if token.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {token.text or 'end of input'!r}", token.position)


def parse_expr(text: str) -> Expr:
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(f"unexpected {trailing.text!r}", trailing.position)
    return node


# -- evaluation ---------------------------------------------------------------


def is_polynomial(node: Expr) -> bool:
    """True when the tree contains no function calls (exactly evaluable)."""
    if isinstance(node, (Number, Var)):
        return True
    if isinstance(node, Neg):
        return is_polynomial(node.operand)
    if isinstance(node, (Add, Sub, Mul, Div)):
        return is_polynomial(node.left) and is_polynomial(node.right)
    if isinstance(node, Pow):
        return is_polynomial(node.base)
    return False


def eval_expr(node: Expr, q):
    """Evaluate at q; exact when q is rational, double precision when float.

    A Fraction (or int) argument selects exact evaluation, where function
    calls raise ModeError; a float argument evaluates with round-to-nearest
    double operations in tree order.
    """
    exact = not isinstance(q, float)
    if exact and isinstance(q, int):
        q = Fraction(q)
    return _eval(node, q, exact)


def _eval(node, q, exact):
    if isinstance(node, Number):
        return node.value if exact else float(node.value)
    if isinstance(node, Var):
        return q
    if isinstance(node, Neg):
        return -_eval(node.operand, q, exact)
    if isinstance(node, Add):
        return _eval(node.left, q, exact) + _eval(node.right, q, exact)
    if isinstance(node, Sub):
        return _eval(node.left, q, exact) - _eval(node.right, q, exact)
    if isinstance(node, Mul):
        return _eval(node.left, q, exact) * _eval(node.right, q, exact)
    if isinstance(node, Div):
        numerator = _eval(node.left, q, exact)
        denominator = _eval(node.right, q, exact)
        if denominator == 0:
            raise EvaluationError("division by zero")
        return numerator / denominator
    if isinstance(node, Pow):
        return _eval(node.base, q, exact) ** node.exponent
    if isinstance(node, Call):
        if exact:
            raise ModeError(
                f"{node.name} is not exactly evaluable; use float mode"
            )
        return FUNCTIONS[node.name](_eval(node.argument, q, exact))
    raise TypeError(f"not an expression node: {node!r}")


def expr_function(node: Expr, mode: NumericMode):
    """A sampling callable for the tree, validating mode up front."""
    if mode is NumericMode.EXACT and not is_polynomial(node):
        raise ModeError(
            "expression contains sin/cos/exp and cannot be sampled exactly; use float mode"
        )
    return lambda q: eval_expr(node, q)


# -- pretty printer ------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _precedence(node: Expr) -> int:
    if isinstance(node, (Add, Sub)):
        return _PREC_ADD
    if isinstance(node, (Mul, Div)):
        return _PREC_MUL
    if isinstance(node, Neg):
        return _PREC_NEG
    if isinstance(node, Pow):
        return _PREC_POW
    return _PREC_ATOM


def _decimal_literal(value: Fraction) -> str:
    if value < 0:
        raise ValueError("decimal literals are unsigned")
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        raise ValueError(f"{value} is not representable as a decimal literal")
    places = max(twos, fives)
    digits = str(int(value * 10**places))
    if places == 0:
        return digits
    digits = digits.rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def render(node: Expr) -> str:
    """Emit text that parses back to an identical tree."""
    def wrap(child: Expr, minimum: int) -> str:
        text = render(child)
        return f"({text})" if _precedence(child) < minimum else text

    if isinstance(node, Number):
        return _decimal_literal(node.value)
    if isinstance(node, Var):
        return "q"
    if isinstance(node, Neg):
        return "-" + wrap(node.operand, _PREC_NEG)
    if isinstance(node, Add):
        return wrap(node.left, _PREC_ADD) + "+" + wrap(node.right, _PREC_MUL)
    if isinstance(node, Sub):
        return wrap(node.left, _PREC_ADD) + "-" + wrap(node.right, _PREC_MUL)
    if isinstance(node, Mul):
        return wrap(node.left, _PREC_MUL) + "*" + wrap(node.right, _PREC_NEG)
    if isinstance(node, Div):
        return wrap(node.left, _PREC_MUL) + "/" + wrap(node.right, _PREC_NEG)
    if isinstance(node, Pow):
        return wrap(node.base, _PREC_ATOM) + "^" + str(node.exponent)
    if isinstance(node, Call):
        return f"{node.name}({render(node.argument)})"
    raise TypeError(f"not an expression node: {node!r}")
