"""A small expression language over bicomplex numbers.

Grammar, loosest binding first::

    sum     := product (("+" | "-") product)*
    product := unary ("*" unary)*
    unary   := "-" unary | power
    power   := atom ("^" ["-"] INTEGER)*
    atom    := NUMBER | UNIT | NAME "(" sum ")" | "(" sum ")"

``NUMBER`` is an integer, a decimal or an atomic rational ``p/q``; there is
no division operator, inverses go through ``inv(...)``.  Units are ``i1 i2
j1 e1 e2`` in any case.  Functions are the conjugations ``dag0``..``dag5``,
``pdag6``, ``pdag7``, plus ``inv``, and the display transforms ``idem`` and
``vec``, which leave the value unchanged.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import E1, E2, I1, I2, J1, Bicomplex, inverse_idempotent
from .involution import ConjTag, apply
from .scalar import EXACT, is_finite

UNITS = {"i1": I1, "i2": I2, "j1": J1, "e1": E1, "e2": E2}
CONJUGATIONS = {tag.value: tag for tag in ConjTag}
DISPLAY = ("idem", "vec")
FUNCTIONS = frozenset(CONJUGATIONS) | {"inv"} | set(DISPLAY)


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f" (expected {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class DivisionByZero(ArithmeticError):
    pass


class EvalOverflow(OverflowError):
    pass


# -- syntax tree --------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    text: str


@dataclass(frozen=True)
class Unit:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


Expr = Union[Num, Unit, Neg, BinOp, Pow, Call]


# -- lexer ----------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+/\d+|\d+\.\d*|\.\d+|\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {source[pos]!r}", pos, {"number", "name", "operator"})
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


# -- parser -----------------------------------------------------------------------


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tok
        self.pos += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail({repr(text)})
        return self.advance()

    def fail(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ExprSyntaxError(f"unexpected {what}", t.offset, expected)

    def parse(self) -> Expr:
        node = self.sum()
        if self.tok.kind != "end":
            self.fail({"'+'", "'-'", "'*'", "'^'", "end of input"})
        return node

    def sum(self) -> Expr:
        node = self.product()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            node = BinOp(op, node, self.product())
        return node

    def product(self) -> Expr:
        node = self.unary()
        while self.at("*"):
            self.advance()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.at("-"):
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        while self.at("^"):
            self.advance()
            sign = 1
            if self.at("-"):
                self.advance()
                sign = -1
            if self.tok.kind != "number" or not self.tok.text.isdigit():
                self.fail({"integer exponent"})
            node = Pow(node, sign * int(self.advance().text))
        return node

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "number":
            self.advance()
            return Num(t.text)
        if t.kind == "name":
            name = t.text.lower()
            self.advance()
            if name in UNITS:
                return Unit(name)
            if name in FUNCTIONS:
                self.expect("(")
                arg = self.sum()
                self.expect(")")
                return Call(name, arg)
            raise ExprSyntaxError(f"unknown name {t.text!r}", t.offset, set(UNITS) | FUNCTIONS)
        if self.at("("):
            self.advance()
            node = self.sum()
            self.expect(")")
            return node
        self.fail({"number", "unit", "function", "'('", "'-'"})


def parse(source: str) -> Expr:
    return _Parser(source).parse()


# -- printer ----------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def _wrap(node: Expr, needed: int) -> str:
    text = pretty(node)
    return f"({text})" if _prec(node) < needed else text


def pretty(node: Expr) -> str:
    """Canonical source text; ``parse(pretty(e)) == e``."""
    if isinstance(node, Num):
        return node.text
    if isinstance(node, Unit):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({pretty(node.arg)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, 3)
    if isinstance(node, Pow):
        return f"{_wrap(node.base, 4)}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        sep = "*" if node.op == "*" else f" {node.op} "
        return _wrap(node.left, p) + sep + _wrap(node.right, p + 1)
    raise TypeError(node)


# -- evaluation -------------------------------------------------------------------


def _number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise DivisionByZero(f"literal {text} divides by zero") from None


def evaluate(node: Expr, mode: str = EXACT) -> Bicomplex:
    """Value of ``node``; exact mode stays in the rationals throughout."""
    try:
        value = _eval(node, mode).to_mode(mode)
    except OverflowError as exc:
        raise EvalOverflow(str(exc)) from None
    if not all(is_finite(x) for x in (value.z1.re, value.z1.im, value.z2.re, value.z2.im)):
        raise EvalOverflow("floating-point overflow")
    return value


def _eval(node: Expr, mode: str) -> Bicomplex:
    if isinstance(node, Num):
        return Bicomplex.scalar(_number(node.text)).to_mode(mode)
    if isinstance(node, Unit):
        return UNITS[node.name].to_mode(mode)
    if isinstance(node, Neg):
        return -_eval(node.operand, mode)
    if isinstance(node, BinOp):
        a, b = _eval(node.left, mode), _eval(node.right, mode)
        return a + b if node.op == "+" else a - b if node.op == "-" else a * b
    if isinstance(node, Pow):
        return _eval(node.base, mode) ** node.exponent
    if isinstance(node, Call):
        arg = _eval(node.arg, mode)
        if node.func in CONJUGATIONS:
            return apply(CONJUGATIONS[node.func], arg)
        if node.func == "inv":
            return inverse_idempotent(arg)
        return arg
    raise TypeError(node)


def display_form(node: Expr) -> str:
    """``"idem"``, ``"vec"`` or ``"cartesian"``, from the outermost call."""
    if isinstance(node, Call) and node.func in DISPLAY:
        return node.func
    return "cartesian"


def evaluate_text(source: str, mode: str = EXACT) -> Bicomplex:
    return evaluate(parse(source), mode)
