"""Expression mini-language for transcribed right-hand sides.

Grammar (whitespace is insignificant)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | primary
    primary := INT | RAT | 'pi' | 'gamma' | FUNC '(' expr ')' | '(' expr ')'
    FUNC    := 'ln' | 'sqrt' | 'sin' | 'cos' | 'cot'

``RAT`` is ``digits/digits`` written without spaces; it is lexed as a single
rational literal unless the previous token is ``/`` (so ``x/2/3`` keeps its
left-associative meaning).  There is no power operator.  Trees are kept
exactly as written; nothing is simplified.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from clausen_sums.errors import DomainError, ParseError
from clausen_sums.hp import HPReal, PrecisionContext
from clausen_sums.rational import format_rational


class Expr:
    pass


@dataclass(frozen=True)
class IntLit(Expr):
    value: int


@dataclass(frozen=True)
class RatLit(Expr):
    value: Fraction


@dataclass(frozen=True)
class Pi(Expr):
    pass


@dataclass(frozen=True)
class EulerGammaConst(Expr):
    pass


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Func(Expr):
    arg: Expr
    name = ""


@dataclass(frozen=True)
class Sqrt(Func):
    name = "sqrt"


@dataclass(frozen=True)
class Ln(Func):
    name = "ln"


@dataclass(frozen=True)
class Sin(Func):
    name = "sin"


@dataclass(frozen=True)
class Cos(Func):
    name = "cos"


@dataclass(frozen=True)
class Cot(Func):
    name = "cot"


@dataclass(frozen=True)
class BinOp(Expr):
    left: Expr
    right: Expr
    op = ""
    prec = 0


@dataclass(frozen=True)
class Add(BinOp):
    op, prec = "+", 1


@dataclass(frozen=True)
class Sub(BinOp):
    op, prec = "-", 1


@dataclass(frozen=True)
class Mul(BinOp):
    op, prec = "*", 2


@dataclass(frozen=True)
class Div(BinOp):
    op, prec = "/", 2


FUNCTIONS = {cls.name: cls for cls in (Sqrt, Ln, Sin, Cos, Cot)}
BINOPS = {cls.op: cls for cls in (Add, Sub, Mul, Div)}

# --------------------------------------------------------------------------
# lexer / parser

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/()]))"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if kind == "rat" and tokens and tokens[-1].text == "/":
            # a/2/3 means (a/2)/3: re-lex the numerator alone
            num = value.split("/")[0]
            tokens.append(_Token("int", num, start))
            pos = start + len(num)
            continue
        tokens.append(_Token(kind, value, start))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def fail(self, expected: str):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected {expected}, found {found}", tok.pos, self.text)

    def advance(self) -> _Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text: str):
        if self.tok.text != text:
            self.fail(repr(text))
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail("an operator or end of input")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            node = BINOPS[op](node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.tok.text in ("*", "/"):
            op = self.advance().text
            node = BINOPS[op](node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.primary()

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            return IntLit(int(tok.text))
        if tok.kind == "rat":
            self.advance()
            num, den = tok.text.split("/")
            if int(den) == 0:
                raise ParseError("zero denominator in rational literal", tok.pos, self.text)
            return RatLit(Fraction(int(num), int(den)))
        if tok.kind == "name":
            if tok.text == "pi":
                self.advance()
                return Pi()
            if tok.text == "gamma":
                self.advance()
                return EulerGammaConst()
            if tok.text in FUNCTIONS:
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return FUNCTIONS[tok.text](arg)
            raise ParseError(
                f"unknown name {tok.text!r} (expected pi, gamma or one of {', '.join(FUNCTIONS)})",
                tok.pos,
                self.text,
            )
        if tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        self.fail("a number, 'pi', a function call or '('")


def ast_parse(text: str) -> Expr:
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# rendering

_ATOM_PREC = 4
_NEG_PREC = 3


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return e.prec
    if isinstance(e, Neg):
        return _NEG_PREC
    if isinstance(e, RatLit):
        # n/d behaves like a division when it sits next to * or /
        return 2
    return _ATOM_PREC


def _wrap(e: Expr, parens: bool) -> str:
    s = ast_render(e)
    return f"({s})" if parens else s


def ast_render(e: Expr) -> str:
    """Canonical text; ``ast_parse(ast_render(e)) == e`` for parsed trees."""
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, RatLit):
        text = format_rational(e.value)
        return f"({text})" if e.value < 0 else text
    if isinstance(e, Pi):
        return "pi"
    if isinstance(e, EulerGammaConst):
        return "gamma"
    if isinstance(e, Func):
        return f"{e.name}({ast_render(e.arg)})"
    if isinstance(e, Neg):
        return "-" + _wrap(e.arg, _prec(e.arg) < _NEG_PREC)
    if isinstance(e, BinOp):
        left = _wrap(e.left, _prec(e.left) < e.prec)
        right = _wrap(e.right, _prec(e.right) <= e.prec)
        return f"{left} {e.op} {right}"
    raise TypeError(f"not an expression node: {e!r}")


# --------------------------------------------------------------------------
# evaluation


def ast_eval(e: Expr, ctx: PrecisionContext) -> HPReal:
    """Evaluate at ``ctx`` precision.  Domain errors carry the node path."""
    return HPReal(_eval(e, ctx, ()), ctx.digits)


def _fail(path: tuple, message: str):
    where = "/".join(path) or "<root>"
    raise DomainError(f"{message} at node {where}")


def _eval(e: Expr, ctx: PrecisionContext, path: tuple):
    mp = ctx.mp
    if isinstance(e, IntLit):
        return mp.mpf(e.value)
    if isinstance(e, RatLit):
        return mp.mpf(e.value.numerator) / e.value.denominator
    if isinstance(e, Pi):
        return +mp.pi
    if isinstance(e, EulerGammaConst):
        return +mp.euler
    if isinstance(e, Neg):
        return -_eval(e.arg, ctx, path + ("Neg",))
    if isinstance(e, Func):
        here = path + (type(e).__name__,)
        x = _eval(e.arg, ctx, here)
        if isinstance(e, Sqrt):
            if x < 0:
                _fail(here, f"sqrt of negative value {mp.nstr(x, 8)}")
            return mp.sqrt(x)
        if isinstance(e, Ln):
            if x <= 0:
                _fail(here, f"ln of nonpositive value {mp.nstr(x, 8)}")
            return mp.ln(x)
        if isinstance(e, Sin):
            return mp.sin(x)
        if isinstance(e, Cos):
            return mp.cos(x)
        s = mp.sin(x)
        if abs(s) < ctx.tolerance(ctx.working_digits - 5):
            _fail(here, "cot at a pole")
        return mp.cos(x) / s
    if isinstance(e, BinOp):
        name = type(e).__name__
        a = _eval(e.left, ctx, path + (f"{name}.left",))
        b = _eval(e.right, ctx, path + (f"{name}.right",))
        if isinstance(e, Add):
            return a + b
        if isinstance(e, Sub):
            return a - b
        if isinstance(e, Mul):
            return a * b
        if abs(b) < ctx.tolerance(ctx.working_digits - 5):
            _fail(path + (f"{name}.right",), "division by a value indistinguishable from zero")
        return a / b
    raise TypeError(f"not an expression node: {e!r}")
