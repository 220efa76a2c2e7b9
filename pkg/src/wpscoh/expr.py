"""A small expression language for ring elements.

Grammar (whitespace insignificant):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' nat)?
    atom   := nat | symbol | '(' expr ')'
    symbol := 'u' | 'g' nat | 'a' nat

Precedence is ^ over unary minus over * over + and -; * is
left-associative and ^ does not associate (a^2^3 is a syntax error).
Exponents are literal non-negative integers.  Symbol validity is the
target ring's business, checked at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ParseError(ValueError):
    """Lexical or syntactic error, carrying the 0-based input position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvalError(ValueError):
    """A parsed expression that the target ring cannot interpret."""


# -- AST ---------------------------------------------------------------------
# Leaf positions are kept for error messages but excluded from equality,
# so pretty-printed round trips compare equal.


@dataclass(frozen=True)
class Lit:
    value: int
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


# -- lexer ---------------------------------------------------------------------


def tokenize(text: str) -> list:
    """Token stream of (kind, value, position) triples, ending with 'end'."""
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(("int", int(text[start:i]), start))
            continue
        if ch == "u":
            tokens.append(("sym", "u", i))
            i += 1
            continue
        if ch in "ga":
            start = i
            i += 1
            if i >= len(text) or not text[i].isdigit():
                raise ParseError(f"expected digits after '{ch}'", start)
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(("sym", text[start:i], start))
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, len(text)))
    return tokens


# -- parser ---------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.factor())
        node = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind != "int":
                raise ParseError(f"expected integer exponent, got {_describe(kind, value)}", pos)
            self.advance()
            node = Pow(node, value)
            if self.peek()[0] == "^":
                raise ParseError("exponents do not chain; parenthesize", self.peek()[2])
        return node

    def atom(self):
        kind, value, pos = self.advance()
        if kind == "int":
            return Lit(value, pos)
        if kind == "sym":
            return Sym(value, pos)
        if kind == "(":
            node = self.expr()
            kind, value, pos = self.advance()
            if kind != ")":
                raise ParseError(f"expected ')', got {_describe(kind, value)}", pos)
            return node
        raise ParseError(f"expected a value, got {_describe(kind, value)}", pos)


def _describe(kind, value):
    return "end of input" if kind == "end" else repr(str(value))


def parse(text: str):
    """Parse an expression; raises ParseError with a position on bad input.

    >>> parse("a2*a3 + u^2")
    Add(left=Mul(left=Sym(name='a2'), right=Sym(name='a3')), right=Pow(base=Sym(name='u'), exponent=2))
    """
    p = _Parser(tokenize(text))
    node = p.expr()
    kind, value, pos = p.peek()
    if kind != "end":
        raise ParseError(f"expected end of input, got {_describe(kind, value)}", pos)
    return node


# -- printer ----------------------------------------------------------------------

# binding strength of each node; children below the required strength
# get parenthesized so the round trip preserves the tree
_LEVEL = {Add: 1, Sub: 1, Mul: 2, Neg: 3, Pow: 4, Lit: 5, Sym: 5}


def _wrap(node, minimum):
    text = unparse(node)
    return f"({text})" if _LEVEL[type(node)] < minimum else text


def unparse(node) -> str:
    """Render an AST so that parse(unparse(t)) == t.

    >>> unparse(parse("2*(a4 - 1)"))
    '2*(a4 - 1)'
    """
    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, 3)
    if isinstance(node, Add):
        return f"{_wrap(node.left, 1)} + {_wrap(node.right, 2)}"
    if isinstance(node, Sub):
        return f"{_wrap(node.left, 1)} - {_wrap(node.right, 2)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, 2)}*{_wrap(node.right, 3)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, 5)}^{node.exponent}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluator -----------------------------------------------------------------------


def evaluate(node, ring):
    """Evaluate an AST in a ring exposing from_int, one and symbol_element.

    Integer literals become multiples of the unit; symbols are resolved
    by the ring, which rejects ones it does not own.
    """
    if isinstance(node, Lit):
        return ring.from_int(node.value)
    if isinstance(node, Sym):
        try:
            return ring.symbol_element(node.name)
        except ValueError as exc:
            raise EvalError(f"{exc} (at position {node.pos})") from None
    if isinstance(node, Neg):
        return -evaluate(node.operand, ring)
    if isinstance(node, Add):
        return evaluate(node.left, ring) + evaluate(node.right, ring)
    if isinstance(node, Sub):
        return evaluate(node.left, ring) - evaluate(node.right, ring)
    if isinstance(node, Mul):
        return evaluate(node.left, ring) * evaluate(node.right, ring)
    if isinstance(node, Pow):
        return evaluate(node.base, ring) ** node.exponent
    raise TypeError(f"not an expression node: {node!r}")
