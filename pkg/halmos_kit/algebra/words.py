"""Words in P, Q and I: a small expression language and its evaluators.

Grammar (whitespace is ignored, juxtaposition multiplies)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := ('+' | '-') factor | power
    power  := atom ('^' INT)?
    atom   := NUMBER ('i' | 'j')? | 'i' | 'P' | 'Q' | 'I' | '(' expr ')'

so ``2P - 3iQ``, ``(P+Q)^2``, ``PQP`` and ``I - Q`` are all words.
"""

import re
from dataclasses import dataclass
from typing import Any, List, Optional, Protocol, Sequence, Union

from ..canonical import HalmosDecomposition
from ..errors import WordSyntaxError
from .element import (
    AlgebraElement,
    add,
    identity_element,
    mul,
    p_symbol,
    power,
    q_symbol,
    scale,
)

GENERATORS = ("P", "Q", "I")

_TOKEN = re.compile(
    r"(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?P<imag>[ij])?"
    r"|(?P<name>[A-Za-z])"
    r"|(?P<op>[-+*^()−])"
    r"|(?P<space>\s+)"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int
    value: Any = None


def tokenize(text: str) -> List[Token]:
    tokens, pos = [], 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos + 1)
        column = pos + 1
        pos = match.end()
        if match.group("space"):
            continue
        if match.group("number"):
            value = float(match.group("number"))
            if match.group("imag"):
                value = complex(0.0, value)
            tokens.append(Token("number", match.group(0), column, value))
        elif match.group("name"):
            name = match.group("name")
            if name == "i":
                tokens.append(Token("number", name, column, 1j))
            elif name in GENERATORS:
                tokens.append(Token("name", name, column, name))
            else:
                raise WordSyntaxError(f"unknown symbol {name!r}", column)
        else:
            op = match.group("op").replace("−", "-")
            tokens.append(Token("op", op, column))
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


# AST


@dataclass(frozen=True)
class Literal:
    value: complex


@dataclass(frozen=True)
class Generator:
    name: str


@dataclass(frozen=True)
class Negate:
    operand: Any


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: Any
    right: Any


@dataclass(frozen=True)
class Power:
    base: Any
    exponent: int


class WordBackend(Protocol):
    def generator(self, name: str) -> Any: ...

    def scalar(self, value: complex) -> Any: ...

    def add(self, x: Any, y: Any) -> Any: ...

    def mul(self, x: Any, y: Any) -> Any: ...

    def scale(self, x: Any, c: complex) -> Any: ...

    def power(self, x: Any, k: int) -> Any: ...


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def starts_atom(self) -> bool:
        token = self.current
        return token.kind in ("number", "name") or (token.kind == "op" and token.text == "(")

    def fail(self, expected: str):
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise WordSyntaxError(f"expected {expected}, found {found}", token.column)

    def parse(self):
        node = self.expr()
        if self.current.kind != "end":
            self.fail("operator or end of input")
        return node

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            node = BinaryOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while True:
            if self.at_op("*"):
                self.advance()
                node = BinaryOp("*", node, self.factor())
            elif self.starts_atom():
                node = BinaryOp("*", node, self.power())
            else:
                return node

    def factor(self):
        if self.at_op("+", "-"):
            op = self.advance().text
            operand = self.factor()
            return Negate(operand) if op == "-" else operand
        return self.power()

    def power(self):
        node = self.atom()
        if self.at_op("^"):
            self.advance()
            token = self.current
            if token.kind != "number" or not re.fullmatch(r"\d+", token.text):
                self.fail("non-negative integer exponent")
            self.advance()
            node = Power(node, int(token.text))
        return node

    def atom(self):
        token = self.current
        if token.kind == "number":
            self.advance()
            return Literal(token.value)
        if token.kind == "name":
            self.advance()
            return Generator(token.value)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            if not self.at_op(")"):
                self.fail("')'")
            self.advance()
            return node
        self.fail("P, Q, I, a number or '('")


@dataclass(frozen=True)
class WordExpression:
    text: str
    root: Any

    def evaluate(self, backend: WordBackend):
        result = _evaluate(self.root, backend)
        if isinstance(result, complex):
            return backend.scalar(result)
        return result


def parse_word(text: str) -> WordExpression:
    """Parse ``text``; raises WordSyntaxError with the 1-based column of the fault."""
    return WordExpression(text=text, root=_Parser(text).parse())


def _evaluate(node, backend: WordBackend):
    if isinstance(node, Literal):
        return complex(node.value)
    if isinstance(node, Generator):
        return backend.generator(node.name)
    if isinstance(node, Negate):
        value = _evaluate(node.operand, backend)
        return -value if isinstance(value, complex) else backend.scale(value, -1.0)
    if isinstance(node, Power):
        value = _evaluate(node.base, backend)
        if isinstance(value, complex):
            return value**node.exponent
        return backend.power(value, node.exponent)

    left = _evaluate(node.left, backend)
    right = _evaluate(node.right, backend)
    numbers = isinstance(left, complex), isinstance(right, complex)
    if node.op == "*":
        if all(numbers):
            return left * right
        if numbers[0]:
            return backend.scale(right, left)
        if numbers[1]:
            return backend.scale(left, right)
        return backend.mul(left, right)

    if node.op == "-":
        right = -right if numbers[1] else backend.scale(right, -1.0)
    if all(numbers):
        return left + right
    if numbers[0]:
        left = backend.scalar(left)
    if numbers[1]:
        right = backend.scalar(right)
    return backend.add(left, right)


class SymbolBackend:
    """Evaluates words in the symbol calculus of one decomposition."""

    def __init__(self, dec: HalmosDecomposition):
        self.dec = dec
        self._generators = {
            "P": p_symbol(dec),
            "Q": q_symbol(dec),
            "I": identity_element(dec),
        }

    def generator(self, name: str) -> AlgebraElement:
        return self._generators[name]

    def scalar(self, value: complex) -> AlgebraElement:
        return scale(self._generators["I"], value)

    def add(self, x, y):
        return add(x, y)

    def mul(self, x, y):
        return mul(x, y)

    def scale(self, x, c):
        return scale(x, c)

    def power(self, x, k):
        return power(x, k)


Word = Union[str, WordExpression]


def symbol_of_word(
    word: Union[Word, Sequence[Word]],
    dec: HalmosDecomposition,
    coeffs: Optional[Sequence[complex]] = None,
) -> AlgebraElement:
    """Symbol of a word, or of the linear combination ``sum coeffs[k] * word[k]``."""
    backend = SymbolBackend(dec)
    if isinstance(word, (str, WordExpression)):
        words, coeffs = [word], [1.0] if coeffs is None else coeffs
    else:
        words = list(word)
        coeffs = [1.0] * len(words) if coeffs is None else list(coeffs)
    if len(coeffs) != len(words):
        raise ValueError(f"{len(words)} words but {len(coeffs)} coefficients")

    total = scale(identity_element(dec), 0.0)
    for w, c in zip(words, coeffs):
        expression = parse_word(w) if isinstance(w, str) else w
        total = add(total, scale(expression.evaluate(backend), c))
    return total
