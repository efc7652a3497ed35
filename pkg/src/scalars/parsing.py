import re
from fractions import Fraction
from typing import List, Tuple

from global_variables import ParseError

from .rings import (
    Scalar,
    RingSpec,
    integers,
    modular,
    monomial_quotient,
    poly,
    rationals,
)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_MOD_SUFFIX = re.compile(r"^\s*(-?\d+)\s+mod\s+(\d+)\s*$")
_RING = re.compile(
    r"^(ZZ|QQ|ZZ/(\d+)|GF\((\d+)\))(?:\[([A-Za-z_][A-Za-z_0-9,]*)\](?:/\(([A-Za-z_][A-Za-z_0-9]*)\^(\d+)\))?)?$"
)


def tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise ParseError(f"cannot tokenize {text!r}")
        number, name, symbol = match.groups()
        if number is not None:
            tokens.append(("num", number))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("sym", symbol))
        position = match.end()
    return tokens


class ExpressionParser:
    """
    Recursive descent over  expr := term (('+'|'-') term)*,
    term := unary ('*' unary)*, unary := '-' unary | power,
    power := atom ('^' int)?, atom := int ('/' int)? | name | '(' expr ')'.
    """

    def __init__(self, text, make_number, make_name):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0
        self.make_number = make_number
        self.make_name = make_name

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.position != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def peek(self):
        return self.tokens[self.position] if self.position < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        token = self.peek()
        if token[0] is None or (kind and token[0] != kind) or (value and token[1] != value):
            raise ParseError(f"unexpected token {token[1]!r} in {self.text!r}")
        self.position += 1
        return token

    def expr(self):
        value = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            _, op = self.take()
            right = self.term()
            value = value + right if op == "+" else value - right
        return value

    def term(self):
        value = self.unary()
        while self.peek() == ("sym", "*"):
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("sym", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            exponent = int(self.take("num")[1])
            return base ** exponent
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "num":
            self.take()
            if self.peek() == ("sym", "/"):
                self.take()
                denominator = int(self.take("num")[1])
                if denominator == 0:
                    raise ParseError("division by zero")
                return self.make_number(Fraction(int(value), denominator))
            return self.make_number(Fraction(int(value)))
        if kind == "name":
            self.take()
            return self.make_name(value)
        if (kind, value) == ("sym", "("):
            self.take()
            inner = self.expr()
            self.take("sym", ")")
            return inner
        raise ParseError(f"unexpected token {value!r} in {self.text!r}")


def parse_scalar(text: str, ring: RingSpec) -> Scalar:
    """
    Parse the textual scalar grammar: "-12", "a/b", "r mod n", "3*x^2 - x + 1".
    """
    text = str(text)
    suffix = _MOD_SUFFIX.match(text)
    if suffix is not None:
        residue, n = int(suffix.group(1)), int(suffix.group(2))
        if ring.characteristic() != n:
            raise ParseError(f"{text!r} does not live in {ring}")
        return ring.from_int(residue)

    def make_name(name):
        if name not in ring.poly_variables:
            raise ParseError(f"unknown variable {name!r} for ring {ring}")
        return ring.gen(name)

    try:
        return ExpressionParser(text, ring.from_fraction, make_name).parse()
    except ParseError:
        raise
    except ValueError as error:
        raise ParseError(f"cannot read {text!r} in {ring}: {error}") from error


def parse_ring(text: str) -> RingSpec:
    """
    Ring grammar: ZZ, QQ, ZZ/n (or GF(p)), <ground>[a,b], <ground>[a,b]/(x^p).
    """
    match = _RING.match(str(text).replace(" ", ""))
    if match is None:
        raise ParseError(f"cannot read ring {text!r}")
    head, n, p, variables, var, power = match.groups()
    if head == "ZZ":
        ring = integers()
    elif head == "QQ":
        ring = rationals()
    else:
        ring = modular(int(n or p))
    if variables:
        ring = poly(ring, variables.split(","))
        if var:
            ring = monomial_quotient(ring, var, int(power))
    return ring
