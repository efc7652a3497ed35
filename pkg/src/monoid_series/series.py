"""
Truncated formal series over a trace monoid: the total algebra k^M with the
Cauchy product, Kleene stars, Mobius functions and character expansions.
"""
import re
from typing import Dict, Mapping, Optional

from global_variables import MonoidMismatch, NotProper, ParseError
from scalars import MODULAR, RingSpec, Scalar, parse_scalar

from .trace import Trace, TraceMonoid


class Series:
    """
    Element of the total algebra of `monoid` known up to traces of length
    `length`. Keys are normal forms, zero coefficients are never stored.
    """

    __slots__ = ("monoid", "ring", "terms", "length")

    def __init__(self, monoid: TraceMonoid, ring: RingSpec, terms: Optional[Mapping] = None, length: int = 0):
        self.monoid = monoid
        self.ring = ring
        self.length = length
        clean: Dict[Trace, Scalar] = {}
        for word, coeff in (terms or {}).items():
            word = monoid.normal_form(word)
            if len(word) > length:
                continue
            coeff = coeff if isinstance(coeff, Scalar) else ring.from_fraction(coeff)
            clean[word] = clean[word] + coeff if word in clean else coeff
        self.terms = {w: c for w, c in clean.items() if not c.is_zero()}

    @classmethod
    def one(cls, monoid, ring, length):
        return cls(monoid, ring, {(): ring.one()}, length)

    def _check(self, other: "Series"):
        if other.monoid != self.monoid or other.ring != self.ring:
            raise MonoidMismatch(f"{self.monoid} over {self.ring} vs {other.monoid} over {other.ring}")

    def coefficient(self, word) -> Scalar:
        return self.terms.get(self.monoid.normal_form(word), self.ring.zero())

    def truncate(self, length: int) -> "Series":
        return Series(self.monoid, self.ring, self.terms, length)

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        merged = dict(self.terms)
        for word, coeff in other.terms.items():
            merged[word] = merged[word] + coeff if word in merged else coeff
        return Series(self.monoid, self.ring, merged, min(self.length, other.length))

    def __neg__(self):
        return Series(self.monoid, self.ring, {w: -c for w, c in self.terms.items()}, self.length)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, factor) -> "Series":
        return Series(self.monoid, self.ring, {w: factor * c for w, c in self.terms.items()}, self.length)

    def __mul__(self, other):
        if isinstance(other, Series):
            return cauchy_product(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.monoid, self.ring, self.length, self.terms) == (other.monoid, other.ring, other.length, other.terms)

    def is_proper(self) -> bool:
        return () not in self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        text = ""
        for word, coeff in self.items():
            monomial = self.monoid.format_trace(word)
            negative = coeff.ring.kind != MODULAR and coeff.is_constant() and str(coeff).startswith("-")
            magnitude = -coeff if negative else coeff
            if not word:
                body = magnitude.coefficient_str()
            elif magnitude.is_one():
                body = monomial
            else:
                body = f"{magnitude.coefficient_str()}*{monomial}"
            if not text:
                text = ("-" if negative else "") + body
            else:
                text += (" - " if negative else " + ") + body
        return text

    def __repr__(self):
        return f"Series({self}, L={self.length})"


def cauchy_product(P: Series, Q: Series) -> Series:
    """
    P * Q = sum over uv = w of P(u) Q(v) w, exact up to the common truncation.
    Every factorization of a trace w arises from exactly one pair (u, v) of
    stored keys, so looping over key pairs covers the finite fibers.
    """
    P._check(Q)
    length = min(P.length, Q.length)
    acc: Dict[Trace, Scalar] = {}
    for u, a in P.terms.items():
        for v, b in Q.terms.items():
            if len(u) + len(v) > length:
                continue
            product = a * b
            if product.is_zero():
                continue
            w = P.monoid.multiply(u, v)
            acc[w] = acc[w] + product if w in acc else product
    return Series(P.monoid, P.ring, acc, length)


def kleene_star(S: Series, length: Optional[int] = None) -> Series:
    """
    S* = sum of S^n for n >= 0, truncated at `length`.

    Raises:
    NotProper: when S has a nonzero constant term.
    """
    if not S.is_proper():
        raise NotProper(f"constant term {S.terms[()]} of {S} is not zero")
    length = S.length if length is None else length
    S = Series(S.monoid, S.ring, S.terms, length)
    total = Series.one(S.monoid, S.ring, length)
    power = total
    for _ in range(length):
        power = cauchy_product(power, S)
        if not power.terms:
            break
        total = total + power
    return total


def characteristic_series(monoid: TraceMonoid, ring: RingSpec, length: int) -> Series:
    """The sum of all traces, M underlined in the usual notation."""
    return Series(monoid, ring, {t: ring.one() for t in monoid.traces(length)}, length)


def mobius(monoid: TraceMonoid, ring: RingSpec, length: Optional[int] = None) -> Series:
    """
    Mobius function of a trace monoid as a polynomial: the signed sum of its
    cliques, sum over C of (-1)^|C| prod(C).
    """
    cliques = monoid.cliques()
    length = max(len(c) for c in cliques) if length is None else length
    return Series(monoid, ring, {c: ring.from_int((-1) ** len(c)) for c in cliques}, length)


def verify_mobius_inverse(monoid: TraceMonoid, ring: RingSpec, length: int) -> bool:
    mu = mobius(monoid, ring, length)
    total = characteristic_series(monoid, ring, length)
    one = Series.one(monoid, ring, length)
    star_form = kleene_star(-(mu - one), length)
    return cauchy_product(mu, total) == one and cauchy_product(total, mu) == one and star_form == total


def character_series(chi: Mapping[str, Scalar], monoid: TraceMonoid, ring: RingSpec, length: int) -> Series:
    """Sum over traces m of chi(m) m, chi extended multiplicatively from the letters."""
    terms = {}
    for trace in monoid.traces(length):
        value = ring.one()
        for letter in trace:
            value = value * chi[letter]
        terms[trace] = value
    return Series(monoid, ring, terms, length)


def character_star_argument(chi: Mapping[str, Scalar], monoid: TraceMonoid, ring: RingSpec, length: int) -> Series:
    """The proper series -sum over cliques C != 1 of chi(C) mu(C) C whose star is chi."""
    terms = {}
    for clique in monoid.cliques()[1:]:
        value = ring.from_int(-((-1) ** len(clique)))
        for letter in clique:
            value = value * chi[letter]
        terms[clique] = value
    return Series(monoid, ring, terms, length)


def character_series_via_mobius(chi, monoid, ring, length) -> Series:
    return kleene_star(character_star_argument(chi, monoid, ring, length), length)


def free_abelian_character_star(chi: Mapping[str, Scalar], monoid: TraceMonoid, ring: RingSpec, length: int) -> Series:
    """(1 - prod(1 - chi(x) x))* for a complete commutation graph."""
    if not monoid.is_commutative:
        raise MonoidMismatch(f"{monoid} is not commutative")
    one = Series.one(monoid, ring, length)
    product = one
    for letter in monoid.alphabet:
        factor = one - Series(monoid, ring, {(letter,): chi[letter]}, length)
        product = cauchy_product(product, factor)
    return kleene_star(one - product, length)


def pairing(S: Series, P: Series) -> Scalar:
    """<S|P> = sum over w of S(w) P(w)."""
    S._check(P)
    total = S.ring.zero()
    for word, coeff in S.terms.items():
        if word in P.terms:
            total = total + coeff * P.terms[word]
    return total


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_series(text: str, monoid: TraceMonoid, ring: RingSpec, length: int) -> Series:
    """
    Read "1/2*x + y*x - 3": each term is an optional scalar times a trace.
    Coefficients are numbers or ring variables multiplied into the term.
    """
    text = str(text).strip()
    if not text:
        raise ParseError("empty series")
    terms: Dict[Trace, Scalar] = {}
    position = 0
    for match in _TERM.finditer(text):
        if match.start() != position:
            raise ParseError(f"cannot read series {text!r}")
        position = match.end()
        sign, body = match.group(1), match.group(2).strip()
        factors = [f.strip() for f in body.split("*")]
        coeff = ring.one()
        letters = []
        for factor in factors:
            base = factor.partition("^")[0]
            if base and (base in monoid.alphabet or all(c in monoid.alphabet for c in base)):
                letters.append(factor)
            else:
                coeff = coeff * parse_scalar(factor, ring)
        word = monoid.parse_trace("*".join(letters)) if letters else ()
        if sign == "-":
            coeff = -coeff
        terms[word] = terms[word] + coeff if word in terms else coeff
    if position != len(text):
        raise ParseError(f"cannot read series {text!r}")
    return Series(monoid, ring, terms, length)
