from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from global_variables import BadParameter, DescriptorMismatch, RingMismatch
from scalars import MODULAR, Scalar

from .basis import sort_key, tuple_sort_key


def _coefficient(ring, value) -> Scalar:
    if isinstance(value, Scalar):
        if value.ring != ring:
            if value.ring != ring.ground:
                raise RingMismatch(f"{value} lives in {value.ring}, not {ring}")
            return ring.from_ground(value)
        return value
    if isinstance(value, (int, Fraction)):
        return ring.from_fraction(value)
    raise TypeError(f"cannot use {value!r} as a coefficient")


def _format_terms(items, format_key) -> str:
    if not items:
        return "0"
    text = ""
    for key, coeff in items:
        basis = format_key(key)
        negative = coeff.ring.kind != MODULAR and coeff.is_constant() and str(coeff).startswith("-")
        magnitude = -coeff if negative else coeff
        if magnitude.is_one() and basis != "1":
            body = basis
        elif basis == "1":
            body = magnitude.coefficient_str()
        else:
            body = f"{magnitude.coefficient_str()}*{basis}"
        if not text:
            text = ("-" if negative else "") + body
        else:
            text += (" - " if negative else " + ") + body
    return text


class Element:
    """
    Sparse linear combination of basis indices of a bialgebra.
    Immutable; arithmetic returns new elements and never stores zeros.
    """

    __slots__ = ("bialgebra", "terms")

    def __init__(self, bialgebra, terms: Optional[Mapping] = None):
        self.bialgebra = bialgebra
        ring = bialgebra.ring
        acc: Dict[object, Scalar] = {}
        for index, coeff in (terms or {}).items():
            coeff = _coefficient(ring, coeff)
            acc[index] = acc[index] + coeff if index in acc else coeff
        self.terms = {i: c for i, c in acc.items() if not c.is_zero()}

    def _same(self, other: "Element"):
        if other.bialgebra != self.bialgebra:
            raise DescriptorMismatch(f"{self.bialgebra} vs {other.bialgebra}")

    def _lift(self, other) -> Optional["Element"]:
        if isinstance(other, Element):
            self._same(other)
            return other
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            return self.bialgebra.one() * other
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        merged = dict(self.terms)
        for index, coeff in other.terms.items():
            merged[index] = merged[index] + coeff if index in merged else coeff
        return Element(self.bialgebra, merged)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.bialgebra, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, factor) -> "Element":
        factor = _coefficient(self.bialgebra.ring, factor)
        return Element(self.bialgebra, {i: factor * c for i, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.bialgebra.multiply(self, other)
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        if exponent < 0:
            raise BadParameter("negative powers of elements are not supported")
        result = self.bialgebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.bialgebra == other.bialgebra and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, index) -> Scalar:
        return self.terms.get(index, self.bialgebra.ring.zero())

    def items(self) -> List[Tuple[object, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: sort_key(item[0]))

    @property
    def degree(self) -> int:
        """Largest basis degree in the support, -1 for zero."""
        return max((self.bialgebra.degree(i) for i in self.terms), default=-1)

    def tensor(self, other: "Element") -> "TensorK":
        return TensorK.from_elements([self, other])

    def to_json(self) -> List[Dict[str, str]]:
        return [{"basis": self.bialgebra.format_basis(i), "coeff": str(c)} for i, c in self.items()]

    def __str__(self):
        return _format_terms(self.items(), self.bialgebra.format_basis)

    def __repr__(self):
        return f"Element({self})"


class TensorK:
    """
    Sparse element of B^{(x)k}: flat k-tuples of basis indices mapped to
    coefficients. All legs live in the same bialgebra.
    """

    __slots__ = ("bialgebra", "arity", "terms")

    def __init__(self, bialgebra, arity: int, terms: Optional[Mapping] = None):
        if arity < 1:
            raise BadParameter("tensor arity must be at least 1")
        self.bialgebra = bialgebra
        self.arity = arity
        ring = bialgebra.ring
        acc: Dict[Tuple, Scalar] = {}
        for key, coeff in (terms or {}).items():
            key = tuple(key)
            if len(key) != arity:
                raise BadParameter(f"key {key} does not have {arity} legs")
            coeff = _coefficient(ring, coeff)
            acc[key] = acc[key] + coeff if key in acc else coeff
        self.terms = {k: c for k, c in acc.items() if not c.is_zero()}

    @classmethod
    def from_elements(cls, elements: Iterable[Element]) -> "TensorK":
        elements = list(elements)
        result = TensorK(elements[0].bialgebra, 1, {(i,): c for i, c in elements[0].terms.items()})
        for element in elements[1:]:
            result = result.tensor(element)
        return result

    @classmethod
    def power(cls, element: Element, k: int) -> "TensorK":
        return cls.from_elements([element] * k)

    def _same(self, other: "TensorK"):
        if other.bialgebra != self.bialgebra:
            raise DescriptorMismatch(f"{self.bialgebra} vs {other.bialgebra}")
        if other.arity != self.arity:
            raise BadParameter(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other: "TensorK") -> "TensorK":
        self._same(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged[key] + coeff if key in merged else coeff
        return TensorK(self.bialgebra, self.arity, merged)

    def __neg__(self):
        return TensorK(self.bialgebra, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorK") -> "TensorK":
        return self + (-other)

    def scale(self, factor) -> "TensorK":
        factor = _coefficient(self.bialgebra.ring, factor)
        return TensorK(self.bialgebra, self.arity, {k: factor * c for k, c in self.terms.items()})

    __rmul__ = scale

    def tensor(self, other) -> "TensorK":
        """Concatenate legs: s (x) t, for a tensor or an element t."""
        if isinstance(other, Element):
            other = TensorK(other.bialgebra, 1, {(i,): c for i, c in other.terms.items()})
        if other.bialgebra != self.bialgebra:
            raise DescriptorMismatch(f"{self.bialgebra} vs {other.bialgebra}")
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                terms[k1 + k2] = c1 * c2
        return TensorK(self.bialgebra, self.arity + other.arity, terms)

    def __mul__(self, other):
        """Legwise product in the tensor power algebra."""
        if not isinstance(other, TensorK):
            return self.scale(other)
        self._same(other)
        B = self.bialgebra
        acc = TensorK(B, self.arity)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                coeff = c1 * c2
                if coeff.is_zero():
                    continue
                legs = [B.mul_basis(a, b) for a, b in zip(k1, k2)]
                acc = acc + TensorK.from_elements(legs).scale(coeff)
        return acc

    def map_legs(self, fn: Callable[[object], Element]) -> "TensorK":
        """Apply a linear map given on basis indices to every leg."""
        acc = TensorK(self.bialgebra, self.arity)
        for key, coeff in self.terms.items():
            acc = acc + TensorK.from_elements([fn(i) for i in key]).scale(coeff)
        return acc

    def to_element(self) -> Element:
        if self.arity != 1:
            raise BadParameter(f"a tensor of arity {self.arity} is not an element")
        return Element(self.bialgebra, {k[0]: c for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorK):
            return NotImplemented
        return (self.bialgebra, self.arity, self.terms) == (other.bialgebra, other.arity, other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda item: tuple_sort_key(item[0]))

    def format_key(self, key) -> str:
        return "⊗".join(self.bialgebra.format_basis(i) for i in key)

    def to_json(self):
        return [
            {"basis": [self.bialgebra.format_basis(i) for i in key], "coeff": str(c)}
            for key, c in self.items()
        ]

    def __str__(self):
        return _format_terms(self.items(), self.format_key)

    def __repr__(self):
        return f"TensorK({self})"
