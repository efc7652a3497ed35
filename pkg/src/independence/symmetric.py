"""
The symmetric algebra Sym C of a based free coalgebra: commutative
polynomials in one indeterminate Y[i] per basis index i of C.
"""
from typing import Dict, Iterable, Tuple

from bialgebra import Bialgebra, Element, TensorK, sort_key
from global_variables import DescriptorMismatch
from scalars import Scalar

# sorted ((index, exponent), ...) with positive exponents
SymKey = Tuple[Tuple[object, int], ...]


def _key(indices: Iterable) -> SymKey:
    counts: Dict[object, int] = {}
    for index in indices:
        counts[index] = counts.get(index, 0) + 1
    return tuple(sorted(counts.items(), key=lambda item: sort_key(item[0])))


def _merge(a: SymKey, b: SymKey) -> SymKey:
    counts = dict(a)
    for index, e in b:
        counts[index] = counts.get(index, 0) + e
    return tuple(sorted(counts.items(), key=lambda item: sort_key(item[0])))


class SymElement:
    __slots__ = ("bialgebra", "terms")

    def __init__(self, bialgebra: Bialgebra, terms=None):
        self.bialgebra = bialgebra
        ring = bialgebra.ring
        acc: Dict[SymKey, Scalar] = {}
        for key, coeff in (terms or {}).items():
            coeff = coeff if isinstance(coeff, Scalar) else ring.from_fraction(coeff)
            acc[key] = acc[key] + coeff if key in acc else coeff
        self.terms = {k: c for k, c in acc.items() if not c.is_zero()}

    @classmethod
    def one(cls, bialgebra: Bialgebra) -> "SymElement":
        return cls(bialgebra, {(): bialgebra.ring.one()})

    @classmethod
    def embed(cls, e: Element) -> "SymElement":
        """C -> Sym C, basis index i to Y[i]."""
        return cls(e.bialgebra, {((index, 1),): c for index, c in e.terms.items()})

    def _same(self, other: "SymElement"):
        if other.bialgebra != self.bialgebra:
            raise DescriptorMismatch(f"{self.bialgebra} vs {other.bialgebra}")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._same(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged[key] + coeff if key in merged else coeff
        return SymElement(self.bialgebra, merged)

    def __neg__(self) -> "SymElement":
        return SymElement(self.bialgebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymElement):
            self._same(other)
            acc: Dict[SymKey, Scalar] = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    key = _merge(a, b)
                    value = ca * cb
                    acc[key] = acc[key] + value if key in acc else value
            return SymElement(self.bialgebra, acc)
        return SymElement(self.bialgebra, {k: c * other for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SymElement":
        result = SymElement.one(self.bialgebra)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.bialgebra == other.bialgebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def _format_key(self, key: SymKey) -> str:
        pieces = []
        for index, e in key:
            symbol = f"Y[{self.bialgebra.format_basis(index)}]"
            pieces.append(symbol if e == 1 else f"{symbol}^{e}")
        return "*".join(pieces) or "1"

    def __str__(self):
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: [(sort_key(i), e) for i, e in item[0]])
        parts = []
        for key, coeff in ordered:
            body = self._format_key(key)
            if body == "1":
                parts.append(str(coeff))
            elif coeff.is_one():
                parts.append(body)
            else:
                parts.append(f"({coeff})*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymElement({self})"


def sym_project(t: TensorK) -> SymElement:
    """T(C) -> Sym C: x_1 (x) ... (x) x_m goes to Y[x_1] ... Y[x_m]."""
    return SymElement(t.bialgebra, {_key(key): c for key, c in t.terms.items()})
