"""
Concrete bialgebra families realized as structure rules on basis indices.

A family knows its basis, its product, coproduct and counit on basis
indices, how to read and print basis indices, and which structural facts
(commutativity, degree filtration, vanishing bounds, regularity) it can
certify about its elements.
"""
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Dict, List, Optional, Tuple

from sympy import isprime

from global_variables import (
    DEFAULT_TRUNCATION,
    BadParameter,
    DescriptorMismatch,
    NotAnAlgebra,
    ParseError,
    RingMismatch,
)
from monoid_series import TraceMonoid
from scalars import (
    MONOMIAL_QUOTIENT,
    INTEGERS,
    MODULAR,
    RATIONALS,
    REGULAR,
    UNKNOWN,
    ZERO_DIVISOR,
    Regularity,
    RingSpec,
    Scalar,
    content_annihilator,
    kernel_mod_n,
    nilpotency_order,
    nullspace,
)

from .basis import Monomial, Pair, Word
from .elements import Element, TensorK
from .monoids import check_truncation


class Bialgebra:
    """
    Common behaviour of every family. Subclasses provide the basis rules:
    basis, degree, one_index, mul_basis, delta_basis, counit_basis,
    format_basis and parse_basis.
    """

    family = "Bialgebra"
    is_algebra = True
    commutative = False
    cocommutative = False
    # B_+^N is the span of the basis indices of degree >= N
    degree_filtered = False
    finite_basis = False
    truncation: Optional[int] = None

    # element constructors

    def element(self, terms=None) -> Element:
        return Element(self, terms or {})

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {self.one_index(): self.ring.one()})

    def basis_element(self, index) -> Element:
        return Element(self, {index: self.ring.one()})

    def gen(self, name: str) -> Element:
        generators = self.generators()
        if name not in generators:
            raise BadParameter(f"{name} is not a generator of {self}")
        return self.basis_element(generators[name])

    def generators(self) -> Dict[str, object]:
        return {}

    def factor(self, index) -> List[str]:
        raise BadParameter(f"{self.format_basis(index)} has no factorization into generators")

    # structure maps on elements

    def _own(self, e):
        if e.bialgebra != self:
            raise DescriptorMismatch(f"{e.bialgebra} vs {self}")

    def check_index(self, index):
        check_truncation(self.degree(index), self.truncation, self.format_basis(index))

    def multiply(self, e1: Element, e2: Element) -> Element:
        self._own(e1)
        self._own(e2)
        acc: Dict[object, Scalar] = {}
        for a, ca in e1.terms.items():
            for b, cb in e2.terms.items():
                coeff = ca * cb
                if coeff.is_zero():
                    continue
                for index, c in self.mul_basis(a, b).terms.items():
                    value = coeff * c
                    acc[index] = acc[index] + value if index in acc else value
        return Element(self, acc)

    def delta(self, e: Element) -> TensorK:
        self._own(e)
        acc = TensorK(self, 2)
        for index, coeff in e.terms.items():
            acc = acc + self.delta_basis(index).scale(coeff)
        return acc

    def counit(self, e: Element) -> Scalar:
        self._own(e)
        total = self.ring.zero()
        for index, coeff in e.terms.items():
            total = total + coeff * self.counit_basis(index)
        return total

    def window(self, max_degree: Optional[int] = None) -> List:
        """Basis indices up to max_degree (the truncation when omitted)."""
        return self.basis(max_degree)

    # certificates

    def structural_bound(self, e: Element) -> Optional[int]:
        """A degree-upper bound for id-unipotence proven from the family's structure, if any."""
        if e.is_zero():
            return -1
        if set(e.terms) == {self.one_index()}:
            return 0
        return None

    def regularity(self, e: Element) -> Regularity:
        return Regularity(UNKNOWN)

    def __str__(self):
        return self.family


# regularity oracles shared by the families


def _ground_coefficients(e: Element) -> Optional[List[Scalar]]:
    ring = e.bialgebra.ring
    if ring.kind == MONOMIAL_QUOTIENT:
        return None
    found = []
    for coeff in e.terms.values():
        found.extend(coeff.terms().values())
    return found


def content_regularity(e: Element) -> Regularity:
    """
    Regularity in a monoid algebra of a cancellative torsion-free commutative
    monoid (polynomial and Laurent rings): McCoy's theorem says e is a zero
    divisor exactly when one ground scalar kills all its coefficients.
    """
    B = e.bialgebra
    if e.is_zero():
        return Regularity(ZERO_DIVISOR, B.one())
    coefficients = _ground_coefficients(e)
    if coefficients is None:
        return Regularity(UNKNOWN)
    witness = content_annihilator(coefficients)
    if witness is None:
        return Regularity(REGULAR)
    return _verified(e, B.one() * B.ring.from_ground(witness))


def finite_rank_regularity(e: Element) -> Regularity:
    """Kernel of multiplication by e on a finite basis."""
    B = e.bialgebra
    ring = B.ring
    if e.is_zero():
        return Regularity(ZERO_DIVISOR, B.one())
    basis = B.basis()
    products = [e * B.basis_element(b) for b in basis]
    rows = [[p.coefficient(index) for p in products] for index in basis]
    if ring.kind in (RATIONALS, INTEGERS) or ring.is_field():
        kernel = nullspace(rows, len(basis), ring)
    elif ring.kind == MODULAR:
        kernel = kernel_mod_n(rows, len(basis), ring, limit=1)
    else:
        return Regularity(UNKNOWN)
    if not kernel:
        return Regularity(REGULAR)
    witness = B.element({b: c for b, c in zip(basis, kernel[0])})
    return _verified(e, witness)


def _verified(e: Element, witness: Element) -> Regularity:
    if witness.is_zero() or not (e * witness).is_zero():
        return Regularity(UNKNOWN)
    return Regularity(ZERO_DIVISOR, witness)


def _parse_monomial(text: str, variables: Tuple[str, ...]) -> Monomial:
    text = text.strip()
    exps = [0] * len(variables)
    if text == "1":
        return Monomial(tuple(exps))
    for factor in text.split("*"):
        name, _, power = factor.strip().partition("^")
        if name not in variables:
            raise ParseError(f"{name!r} is not one of {variables}")
        try:
            exps[variables.index(name)] += int(power) if power else 1
        except ValueError as error:
            raise ParseError(f"cannot read power in {factor!r}") from error
    return Monomial(tuple(exps))


def _check_scalar(ring: RingSpec, value: Scalar, name: str):
    if not isinstance(value, Scalar) or value.ring != ring:
        raise RingMismatch(f"{name} must be a scalar of {ring}")


@dataclass(frozen=True)
class InfiltrationQ(Bialgebra):
    """
    k[x] with Delta(x) = x(x)1 + 1(x)x + q x(x)x and eps(x) = 0. The basis
    x^0..x^D is truncated at D; q = 0 is the primitive (shuffle) case.
    """

    ring: RingSpec
    q: Scalar
    truncation: int = DEFAULT_TRUNCATION
    variable: str = "x"

    commutative = True
    cocommutative = True
    degree_filtered = True

    def __post_init__(self):
        _check_scalar(self.ring, self.q, "q")
        if self.truncation is None or self.truncation < 1:
            raise BadParameter("polynomial families need a truncation degree >= 1")

    @property
    def family(self):
        return "PolynomialPrimitive" if self.q.is_zero() else "InfiltrationQ"

    def basis(self, max_degree=None):
        top = self.truncation if max_degree is None else min(max_degree, self.truncation)
        return [Monomial((n,)) for n in range(top + 1)]

    def degree(self, index):
        return index.exps[0]

    def one_index(self):
        return Monomial((0,))

    def generators(self):
        return {self.variable: Monomial((1,))}

    def factor(self, index):
        return [self.variable] * index.exps[0]

    def mul_basis(self, a, b):
        n = a.exps[0] + b.exps[0]
        check_truncation(n, self.truncation)
        return self.basis_element(Monomial((n,)))

    def _delta_x(self) -> TensorK:
        x, one = Monomial((1,)), Monomial((0,))
        return TensorK(self, 2, {(x, one): 1, (one, x): 1, (x, x): self.q})

    def delta_basis(self, index):
        self.check_index(index)
        one = self.one_index()
        result = TensorK(self, 2, {(one, one): 1})
        step = self._delta_x()
        for _ in range(index.exps[0]):
            result = result * step
        return result

    def counit_basis(self, index):
        return self.ring.one() if index.exps[0] == 0 else self.ring.zero()

    def format_basis(self, index):
        return Monomial(index.exps).format((self.variable,))

    def parse_basis(self, text):
        index = _parse_monomial(text, (self.variable,))
        self.check_index(index)
        return index

    def structural_bound(self, e):
        bound = super().structural_bound(e)
        if bound is not None:
            return bound
        d = e.degree
        if self.q.is_zero():
            return d
        r = nilpotency_order(self.q)
        return None if r is None else d + r - 1

    def regularity(self, e):
        return content_regularity(e)

    def __str__(self):
        if self.q.is_zero():
            return f"PolynomialPrimitive({self.ring}, D={self.truncation})"
        return f"InfiltrationQ({self.ring}, q={self.q.coefficient_str()}, D={self.truncation})"


def polynomial_primitive(ring: RingSpec, truncation: int = DEFAULT_TRUNCATION, variable: str = "x") -> InfiltrationQ:
    """k[x] with x primitive: the q = 0 member of the infiltration family."""
    return InfiltrationQ(ring, ring.zero(), truncation, variable)


@dataclass(frozen=True)
class FrobeniusQuotient(Bialgebra):
    """
    k[x]/(x^p) with the infiltration coproduct, for k of characteristic p;
    the quotient is well defined because Delta(x)^p = 0 there.
    """

    ring: RingSpec
    p: int
    q: Scalar
    variable: str = "x"

    family = "FrobeniusQuotient"
    commutative = True
    cocommutative = True
    degree_filtered = True
    finite_basis = True

    def __post_init__(self):
        if not isprime(self.p):
            raise BadParameter(f"p = {self.p} is not prime")
        if self.ring.characteristic() != self.p:
            raise BadParameter(f"{self.ring} does not have characteristic {self.p}")
        _check_scalar(self.ring, self.q, "q")

    def basis(self, max_degree=None):
        top = self.p - 1 if max_degree is None else min(max_degree, self.p - 1)
        return [Monomial((n,)) for n in range(top + 1)]

    def degree(self, index):
        return index.exps[0]

    def one_index(self):
        return Monomial((0,))

    def generators(self):
        return {self.variable: Monomial((1,))}

    def factor(self, index):
        return [self.variable] * index.exps[0]

    def check_index(self, index):
        if not 0 <= index.exps[0] < self.p:
            raise BadParameter(f"{self.variable}^{index.exps[0]} is not a basis element of {self}")

    def mul_basis(self, a, b):
        n = a.exps[0] + b.exps[0]
        return self.zero() if n >= self.p else self.basis_element(Monomial((n,)))

    def delta_basis(self, index):
        self.check_index(index)
        x, one = Monomial((1,)), Monomial((0,))
        step = TensorK(self, 2, {(x, one): 1, (one, x): 1, (x, x): self.q})
        result = TensorK(self, 2, {(one, one): 1})
        for _ in range(index.exps[0]):
            result = result * step
        return result

    def counit_basis(self, index):
        return self.ring.one() if index.exps[0] == 0 else self.ring.zero()

    def format_basis(self, index):
        return Monomial(index.exps).format((self.variable,))

    def parse_basis(self, text):
        index = _parse_monomial(text, (self.variable,))
        self.check_index(index)
        return index

    def structural_bound(self, e):
        bound = super().structural_bound(e)
        if bound is not None:
            return bound
        candidates = [self.p - 1]
        if self.q.is_zero():
            candidates.append(e.degree)
        return min(candidates)

    def regularity(self, e):
        return finite_rank_regularity(e)

    def __str__(self):
        return f"FrobeniusQuotient({self.ring}, p={self.p}, q={self.q.coefficient_str()})"


@dataclass(frozen=True)
class GxQuotient(Bialgebra):
    """
    k[g, x]/(gx) with g grouplike and x primitive. Basis: g^a and x^b, any
    monomial containing both letters is zero.
    """

    ring: RingSpec
    truncation: int = DEFAULT_TRUNCATION

    family = "GxQuotient"
    commutative = True
    cocommutative = True
    variables = ("g", "x")

    def __post_init__(self):
        if self.truncation is None or self.truncation < 1:
            raise BadParameter("GxQuotient needs a truncation degree >= 1")

    def basis(self, max_degree=None):
        top = self.truncation if max_degree is None else min(max_degree, self.truncation)
        found = [Monomial((0, 0))]
        for n in range(1, top + 1):
            found.extend([Monomial((n, 0)), Monomial((0, n))])
        return found

    def degree(self, index):
        return sum(index.exps)

    def one_index(self):
        return Monomial((0, 0))

    def generators(self):
        return {"g": Monomial((1, 0)), "x": Monomial((0, 1))}

    def factor(self, index):
        return ["g"] * index.exps[0] + ["x"] * index.exps[1]

    def check_index(self, index):
        if index.exps[0] and index.exps[1]:
            raise BadParameter(f"{self.format_basis(index)} is zero in {self}")
        super().check_index(index)

    def mul_basis(self, a, b):
        exps = (a.exps[0] + b.exps[0], a.exps[1] + b.exps[1])
        if exps[0] and exps[1]:
            return self.zero()
        check_truncation(sum(exps), self.truncation)
        return self.basis_element(Monomial(exps))

    def delta_basis(self, index):
        self.check_index(index)
        a, b = index.exps
        if a:
            return TensorK(self, 2, {(index, index): 1})
        return TensorK(self, 2, {(Monomial((0, i)), Monomial((0, b - i))): comb(b, i) for i in range(b + 1)})

    def counit_basis(self, index):
        return self.ring.one() if index.exps[1] == 0 else self.ring.zero()

    def format_basis(self, index):
        return index.format(self.variables)

    def parse_basis(self, text):
        index = _parse_monomial(text, self.variables)
        self.check_index(index)
        return index

    def structural_bound(self, e):
        bound = super().structural_bound(e)
        if bound is not None:
            return bound
        if any(index.exps[0] for index in e.terms):
            return None
        # span of the x^b is the primitive polynomial sub-bialgebra
        return e.degree

    def regularity(self, e):
        """
        B embeds in k[g] x k[x] (fibre product over k); e is regular exactly
        when both components are, and a witness on one side is multiplied by
        that side's variable to land in B.
        """
        if e.is_zero():
            return Regularity(ZERO_DIVISOR, self.one())
        if self.ring.kind == MONOMIAL_QUOTIENT:
            return Regularity(UNKNOWN)
        sides = (("g", 0), ("x", 1))
        for name, slot in sides:
            component = [c for index, c in e.terms.items() if index.exps[1 - slot] == 0]
            coefficients = [g for c in component for g in c.terms().values()]
            variable = self.gen(name)
            if not coefficients:
                return _verified(e, variable)
            witness = content_annihilator(coefficients)
            if witness is not None:
                return _verified(e, variable * self.ring.from_ground(witness))
        return Regularity(REGULAR)

    def __str__(self):
        return f"GxQuotient({self.ring}, D={self.truncation})"


@dataclass(frozen=True)
class MonoidDiag(Bialgebra):
    """Monoid algebra k[M] with every w in M grouplike: Delta(w) = w(x)w, eps(w) = 1."""

    ring: RingSpec
    monoid: object
    truncation: Optional[int] = DEFAULT_TRUNCATION

    family = "MonoidDiag"
    cocommutative = True

    def __post_init__(self):
        if self.monoid.is_finite:
            object.__setattr__(self, "truncation", None)
        elif self.truncation is None or self.truncation < 0:
            raise BadParameter(f"MonoidDiag over the infinite monoid {self.monoid} needs a truncation")

    @property
    def commutative(self):
        return self.monoid.is_commutative

    @property
    def finite_basis(self):
        return self.monoid.is_finite

    def basis(self, max_degree=None):
        if self.monoid.is_finite:
            return self.monoid.elements()
        top = self.truncation if max_degree is None else min(max_degree, self.truncation)
        return self.monoid.elements(top)

    def degree(self, index):
        return self.monoid.degree(index)

    def one_index(self):
        return self.monoid.unit()

    def generators(self):
        return self.monoid.generators()

    def factor(self, index):
        return self.monoid.factor(index)

    def mul_basis(self, a, b):
        index = self.monoid.multiply(a, b)
        self.check_index(index)
        return self.basis_element(index)

    def delta_basis(self, index):
        self.check_index(index)
        return TensorK(self, 2, {(index, index): 1})

    def counit_basis(self, index):
        return self.ring.one()

    def format_basis(self, index):
        return self.monoid.format(index)

    def parse_basis(self, text):
        index = self.monoid.parse(text)
        self.check_index(index)
        return index

    def regularity(self, e):
        if not self.commutative:
            return Regularity(UNKNOWN)
        if self.monoid.content_regular:
            return content_regularity(e)
        if self.monoid.is_finite:
            return finite_rank_regularity(e)
        return Regularity(UNKNOWN)

    def __str__(self):
        return f"MonoidDiag({self.ring}, {self.monoid})"


@dataclass(frozen=True)
class TensorConc(Bialgebra):
    """
    Tensor algebra on an alphabet: concatenation product, letters primitive,
    so the coproduct of a word is the sum over its unshuffles.
    """

    ring: RingSpec
    alphabet: Tuple[str, ...]
    truncation: int = DEFAULT_TRUNCATION

    family = "TensorConc"
    cocommutative = True
    degree_filtered = True

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(sorted(set(self.alphabet))))
        if not self.alphabet:
            raise BadParameter("TensorConc needs a nonempty alphabet")
        if self.truncation is None or self.truncation < 1:
            raise BadParameter("TensorConc needs a truncation degree >= 1")

    @property
    def commutative(self):
        return len(self.alphabet) == 1

    def basis(self, max_degree=None):
        top = self.truncation if max_degree is None else min(max_degree, self.truncation)
        return [Word(w) for n in range(top + 1) for w in product(self.alphabet, repeat=n)]

    def degree(self, index):
        return len(index.letters)

    def one_index(self):
        return Word(())

    def generators(self):
        return {a: Word((a,)) for a in self.alphabet}

    def factor(self, index):
        return list(index.letters)

    def mul_basis(self, a, b):
        index = Word(a.letters + b.letters)
        self.check_index(index)
        return self.basis_element(index)

    def delta_basis(self, index):
        self.check_index(index)
        letters = index.letters
        terms: Dict[Tuple[Word, Word], int] = {}
        for mask in product((0, 1), repeat=len(letters)):
            left = Word(tuple(c for c, m in zip(letters, mask) if m == 0))
            right = Word(tuple(c for c, m in zip(letters, mask) if m == 1))
            terms[(left, right)] = terms.get((left, right), 0) + 1
        return TensorK(self, 2, terms)

    def counit_basis(self, index):
        return self.ring.one() if not index.letters else self.ring.zero()

    def format_basis(self, index):
        return index.format()

    def parse_basis(self, text):
        index = Word(TraceMonoid.free(self.alphabet).parse_trace(text))
        self.check_index(index)
        return index

    def structural_bound(self, e):
        bound = super().structural_bound(e)
        return e.degree if bound is None else bound

    def regularity(self, e):
        return content_regularity(e) if self.commutative else Regularity(UNKNOWN)

    def __str__(self):
        return f"TensorConc({self.ring}, {','.join(self.alphabet)}, D={self.truncation})"


@dataclass(frozen=True)
class TensorProduct(Bialgebra):
    """B1 (x) B2 on Pair indices with the middle-swap coproduct."""

    left: Bialgebra
    right: Bialgebra

    family = "TensorProduct"

    def __post_init__(self):
        if self.left.ring != self.right.ring:
            raise RingMismatch(f"{self.left.ring} vs {self.right.ring}")
        if not (self.left.is_algebra and self.right.is_algebra):
            raise NotAnAlgebra("tensor products are formed from bialgebras")
        overlap = set(self.left.generators()) & set(self.right.generators())
        if overlap:
            raise BadParameter(f"factors share generator names {sorted(overlap)}")

    @property
    def ring(self):
        return self.left.ring

    @property
    def commutative(self):
        return self.left.commutative and self.right.commutative

    @property
    def cocommutative(self):
        return self.left.cocommutative and self.right.cocommutative

    @property
    def finite_basis(self):
        return self.left.finite_basis and self.right.finite_basis

    def basis(self, max_degree=None):
        found = [Pair(a, b) for a in self.left.basis(max_degree) for b in self.right.basis(max_degree)]
        if max_degree is not None:
            found = [p for p in found if self.degree(p) <= max_degree]
        return sorted(found, key=lambda p: p.sort_key)

    def degree(self, index):
        return self.left.degree(index.left) + self.right.degree(index.right)

    def one_index(self):
        return Pair(self.left.one_index(), self.right.one_index())

    def generators(self):
        found = {n: Pair(i, self.right.one_index()) for n, i in self.left.generators().items()}
        found.update({n: Pair(self.left.one_index(), i) for n, i in self.right.generators().items()})
        return found

    def factor(self, index):
        return self.left.factor(index.left) + self.right.factor(index.right)

    def check_index(self, index):
        self.left.check_index(index.left)
        self.right.check_index(index.right)

    def _pairs(self, left: Element, right: Element) -> Element:
        return Element(self, {Pair(a, b): ca * cb for a, ca in left.terms.items() for b, cb in right.terms.items()})

    def mul_basis(self, a, b):
        return self._pairs(self.left.mul_basis(a.left, b.left), self.right.mul_basis(a.right, b.right))

    def delta_basis(self, index):
        terms = {}
        for (l1, l2), c in self.left.delta_basis(index.left).terms.items():
            for (r1, r2), d in self.right.delta_basis(index.right).terms.items():
                terms[(Pair(l1, r1), Pair(l2, r2))] = c * d
        return TensorK(self, 2, terms)

    def counit_basis(self, index):
        return self.left.counit_basis(index.left) * self.right.counit_basis(index.right)

    def format_basis(self, index):
        return f"({self.left.format_basis(index.left)}|{self.right.format_basis(index.right)})"

    def parse_basis(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")) or text.count("|") != 1:
            raise ParseError(f"pair basis indices read (left|right), got {text!r}")
        left, right = text[1:-1].split("|")
        return Pair(self.left.parse_basis(left), self.right.parse_basis(right))

    def project(self, e: Element, side: str) -> Optional[Element]:
        """The factor of e when the other side of every term is the unit index."""
        other_unit = self.right.one_index() if side == "left" else self.left.one_index()
        factor = self.left if side == "left" else self.right
        terms = {}
        for index, coeff in e.terms.items():
            kept, other = (index.left, index.right) if side == "left" else (index.right, index.left)
            if other != other_unit:
                return None
            terms[kept] = coeff
        return Element(factor, terms)

    def structural_bound(self, e):
        bound = super().structural_bound(e)
        if bound is not None:
            return bound
        for side, factor in (("left", self.left), ("right", self.right)):
            projected = self.project(e, side)
            if projected is not None:
                return factor.structural_bound(projected)
        return None

    def regularity(self, e):
        if not self.commutative:
            return Regularity(UNKNOWN)
        if self._content_regular(self.left) and self._content_regular(self.right):
            return content_regularity(e)
        if self.finite_basis:
            return finite_rank_regularity(e)
        return Regularity(UNKNOWN)

    @staticmethod
    def _content_regular(B) -> bool:
        if isinstance(B, InfiltrationQ):
            return True
        if isinstance(B, MonoidDiag):
            return B.monoid.content_regular
        if isinstance(B, TensorConc):
            return B.commutative
        if isinstance(B, TensorProduct):
            return TensorProduct._content_regular(B.left) and TensorProduct._content_regular(B.right)
        return False

    def __str__(self):
        return f"({self.left}) (x) ({self.right})"
