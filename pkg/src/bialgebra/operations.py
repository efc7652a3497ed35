from itertools import product
from math import factorial
from typing import Dict, List, Mapping, Optional, Sequence, Union

from global_variables import DEFAULT_TRUNCATION, BadParameter, DescriptorMismatch, ParseError, RingMismatch
from monoid_series import TraceMonoid
from scalars import ExpressionParser, RingSpec, Scalar, parse_scalar

from .basis import Monomial
from .dual import AlgebraTable, finite_dual
from .elements import Element, TensorK
from .families import (
    Bialgebra,
    FrobeniusQuotient,
    GxQuotient,
    InfiltrationQ,
    MonoidDiag,
    TensorConc,
    TensorProduct,
    polynomial_primitive,
)
from .monoids import FreeAbelianGroup, TraceMonoidBasis, cyclic_group, klein_four, semilattice

FAMILIES = (
    "PolynomialPrimitive",
    "InfiltrationQ",
    "FrobeniusQuotient",
    "GxQuotient",
    "MonoidDiag",
    "TensorConc",
    "TensorProduct",
    "FiniteDualOfAlgebra",
)


def _scalar(value, ring: RingSpec, name: str) -> Scalar:
    if value is None:
        raise BadParameter(f"missing parameter {name}")
    if isinstance(value, Scalar):
        return value
    return parse_scalar(str(value), ring)


def make_monoid(spec):
    """
    Build a monoid from a description such as {"kind": "cyclic", "n": 2},
    {"kind": "trace", "alphabet": "x,y", "edges": "x-y"},
    {"kind": "free_abelian_group", "variables": "g"}, "semilattice" or "klein".
    """
    if not isinstance(spec, Mapping):
        spec = {"kind": spec}
    kind = spec.get("kind")
    if kind == "cyclic":
        return cyclic_group(int(spec.get("n", 2)), spec.get("name", "g"))
    if kind == "semilattice":
        return semilattice()
    if kind == "klein":
        return klein_four()
    if kind in ("trace", "free", "free_commutative"):
        alphabet = spec.get("alphabet", "x")
        if kind == "free":
            return TraceMonoidBasis(TraceMonoid.from_text(alphabet))
        if kind == "free_commutative":
            return TraceMonoidBasis(TraceMonoid.free_commutative(alphabet.split(",")))
        return TraceMonoidBasis(TraceMonoid.from_text(alphabet, spec.get("edges", "")))
    if kind == "free_abelian_group":
        return FreeAbelianGroup([v.strip() for v in str(spec.get("variables", "g")).split(",")])
    raise BadParameter(f"unknown monoid kind {kind!r}")


def make_bialgebra(
    family: str, ring: RingSpec, params: Optional[Mapping] = None, truncation: Optional[int] = None
) -> Bialgebra:
    """
    Build a family descriptor from its name and parameters; parameter values
    may be given as text (instance files) or as objects.

    Raises:
    BadParameter: unknown family or parameters violating the family's constraints.
    """
    params = dict(params or {})
    D = DEFAULT_TRUNCATION if truncation is None else int(truncation)
    if family == "PolynomialPrimitive":
        return polynomial_primitive(ring, D, params.get("variable", "x"))
    if family == "InfiltrationQ":
        return InfiltrationQ(ring, _scalar(params.get("q"), ring, "q"), D, params.get("variable", "x"))
    if family == "FrobeniusQuotient":
        if "p" not in params:
            raise BadParameter("FrobeniusQuotient needs the prime p")
        return FrobeniusQuotient(ring, int(params["p"]), _scalar(params.get("q", "1"), ring, "q"))
    if family == "GxQuotient":
        return GxQuotient(ring, D)
    if family == "MonoidDiag":
        monoid = params.get("monoid")
        if not hasattr(monoid, "multiply"):
            monoid = make_monoid(monoid)
        return MonoidDiag(ring, monoid, D)
    if family == "TensorConc":
        alphabet = params.get("alphabet", "x")
        if isinstance(alphabet, str):
            alphabet = [a.strip() for a in alphabet.split(",") if a.strip()]
        return TensorConc(ring, tuple(alphabet), D)
    if family == "TensorProduct":
        factors = []
        for side in ("left", "right"):
            factor = params.get(side)
            if isinstance(factor, Mapping):
                factor = make_bialgebra(factor["family"], ring, factor.get("params"), factor.get("truncation", D))
            if not isinstance(factor, Bialgebra):
                raise BadParameter(f"TensorProduct needs a {side} factor")
            factors.append(factor)
        return tensor_product_bialgebra(*factors)
    if family == "FiniteDualOfAlgebra":
        algebra = params.get("algebra")
        if not isinstance(algebra, AlgebraTable):
            names = list(params["names"])
            products = {}
            for key, vector in params.get("products", {}).items():
                left, right = key.split("*")
                products[(names.index(left.strip()), names.index(right.strip()))] = [
                    parse_scalar(str(v), ring) for v in vector
                ]
            unit = params.get("unit")
            unit = None if unit is None else [parse_scalar(str(v), ring) for v in unit]
            algebra = AlgebraTable.build(ring, names, products, unit)
        return finite_dual(algebra)
    raise BadParameter(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def tensor_product_bialgebra(b1: Bialgebra, b2: Bialgebra) -> TensorProduct:
    if b1.ring != b2.ring:
        raise RingMismatch(f"{b1.ring} vs {b2.ring}")
    return TensorProduct(b1, b2)


def mul(e1: Element, e2: Element) -> Element:
    if e1.bialgebra != e2.bialgebra:
        raise DescriptorMismatch(f"{e1.bialgebra} vs {e2.bialgebra}")
    return e1.bialgebra.multiply(e1, e2)


def delta(e: Element) -> TensorK:
    return e.bialgebra.delta(e)


def counit(e: Element) -> Scalar:
    return e.bialgebra.counit(e)


def iterated_delta(e: Element, k: int) -> Union[TensorK, Scalar]:
    """
    Delta^(-1) = eps, Delta^(0) = id (arity one) and
    Delta^(k) = (id (x) Delta^(k-1)) o Delta.
    """
    if k < -1:
        raise BadParameter("iterated coproducts start at k = -1")
    B = e.bialgebra
    if k == -1:
        return B.counit(e)
    if k == 0:
        return TensorK(B, 1, {(i,): c for i, c in e.terms.items()})
    acc = TensorK(B, k + 1)
    for (left, right), coeff in B.delta(e).terms.items():
        tail = iterated_delta(B.basis_element(right), k - 1)
        acc = acc + TensorK(B, 1, {(left,): coeff}).tensor(tail)
    return acc


def is_grouplike(e: Element) -> bool:
    B = e.bialgebra
    return B.counit(e).is_one() and B.delta(e) == e.tensor(e)


def assemble(B: Bialgebra, coeffs: Mapping) -> Element:
    terms = {}
    for key, value in coeffs.items():
        index = B.parse_basis(key) if isinstance(key, str) else key
        terms[index] = value
    return B.element(terms)


def monoid_grouplike_criterion(B: MonoidDiag, coeffs: Mapping) -> bool:
    """
    sum a_w w is grouplike in k[M] exactly when the a_w are orthogonal
    idempotents summing to 1.
    """
    ring = B.ring
    values = list(assemble(B, coeffs).terms.values())
    if sum(values, ring.zero()) != ring.one():
        return False
    for i, a in enumerate(values):
        if a * a != a:
            return False
        if any(not (a * b).is_zero() for b in values[i + 1:]):
            return False
    return True


def _coefficient_window(ring: RingSpec, coefficient_window: Sequence) -> List[Scalar]:
    window = [v if isinstance(v, Scalar) else ring.from_fraction(v) for v in coefficient_window]
    return sorted(set(window), key=str)


def enumerate_grouplikes(B: Bialgebra, coefficient_window: Sequence, max_degree: Optional[int] = None) -> List[Element]:
    """
    Brute force over all elements whose coefficients lie in the window,
    on the basis up to max_degree. Exponential: meant for desk-size cases.
    """
    window = _coefficient_window(B.ring, coefficient_window)
    basis = B.basis(max_degree)
    found = []
    for values in product(window, repeat=len(basis)):
        candidate = B.element(dict(zip(basis, values)))
        if not candidate.is_zero() and is_grouplike(candidate):
            found.append(candidate)
    return found


def monoid_grouplikes(B: MonoidDiag, coefficient_window: Sequence) -> List[Element]:
    """Grouplikes of k[M], M finite, screened with the idempotent criterion."""
    if not B.finite_basis:
        raise BadParameter(f"{B} has no finite monoid to sweep")
    window = _coefficient_window(B.ring, coefficient_window)
    basis = B.basis()
    return [
        B.element(dict(zip(basis, values)))
        for values in product(window, repeat=len(basis))
        if monoid_grouplike_criterion(B, dict(zip(basis, values)))
    ]


def infiltration_coproduct_closed_form(B: InfiltrationQ, m: int) -> TensorK:
    """Sum over i + j + k = m of m!/(i! j! k!) q^j x^(i+j) (x) x^(j+k)."""
    terms = {}
    for i in range(m + 1):
        for j in range(m + 1 - i):
            k = m - i - j
            coeff = B.q ** j * (factorial(m) // (factorial(i) * factorial(j) * factorial(k)))
            terms[(Monomial((i + j,)), Monomial((j + k,)))] = coeff
    return TensorK(B, 2, terms)


def frobenius_grouplikes(B: FrobeniusQuotient) -> List[Element]:
    """1, 1 + q x and its inverse sum (-q)^i x^i over i < p."""
    x = B.gen(B.variable)
    one = B.one()
    inverse = B.zero()
    for i in range(B.p):
        inverse = inverse + (x ** i) * ((-B.q) ** i)
    return [one, one + x * B.q, inverse]


def frobenius_freshman_dream(B: FrobeniusQuotient) -> bool:
    """
    Delta(x)^p computed in k[x] (x) k[x] lies in the ideal generated by
    x^p (x) 1 and 1 (x) x^p, so the coproduct descends to k[x]/(x^p).
    """
    ambient = InfiltrationQ(B.ring, B.q, 2 * B.p, B.variable)
    power = ambient.delta(ambient.gen(B.variable) ** B.p)
    return all(a.exps[0] >= B.p or b.exps[0] >= B.p for a, b in power.terms)


def grouplike_map(monoid_bialgebra: MonoidDiag, target: InfiltrationQ) -> Dict:
    """
    The algebra map k[w] -> k[x] sending the letter w to the grouplike 1 + q x,
    tabulated on the monoid basis up to the target's truncation.
    """
    image = target.one() + target.gen(target.variable) * target.q
    table = {}
    for index in monoid_bialgebra.basis(target.truncation):
        table[index] = image ** monoid_bialgebra.degree(index)
    return table


def grouplike_map_commutes(monoid_bialgebra: MonoidDiag, target: InfiltrationQ) -> bool:
    """Check Delta o phi = (phi (x) phi) o Delta, eps o phi = eps and phi(ab) = phi(a)phi(b)."""
    if len(monoid_bialgebra.generators()) != 1 or not monoid_bialgebra.commutative:
        raise BadParameter("the grouplike map starts from the free monoid on one letter")
    phi = grouplike_map(monoid_bialgebra, target)
    for index, image in phi.items():
        mapped = TensorK(target, 2)
        for (a, b), c in monoid_bialgebra.delta_basis(index).terms.items():
            mapped = mapped + phi[a].tensor(phi[b]).scale(c)
        if target.delta(image) != mapped:
            return False
        if target.counit(image) != monoid_bialgebra.counit_basis(index):
            return False
    for a, b in product(phi, repeat=2):
        product_index = monoid_bialgebra.monoid.multiply(a, b)
        if product_index not in phi:
            continue
        if phi[product_index] != phi[a] * phi[b]:
            return False
    return True


# structure laws, checked on basis indices


def coassociative_on(B: Bialgebra, index) -> bool:
    """(Delta (x) id) o Delta = (id (x) Delta) o Delta on one basis index."""
    left = TensorK(B, 3)
    right = TensorK(B, 3)
    for (a, b), c in B.delta_basis(index).terms.items():
        left = left + B.delta_basis(a).tensor(B.basis_element(b)).scale(c)
        right = right + TensorK(B, 1, {(a,): c}).tensor(B.delta_basis(b))
    return left == right


def counital_on(B: Bialgebra, index) -> bool:
    """(eps (x) id) o Delta = id = (id (x) eps) o Delta on one basis index."""
    left = B.zero()
    right = B.zero()
    for (a, b), c in B.delta_basis(index).terms.items():
        left = left + B.basis_element(b).scale(c * B.counit_basis(a))
        right = right + B.basis_element(a).scale(c * B.counit_basis(b))
    target = B.basis_element(index)
    return left == target and right == target


def multiplicative_on(a: Element, b: Element) -> bool:
    """Delta(ab) = Delta(a)Delta(b) and eps(ab) = eps(a)eps(b)."""
    B = a.bialgebra
    ab = a * b
    return B.delta(ab) == B.delta(a) * B.delta(b) and B.counit(ab) == B.counit(a) * B.counit(b)


def unital(B: Bialgebra) -> bool:
    one = B.one()
    return B.delta(one) == one.tensor(one) and B.counit(one).is_one()


# reading elements


def parse_element(B: Bialgebra, text: str) -> Element:
    """
    Read an element written as an expression over generators, basis indices
    and ring variables, e.g. "1 + 2*x", "1 + q*x", "g^2 - 1", "xy - yx".
    """
    ring = B.ring
    generators = B.generators()

    def make_number(value):
        return B.one() * ring.from_fraction(value)

    def make_name(name):
        if name in generators:
            return B.basis_element(generators[name])
        if name in ring.poly_variables:
            return B.one() * ring.gen(name)
        try:
            return B.basis_element(B.parse_basis(name))
        except (ParseError, BadParameter) as error:
            raise ParseError(f"{name!r} is neither a generator nor a basis index of {B}") from error

    return ExpressionParser(str(text), make_number, make_name).parse()


def element_from_json(B: Bialgebra, value) -> Element:
    """Elements in instance files are expressions or lists of {"basis", "coeff"} terms."""
    if isinstance(value, str):
        return parse_element(B, value)
    if isinstance(value, list):
        terms = {}
        for term in value:
            if not isinstance(term, Mapping) or "basis" not in term:
                raise ParseError(f"element terms read {{'basis': ..., 'coeff': ...}}, got {term!r}")
            index = B.parse_basis(str(term["basis"]))
            coeff = parse_scalar(str(term.get("coeff", "1")), B.ring)
            terms[index] = terms[index] + coeff if index in terms else coeff
        return B.element(terms)
    raise ParseError(f"cannot read an element from {value!r}")
