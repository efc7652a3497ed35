"""
Finite-rank algebras given by structure constants, their dual coalgebras,
and the two independent enumerations (characters of A, grouplikes of A^v)
that must agree.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from global_variables import BadParameter, NotAField, NotAnAlgebra, NotAssociative, NotUnital
from scalars import MODULAR, RATIONALS, RingSpec, Scalar, nullspace

from .basis import Word
from .elements import Element, TensorK
from .families import Bialgebra

MAX_RANK = 12


@dataclass(frozen=True)
class AlgebraTable:
    """
    Finite free k-algebra: e_i * e_j = sum_k structure[(i, j)][k] e_k.
    `unit` holds the coordinates of 1, or None to have it solved for.
    """

    ring: RingSpec
    names: Tuple[str, ...]
    structure: Tuple[Tuple[Tuple[int, int], Tuple[Scalar, ...]], ...]
    unit: Optional[Tuple[Scalar, ...]] = None

    @classmethod
    def build(cls, ring, names, products: Dict[Tuple[int, int], Sequence], unit=None) -> "AlgebraTable":
        n = len(names)
        if not 1 <= n <= MAX_RANK:
            raise BadParameter(f"algebra rank must be between 1 and {MAX_RANK}")

        def vector(values):
            values = list(values)
            if len(values) != n:
                raise BadParameter(f"structure vector {values} does not have {n} entries")
            return tuple(v if isinstance(v, Scalar) else ring.from_fraction(v) for v in values)

        structure = tuple(
            ((i, j), vector(products.get((i, j), [0] * n))) for i in range(n) for j in range(n)
        )
        return cls(ring, tuple(names), structure, None if unit is None else vector(unit))

    @property
    def rank(self) -> int:
        return len(self.names)

    def constants(self) -> Dict[Tuple[int, int], Tuple[Scalar, ...]]:
        return dict(self.structure)

    def multiply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> List[Scalar]:
        c = self.constants()
        out = [self.ring.zero()] * self.rank
        for i, j in product(range(self.rank), repeat=2):
            factor = u[i] * v[j]
            if factor.is_zero():
                continue
            out = [o + factor * s for o, s in zip(out, c[(i, j)])]
        return out

    def basis_vector(self, i: int) -> List[Scalar]:
        return [self.ring.one() if k == i else self.ring.zero() for k in range(self.rank)]

    def check_associative(self):
        e = [self.basis_vector(i) for i in range(self.rank)]
        for i, j, k in product(range(self.rank), repeat=3):
            if self.multiply(self.multiply(e[i], e[j]), e[k]) != self.multiply(e[i], self.multiply(e[j], e[k])):
                raise NotAssociative(f"({self.names[i]}*{self.names[j]})*{self.names[k]} differs")

    def is_unit(self, u: Sequence[Scalar]) -> bool:
        return all(
            self.multiply(u, self.basis_vector(i)) == self.basis_vector(i)
            and self.multiply(self.basis_vector(i), u) == self.basis_vector(i)
            for i in range(self.rank)
        )

    def solve_unit(self) -> Tuple[Scalar, ...]:
        """
        Solve u * e_j = e_j = e_j * u for u over a field: look for a kernel
        vector (u, t) of the homogenized system with t != 0.

        Raises:
        NotUnital: when no unit exists.
        """
        if self.unit is not None:
            if not self.is_unit(self.unit):
                raise NotUnital(f"the declared unit of {self.names} is not a unit")
            return self.unit
        ring = self.ring
        if not (ring.kind == RATIONALS or ring.is_field()):
            raise NotUnital(f"give the unit explicitly over {ring}")
        c = self.constants()
        n = self.rank
        rows = []
        for j, l in product(range(n), repeat=2):
            delta = ring.one() if j == l else ring.zero()
            rows.append([c[(k, j)][l] for k in range(n)] + [-delta])
            rows.append([c[(j, k)][l] for k in range(n)] + [-delta])
        for vector in nullspace(rows, n + 1, ring):
            if not vector[-1].is_zero():
                t = vector[-1].inverse()
                unit = tuple(v * t for v in vector[:-1])
                if self.is_unit(unit):
                    return unit
        raise NotUnital(f"the algebra on {self.names} has no unit")


def diagonal_algebra(ring: RingSpec, n: int) -> AlgebraTable:
    """k^n with componentwise product."""
    products = {(i, i): [1 if k == i else 0 for k in range(n)] for i in range(n)}
    return AlgebraTable.build(ring, [f"e{i + 1}" for i in range(n)], products)


def truncated_polynomial_algebra(ring: RingSpec, p: int, variable: str = "x") -> AlgebraTable:
    """k[x]/(x^p) on the basis 1, x, ..., x^(p-1)."""
    names = ["1"] + [variable if i == 1 else f"{variable}^{i}" for i in range(1, p)]
    products = {
        (i, j): [1 if k == i + j else 0 for k in range(p)] for i in range(p) for j in range(p) if i + j < p
    }
    return AlgebraTable.build(ring, names, products, unit=[1] + [0] * (p - 1))


@dataclass(frozen=True)
class FiniteDualOfAlgebra(Bialgebra):
    """
    The coalgebra A^v on the dual basis: Delta(e_k^v) = sum c_ij^k e_i^v (x) e_j^v,
    eps(e_k^v) = coordinate k of the unit. Not an algebra.
    """

    algebra: AlgebraTable
    unit: Tuple[Scalar, ...]

    family = "FiniteDualOfAlgebra"
    is_algebra = False
    finite_basis = True

    @property
    def ring(self):
        return self.algebra.ring

    def basis(self, max_degree=None):
        return [Word((name,)) for name in self.algebra.names]

    def degree(self, index):
        return 0

    def one_index(self):
        raise NotAnAlgebra("a dual coalgebra has no unit element")

    def mul_basis(self, a, b):
        raise NotAnAlgebra("the dual of an algebra is only a coalgebra here")

    def _position(self, index) -> int:
        return self.algebra.names.index(index.letters[0])

    def delta_basis(self, index):
        k = self._position(index)
        names = self.algebra.names
        terms = {}
        for (i, j), vector in self.algebra.structure:
            if not vector[k].is_zero():
                terms[(Word((names[i],)), Word((names[j],)))] = vector[k]
        return TensorK(self, 2, terms)

    def counit_basis(self, index):
        return self.unit[self._position(index)]

    def format_basis(self, index):
        return f"{index.letters[0]}^v"

    def parse_basis(self, text):
        name = text.strip()
        if name.endswith("^v"):
            name = name[:-2]
        if name not in self.algebra.names:
            raise BadParameter(f"{text!r} is not a dual basis element")
        return Word((name,))

    def structural_bound(self, e):
        return None

    def __str__(self):
        return f"FiniteDual({','.join(self.algebra.names)} over {self.ring})"


def finite_dual(algebra: AlgebraTable) -> FiniteDualOfAlgebra:
    """
    Raises:
    NotAssociative, NotUnital: when the table is not a unital associative algebra.
    """
    algebra.check_associative()
    return FiniteDualOfAlgebra(algebra, algebra.solve_unit())


def _to_sympy(value: Scalar):
    fraction = Fraction(value.value)
    return sympy.Rational(fraction.numerator, fraction.denominator)


def _rational_solutions(equations, symbols, ring) -> List[Tuple[Scalar, ...]]:
    found = []
    for solution in sympy.solve(equations, symbols, dict=True):
        values = [solution.get(s, s) for s in symbols]
        if any(not sympy.sympify(v).is_Rational for v in values):
            if any(sympy.sympify(v).free_symbols for v in values):
                raise BadParameter("the solution set is not finite")
            continue
        found.append(tuple(ring.from_fraction(Fraction(int(v.p), int(v.q))) for v in map(sympy.Rational, values)))
    return sorted(set(found), key=lambda t: tuple(str(v) for v in t))


def _enumerated_solutions(check, n, ring) -> List[Tuple[Scalar, ...]]:
    values = [ring.from_int(r) for r in range(ring.modulus)]
    return [candidate for candidate in product(values, repeat=n) if check(candidate)]


def algebra_characters(algebra: AlgebraTable) -> List[Tuple[Scalar, ...]]:
    """
    All k-algebra maps A -> k, as their values on the basis. Over QQ the
    system v_i v_j = sum_k c_ij^k v_k, v(1) = 1 is solved with sympy; over
    ZZ/p every candidate is tried.
    """
    ring = algebra.ring
    unit = algebra.solve_unit()
    c = algebra.constants()
    n = algebra.rank
    if ring.kind == RATIONALS:
        v = sympy.symbols(f"v0:{n}")
        equations = [
            v[i] * v[j] - sum(_to_sympy(c[(i, j)][k]) * v[k] for k in range(n))
            for i, j in product(range(n), repeat=2)
        ]
        equations.append(sum(_to_sympy(unit[k]) * v[k] for k in range(n)) - 1)
        return _rational_solutions(equations, list(v), ring)
    if ring.kind == MODULAR and ring.is_field():

        def is_character(values):
            for i, j in product(range(n), repeat=2):
                image = sum((c[(i, j)][k] * values[k] for k in range(n)), ring.zero())
                if values[i] * values[j] != image:
                    return False
            return sum((unit[k] * values[k] for k in range(n)), ring.zero()).is_one()

        return _enumerated_solutions(is_character, n, ring)
    raise NotAField(f"characters are enumerated over QQ or ZZ/p, not {ring}")


def coalgebra_grouplikes(C: Bialgebra) -> List[Element]:
    """
    All grouplikes of a coalgebra with a finite basis, solved from
    Delta(c) = c (x) c and eps(c) = 1 written on the basis coordinates.
    """
    ring = C.ring
    basis = C.basis()
    n = len(basis)
    deltas = [C.delta_basis(b) for b in basis]
    counits = [C.counit_basis(b) for b in basis]
    if ring.kind == RATIONALS:
        a = sympy.symbols(f"a0:{n}")
        position = {b: i for i, b in enumerate(basis)}
        equations = []
        for i, j in product(range(n), repeat=2):
            key = (basis[i], basis[j])
            image = sum(_to_sympy(d.terms[key]) * a[k] for k, d in enumerate(deltas) if key in d.terms)
            equations.append(image - a[position[basis[i]]] * a[position[basis[j]]])
        equations.append(sum(_to_sympy(e) * a[k] for k, e in enumerate(counits)) - 1)
        solutions = _rational_solutions(equations, list(a), ring)
    elif ring.kind == MODULAR and ring.is_field():

        def is_grouplike_vector(values):
            element = C.element(dict(zip(basis, values)))
            return C.delta(element) == element.tensor(element) and C.counit(element).is_one()

        solutions = _enumerated_solutions(is_grouplike_vector, n, ring)
    else:
        raise NotAField(f"grouplikes are enumerated over QQ or ZZ/p, not {ring}")
    return [C.element(dict(zip(basis, values))) for values in solutions]


def characters_match_grouplikes(algebra: AlgebraTable) -> bool:
    """
    A character chi of A corresponds to the functional-level element
    sum_k chi(e_k) e_k^v of A^v; the two enumerations must give the same set.
    """
    dual = finite_dual(algebra)
    characters = set(algebra_characters(algebra))
    grouplikes = set()
    for g in coalgebra_grouplikes(dual):
        grouplikes.add(tuple(g.coefficient(b) for b in dual.basis()))
    return characters == grouplikes
