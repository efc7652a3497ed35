"""
Characters of the graded families as dual functionals, their convolution
products, and finite linear systems testing independence of characters over
the dual filtration.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import isprime

from bialgebra import Bialgebra, InfiltrationQ
from convolution import convolve
from global_variables import BadParameter, NotIntegralDomain
from scalars import INTEGERS, MODULAR, RATIONALS, RingSpec, Scalar, nullspace, rationals

from .functionals import DualFunctional, filtration_degree


def _value(ring: RingSpec, value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    return ring.from_fraction(Fraction(value))


def character(B: Bialgebra, values: Mapping[str, object], window: Optional[int] = None) -> DualFunctional:
    """The character fixed by its values on the generators, expanded up to the window."""
    values = {name: _value(B.ring, v) for name, v in values.items()}
    return DualFunctional.from_algebra_map(B, B.ring, values, window)


def star_character(B: Bialgebra, alpha, window: Optional[int] = None) -> DualFunctional:
    """(alpha x)* on a one-variable family: x^n -> alpha^n."""
    [name] = list(B.generators())
    return character(B, {name: alpha}, window)


def is_invertible_character(alpha, q) -> bool:
    """
    (alpha x)* is a unit for the infiltration convolution: always when q = 0,
    otherwise exactly when 1 + q alpha is a unit, since the characters
    compose by alpha, beta -> q alpha beta + alpha + beta.
    """
    if q.is_zero():
        return True
    return (alpha * q + 1).is_unit()


def infiltration_character_product(
    alpha, beta, q, truncation: int, ring: Optional[RingSpec] = None
) -> Tuple[DualFunctional, bool]:
    """
    (alpha x)* * (beta x)* in the dual of InfiltrationQ(q), and whether it
    equals ((q alpha beta + alpha + beta) x)* up to the truncation.
    """
    if ring is None:
        ring = next((v.ring for v in (alpha, beta, q) if isinstance(v, Scalar)), None) or rationals()
    alpha, beta, q = (_value(ring, v) for v in (alpha, beta, q))
    B = InfiltrationQ(ring, q, truncation)
    result = convolve(star_character(B, alpha), star_character(B, beta))
    expected = star_character(B, q * alpha * beta + alpha + beta)
    return result, result == expected


@dataclass
class CharacterSystem:
    """
    The linear system sum_g p_g * g = 0 in the unknown coefficients of
    p_g in B_P^v, one equation per basis index of degree <= D.
    """

    bialgebra: Bialgebra
    characters: List[Dict[str, Scalar]]
    maxdeg: int
    truncation: int
    rows: List[List[Scalar]]
    unknowns: List[Tuple[int, object]]
    kernel: List[List[Scalar]]
    invertible: List[Optional[bool]] = field(default_factory=list)

    @property
    def trivial_only(self) -> bool:
        return not self.kernel

    def witness(self) -> Optional[List[DualFunctional]]:
        """The polynomials p_g of the first kernel vector, one per character."""
        if self.trivial_only:
            return None
        B = self.bialgebra
        images: List[Dict] = [{} for _ in self.characters]
        for (position, index), value in zip(self.unknowns, self.kernel[0]):
            if not value.is_zero():
                images[position][index] = value
        return [DualFunctional(B, B.ring, found, self.truncation) for found in images]

    def witness_vanishes(self) -> Optional[bool]:
        """sum_g p_g * g = 0 on every basis index up to D, for the witness."""
        polynomials = self.witness()
        if polynomials is None:
            return None
        total = None
        for p, values in zip(polynomials, self.characters):
            term = convolve(p, character(self.bialgebra, values, self.truncation))
            total = term if total is None else total + term
        return not total.images

    def to_dict(self):
        payload = {
            "family": str(self.bialgebra),
            "maxdeg": self.maxdeg,
            "truncation": self.truncation,
            "unknowns": len(self.unknowns),
            "equations": len(self.rows),
            "trivial_only": self.trivial_only,
            "invertible": self.invertible,
        }
        polynomials = self.witness()
        if polynomials is not None:
            B = self.bialgebra
            payload["witness"] = [
                {
                    "character": {name: str(v) for name, v in sorted(values.items())},
                    "polynomial": {
                        B.format_basis(i): str(c) for i, c in sorted(p.images.items(), key=lambda t: t[0].sort_key)
                    },
                    "degree": filtration_degree(p),
                }
                for values, p in zip(self.characters, polynomials)
            ]
            payload["witness_vanishes"] = self.witness_vanishes()
        return payload


def _check_domain(ring: RingSpec):
    if not ring.is_domain():
        raise NotIntegralDomain(f"{ring} is not an integral domain")
    if ring.kind not in (RATIONALS, INTEGERS) and not (ring.kind == MODULAR and isprime(ring.modulus)):
        raise BadParameter(f"independence systems over {ring} are not supported")


def character_independence_system(
    B: Bialgebra, characters: Sequence[Mapping[str, object]], maxdeg: int, truncation: Optional[int] = None
) -> CharacterSystem:
    """
    Assemble and solve sum_g p_g * g = 0 with deg p_g <= maxdeg, tested on
    the basis up to the truncation. A nonzero kernel vector is a relation.
    """
    _check_domain(B.ring)
    D = B.truncation if truncation is None else truncation
    if maxdeg < 0 or D is None or maxdeg > D:
        raise BadParameter(f"need 0 <= maxdeg <= truncation, got {maxdeg} and {D}")
    values = [{name: _value(B.ring, v) for name, v in chi.items()} for chi in characters]
    keys = [tuple(sorted(chi.items(), key=lambda t: t[0])) for chi in values]
    if len(set(keys)) != len(keys):
        raise BadParameter("characters must be pairwise distinct")

    columns = []
    unknowns = []
    for position, chi in enumerate(values):
        g = character(B, chi, D)
        for index in B.basis(maxdeg):
            column = convolve(DualFunctional.dual_basis(B, index, D), g)
            columns.append(column)
            unknowns.append((position, index))
    equations = B.basis(D)
    rows = [[column.image(m) for column in columns] for m in equations]
    kernel = nullspace(rows, len(columns), B.ring)

    invertible = []
    for chi in values:
        if isinstance(B, InfiltrationQ):
            invertible.append(is_invertible_character(next(iter(chi.values())), B.q))
        else:
            invertible.append(None)
    return CharacterSystem(B, values, maxdeg, D, rows, unknowns, kernel, invertible)


def dump_matrix(system: CharacterSystem) -> str:
    """Plain text: a 'rows cols' header, then one line of entries per equation."""
    lines = [f"{len(system.rows)} {len(system.unknowns)}"]
    lines.extend(" ".join(str(entry) for entry in row) for row in system.rows)
    return "\n".join(lines) + "\n"


def monomial_collision(cs: Sequence, bound: int):
    """
    Two distinct exponent vectors a, b in [0, bound]^k with
    sum a_i c_i = sum b_i c_i, or None when the monomial map is injective there.
    """
    seen = {}
    for exponents in product(range(bound + 1), repeat=len(cs)):
        total = sum(a * c for a, c in zip(exponents, cs))
        if total in seen:
            return seen[total], exponents
        seen[total] = exponents
    return None


def monomial_map_injectivity(cs: Sequence, bound: int) -> bool:
    """
    Whether a -> sum a_i c_i is injective on [0, bound]^k; in the shuffle case
    this is injectivity of the map sending a to the character ((a . c) x)*.
    """
    return monomial_collision(cs, bound) is None
