"""
Coefficient rings and their exact scalars.

Polynomials and monomial quotients are sorted tuples of (exponents, ground
value) pairs, reduced on construction so equal elements compare equal.
sympy is kept to the linear algebra and prime tests; its Poly objects carry
no canonical form for ZZ/n with composite n or for quotient rings.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Optional, Tuple

from sympy import isprime

from global_variables import BadParameter, NotInvertible, RingMismatch

INTEGERS = "Integers"
RATIONALS = "Rationals"
MODULAR = "Modular"
POLY = "Poly"
MONOMIAL_QUOTIENT = "MonomialQuotient"

GROUND_KINDS = (INTEGERS, RATIONALS, MODULAR)


@dataclass(frozen=True)
class RingSpec:
    """
    Declared commutative coefficient ring.

    Ground rings are the integers, the rationals and Z/n. A Poly ring is a
    polynomial ring over a ground ring; a MonomialQuotient is a Poly ring
    modulo the monomial ideal (var^power).
    """

    kind: str
    modulus: Optional[int] = None
    base: Optional["RingSpec"] = None
    variables: Tuple[str, ...] = ()
    var: Optional[str] = None
    power: Optional[int] = None

    def __post_init__(self):
        if self.kind == MODULAR:
            if self.modulus is None or self.modulus < 2:
                raise BadParameter("Modular rings need n >= 2")
        elif self.kind == POLY:
            if self.base is None or not self.base.is_ground:
                raise BadParameter("Poly rings are built over a ground ring")
            if len(self.variables) < 1 or len(set(self.variables)) != len(self.variables):
                raise BadParameter("Poly rings need distinct variables")
        elif self.kind == MONOMIAL_QUOTIENT:
            if self.base is None or self.base.kind != POLY:
                raise BadParameter("MonomialQuotient is taken over a Poly ring")
            if self.var not in self.base.variables:
                raise BadParameter(f"{self.var} is not a variable of {self.base}")
            if self.power is None or self.power < 1:
                raise BadParameter("MonomialQuotient power must be >= 1")
        elif self.kind not in GROUND_KINDS:
            raise BadParameter(f"unknown ring kind {self.kind}")

    @property
    def is_ground(self) -> bool:
        return self.kind in GROUND_KINDS

    @property
    def ground(self) -> "RingSpec":
        if self.is_ground:
            return self
        if self.kind == POLY:
            return self.base
        return self.base.base

    @property
    def poly_variables(self) -> Tuple[str, ...]:
        if self.kind == POLY:
            return self.variables
        if self.kind == MONOMIAL_QUOTIENT:
            return self.base.variables
        return ()

    def characteristic(self) -> int:
        ground = self.ground
        return ground.modulus if ground.kind == MODULAR else 0

    def is_field(self) -> bool:
        return self.kind == RATIONALS or (self.kind == MODULAR and isprime(self.modulus))

    def is_domain(self) -> bool:
        ground = self.ground
        ground_domain = ground.kind != MODULAR or isprime(ground.modulus)
        if self.kind == MONOMIAL_QUOTIENT:
            return False
        return ground_domain

    # element constructors

    def zero(self) -> "Scalar":
        return Scalar(self, self._zero_raw())

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, n: int) -> "Scalar":
        if self.is_ground:
            return Scalar(self, n)
        return Scalar(self, {self._unit_exps(): self.ground._normalize(n)})

    def from_fraction(self, value: Fraction) -> "Scalar":
        value = Fraction(value)
        if value.denominator == 1:
            return self.from_int(value.numerator)
        ground = self.ground
        if ground.kind == RATIONALS:
            raw = value
        elif ground.kind == MODULAR:
            denominator = ground.from_int(value.denominator).inverse()
            raw = (ground.from_int(value.numerator) * denominator).value
        else:
            raise NotInvertible(f"{value.denominator} is not invertible in {self}")
        if self.is_ground:
            return Scalar(self, raw)
        return Scalar(self, {self._unit_exps(): raw})

    def from_ground(self, ground_scalar: "Scalar") -> "Scalar":
        if ground_scalar.ring != self.ground:
            raise RingMismatch(f"{ground_scalar.ring} is not the ground ring of {self}")
        if self.is_ground:
            return ground_scalar
        return Scalar(self, {self._unit_exps(): ground_scalar.value})

    def gen(self, name: str) -> "Scalar":
        variables = self.poly_variables
        if name not in variables:
            raise BadParameter(f"{name} is not a variable of {self}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return Scalar(self, {exps: self.ground._normalize(1)})

    # raw arithmetic

    def _unit_exps(self) -> Tuple[int, ...]:
        return (0,) * len(self.poly_variables)

    def _zero_raw(self):
        if self.kind == RATIONALS:
            return Fraction(0)
        if self.is_ground:
            return 0
        return ()

    def _normalize(self, raw):
        if self.kind == INTEGERS:
            if isinstance(raw, Fraction):
                if raw.denominator != 1:
                    raise BadParameter(f"{raw} is not an integer")
                raw = raw.numerator
            return int(raw)
        if self.kind == RATIONALS:
            return Fraction(raw)
        if self.kind == MODULAR:
            return int(raw) % self.modulus
        return self._normalize_poly(raw)

    def _normalize_poly(self, raw) -> Tuple:
        ground = self.ground
        items = raw.items() if isinstance(raw, dict) else raw
        acc: Dict[Tuple[int, ...], object] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if self._killed(exps):
                continue
            coeff = ground._normalize(coeff)
            acc[exps] = ground._add(acc[exps], coeff) if exps in acc else coeff
        return tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    def _killed(self, exps) -> bool:
        if self.kind != MONOMIAL_QUOTIENT:
            return False
        return exps[self.base.variables.index(self.var)] >= self.power

    def _add(self, a, b):
        if self.kind == MODULAR:
            return (a + b) % self.modulus
        if self.is_ground:
            return a + b
        return self._normalize_poly(list(a) + list(b))

    def _neg(self, a):
        if self.kind == MODULAR:
            return (-a) % self.modulus
        if self.is_ground:
            return -a
        ground = self.ground
        return tuple((e, ground._neg(c)) for e, c in a)

    def _mul(self, a, b):
        if self.kind == MODULAR:
            return (a * b) % self.modulus
        if self.is_ground:
            return a * b
        ground = self.ground
        products = []
        for ea, ca in a:
            for eb, cb in b:
                products.append((tuple(x + y for x, y in zip(ea, eb)), ground._mul(ca, cb)))
        return self._normalize_poly(products)

    def __str__(self):
        if self.kind == INTEGERS:
            return "ZZ"
        if self.kind == RATIONALS:
            return "QQ"
        if self.kind == MODULAR:
            return f"ZZ/{self.modulus}"
        if self.kind == POLY:
            return f"{self.base}[{','.join(self.variables)}]"
        return f"{self.base}/({self.var}^{self.power})"


def integers() -> RingSpec:
    return RingSpec(INTEGERS)


def rationals() -> RingSpec:
    return RingSpec(RATIONALS)


def modular(n: int) -> RingSpec:
    return RingSpec(MODULAR, modulus=n)


def poly(base: RingSpec, variables: Iterable[str]) -> RingSpec:
    return RingSpec(POLY, base=base, variables=tuple(variables))


def monomial_quotient(base: RingSpec, var: str, power: int) -> RingSpec:
    return RingSpec(MONOMIAL_QUOTIENT, base=base, var=var, power=power)


class Scalar:
    """
    Exact, immutable element of a RingSpec kept in canonical normal form.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: RingSpec, value):
        self.ring = ring
        self.value = ring._normalize(value)

    def _coerce(self, other) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, Fraction):
            return self.ring.from_fraction(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, self.ring._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._mul(self.value, other.value))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.ring.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        coerced = self._coerce(other)
        return coerced is not None and coerced.value == self.value

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return self.value == self.ring._zero_raw()

    def is_one(self) -> bool:
        return self == self.ring.one()

    def is_unit(self) -> bool:
        try:
            self.inverse()
        except NotInvertible:
            return False
        return True

    def inverse(self) -> "Scalar":
        ring = self.ring
        if ring.kind == RATIONALS and self.value != 0:
            return Scalar(ring, 1 / self.value)
        if ring.kind == INTEGERS and self.value in (1, -1):
            return self
        if ring.kind == MODULAR and gcd(self.value, ring.modulus) == 1:
            return Scalar(ring, pow(self.value, -1, ring.modulus))
        if not ring.is_ground and self.is_constant():
            constant = Scalar(ring.ground, self.constant_term_raw()).inverse()
            return ring.from_ground(constant)
        raise NotInvertible(f"{self} is not invertible in {ring}")

    def is_constant(self) -> bool:
        if self.ring.is_ground:
            return True
        return all(not any(e) for e, _ in self.value)

    def constant_term_raw(self):
        if self.ring.is_ground:
            return self.value
        for exps, coeff in self.value:
            if not any(exps):
                return coeff
        return self.ring.ground._zero_raw()

    def terms(self) -> Dict[Tuple[int, ...], "Scalar"]:
        """Monomial exponent vector -> ground coefficient (polynomial rings only)."""
        ground = self.ring.ground
        if self.ring.is_ground:
            return {(): self} if not self.is_zero() else {}
        return {e: Scalar(ground, c) for e, c in self.value}

    def coefficient_str(self) -> str:
        """Compact rendering used inside element and series printouts."""
        if self.ring.kind == MODULAR:
            return str(self.value)
        text = str(self)
        if not self.ring.is_ground and len(self.value) > 1:
            return f"({text})"
        return text

    def __str__(self):
        ring = self.ring
        if ring.kind == MODULAR:
            return f"{self.value} mod {ring.modulus}"
        if ring.is_ground:
            return str(self.value)
        return _format_poly(self.value, ring.poly_variables, ring.ground)

    def __repr__(self):
        return f"Scalar({self}, {self.ring})"


def _format_poly(raw, variables, ground) -> str:
    if not raw:
        return "0"
    ordered = sorted(raw, key=lambda item: (sum(item[0]), item[0]), reverse=True)
    pieces = []
    for exps, coeff in ordered:
        monomial = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(variables, exps) if e
        )
        negative = ground.kind != MODULAR and coeff < 0
        magnitude = -coeff if negative else coeff
        if monomial:
            body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
        else:
            body = str(magnitude)
        pieces.append((negative, body))
    first_negative, first_body = pieces[0]
    text = ("-" if first_negative else "") + first_body
    for negative, body in pieces[1:]:
        text += (" - " if negative else " + ") + body
    return text
