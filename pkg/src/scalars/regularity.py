from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .rings import INTEGERS, MODULAR, MONOMIAL_QUOTIENT, POLY, RATIONALS, Scalar

REGULAR = "Regular"
ZERO_DIVISOR = "ZeroDivisor"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Regularity:
    status: str
    witness: Optional[object] = None

    @property
    def is_regular(self) -> bool:
        return self.status == REGULAR

    def to_dict(self):
        payload = {"status": self.status}
        if self.witness is not None:
            payload["witness"] = str(self.witness)
        return payload


def content_annihilator(coefficients: Iterable[Scalar]) -> Optional[Scalar]:
    """
    A nonzero ground scalar killing every coefficient, or None when the
    coefficient family has no common annihilator (McCoy's criterion).
    """
    coefficients = [c for c in coefficients if not c.is_zero()]
    if not coefficients:
        return None
    ground = coefficients[0].ring
    if ground.kind in (INTEGERS, RATIONALS):
        return None
    if ground.kind == MODULAR:
        common = ground.modulus
        for c in coefficients:
            common = gcd(common, c.value)
        if common == 1:
            return None
        return ground.from_int(ground.modulus // common)
    raise TypeError(f"{ground} is not a ground ring")


def is_regular(a: Scalar) -> Regularity:
    """
    Decide whether a is a non-zero-divisor, returning a witness b != 0 with
    a*b = 0 in the zero-divisor case. Unknown is returned rather than guessed.
    """
    ring = a.ring
    if a.is_zero():
        return Regularity(ZERO_DIVISOR, ring.one())
    if ring.kind in (INTEGERS, RATIONALS):
        return Regularity(REGULAR)
    if ring.kind == MODULAR:
        common = gcd(a.value, ring.modulus)
        if common == 1:
            return Regularity(REGULAR)
        return Regularity(ZERO_DIVISOR, ring.from_int(ring.modulus // common))
    if ring.kind == POLY:
        witness = content_annihilator(a.terms().values())
        if witness is None:
            return Regularity(REGULAR)
        return _checked(a, ring.from_ground(witness))
    if ring.kind == MONOMIAL_QUOTIENT:
        return _quotient_regularity(a)
    return Regularity(UNKNOWN)


def _quotient_regularity(a: Scalar) -> Regularity:
    ring = a.ring
    slot = ring.base.variables.index(ring.var)
    generator = ring.gen(ring.var)
    lowest = min(exps[slot] for exps in a.terms())
    if lowest >= 1:
        # a lies in (x); the complementary power of x kills every term
        return _checked(a, generator ** (ring.power - lowest))
    constant_part = {e: c for e, c in a.terms().items() if e[slot] == 0}
    witness = content_annihilator(constant_part.values())
    if witness is None:
        return Regularity(REGULAR)
    return _checked(a, ring.from_ground(witness) * generator ** (ring.power - 1))


def _checked(a: Scalar, witness: Scalar) -> Regularity:
    if witness.is_zero() or not (a * witness).is_zero():
        return Regularity(UNKNOWN)
    return Regularity(ZERO_DIVISOR, witness)


def nilpotency_order(a: Scalar, cap: int = 64) -> Optional[int]:
    """Least r >= 1 with a^r = 0, or None when no such r <= cap exists."""
    power = a
    for r in range(1, cap + 1):
        if power.is_zero():
            return r
        power = power * a
    return None
