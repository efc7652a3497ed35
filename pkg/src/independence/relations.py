"""
Linear relations among grouplike elements: the power-sum criterion in a
commutative algebra, its symmetric-algebra form for grouplikes of a
coalgebra, and ranks over fields.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from sympy import isprime

from bialgebra import Bialgebra, Element, is_grouplike, iterated_delta
from global_variables import (
    CERTIFIED,
    DEFAULT_HORIZON,
    HORIZON_ONLY,
    BadParameter,
    DescriptorMismatch,
    HypothesisFails,
    LengthMismatch,
    NotCommutativeFamily,
    NotGrouplike,
    RingMismatch,
)
from scalars import INTEGERS, MODULAR, RATIONALS, RingSpec, Scalar, field_domain, kernel_mod_n, nullspace, rank

from .reports import CONCLUSION_HOLDS, COUNTEREXAMPLE, HYPOTHESIS_FAILS, NOT_APPLICABLE, VerifierReport
from .symmetric import SymElement, sym_project

Ambient = Union[RingSpec, Bialgebra]

# Sym C powers grow quickly with the support of g
SYM_HORIZON = 6


def _coerce(ambient: Ambient, value):
    if isinstance(value, Element):
        if isinstance(ambient, RingSpec) or value.bialgebra != ambient:
            raise DescriptorMismatch(f"{value} does not live in {ambient}")
        return value
    if isinstance(value, Scalar):
        ring = ambient if isinstance(ambient, RingSpec) else ambient.ring
        if value.ring != ring:
            raise RingMismatch(f"{value} lives in {value.ring}, not {ring}")
        return value if isinstance(ambient, RingSpec) else ambient.one() * value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        if isinstance(ambient, RingSpec):
            return ambient.from_fraction(value)
        return ambient.one() * value
    raise TypeError(f"cannot read {value!r} in {ambient}")


def _check_lengths(gs: Sequence, cs: Sequence):
    if len(gs) != len(cs):
        raise LengthMismatch(f"{len(gs)} elements but {len(cs)} coefficients")
    if not gs:
        raise BadParameter("at least one element is needed")


def _zero(ambient: Ambient):
    return ambient.zero()


def check_power_relation(ambient: Ambient, gs: Sequence, cs: Sequence, horizon: int = DEFAULT_HORIZON) -> VerifierReport:
    """
    Hypothesis: sum_i c_i g_i^k = 0 for every k. Conclusion: every
    c_i prod_{j != i} (g_i - g_j) vanishes.

    The hypothesis is checked for k <= horizon. The power sums obey the
    linear recurrence of prod_i (T - g_i), which is monic of degree n, so
    vanishing for k < n already gives every k: the mode is then Certified.
    """
    _check_lengths(gs, cs)
    if isinstance(ambient, Bialgebra) and not ambient.commutative:
        raise NotCommutativeFamily(f"{ambient} is not commutative")
    gs = [_coerce(ambient, g) for g in gs]
    cs = [_coerce(ambient, c) for c in cs]
    n = len(gs)

    fails_at = None
    for k in range(horizon + 1):
        total = _zero(ambient)
        for g, c in zip(gs, cs):
            total = total + c * g ** k
        if not total.is_zero():
            fails_at = k
            break
    holds = fails_at is None
    mode = CERTIFIED if (not holds or horizon >= n - 1) else HORIZON_ONLY

    witnesses = []
    for i, (g, c) in enumerate(zip(gs, cs)):
        product = c
        for j, h in enumerate(gs):
            if j != i:
                product = product * (g - h)
        if not product.is_zero():
            witnesses.append(f"{i}: {product}")
    conclusion = not witnesses

    if not holds:
        verdict = HYPOTHESIS_FAILS
    elif conclusion:
        verdict = CONCLUSION_HOLDS
    else:
        verdict = COUNTEREXAMPLE if mode == CERTIFIED else NOT_APPLICABLE
    return VerifierReport(
        holds, mode, conclusion, verdict, witnesses, details={"fails_at": fails_at, "horizon": horizon}
    )


def _ring_coefficients(ring: RingSpec, cs: Sequence) -> List[Scalar]:
    found = []
    for c in cs:
        if isinstance(c, Scalar):
            if c.ring != ring:
                raise RingMismatch(f"{c} lives in {c.ring}, not {ring}")
            found.append(c)
        else:
            found.append(ring.from_fraction(c))
    return found


def _check_grouplikes(B: Bialgebra, gs: Sequence[Element]):
    for i, g in enumerate(gs):
        if g.bialgebra != B:
            raise DescriptorMismatch(f"{g.bialgebra} vs {B}")
        if not is_grouplike(g):
            raise NotGrouplike(i)


def check_grouplike_relation(
    B: Bialgebra, gs: Sequence[Element], cs: Sequence, horizon: int = SYM_HORIZON
) -> VerifierReport:
    """
    For grouplikes g_i with sum_i c_i g_i = 0 in C, every
    c_i prod_{j != i} (Y(g_i) - Y(g_j)) vanishes in Sym C.

    Also checks the power sums transported to Sym C,
    sum_i c_i Y(g_i)^k = sym_project(sum_i c_i Delta^(k-1)(g_i)) = 0 for k <= horizon.

    Raises:
    NotGrouplike: carrying the position of the first non-grouplike.
    HypothesisFails: when sum_i c_i g_i is not zero.
    """
    _check_lengths(gs, cs)
    _check_grouplikes(B, gs)
    cs = _ring_coefficients(B.ring, cs)
    total = B.zero()
    for g, c in zip(gs, cs):
        total = total + g * c
    if not total.is_zero():
        raise HypothesisFails(f"sum c_i g_i = {total} is not zero")

    ys = [SymElement.embed(g) for g in gs]
    witnesses = []
    for i, (y, c) in enumerate(zip(ys, cs)):
        product = SymElement.one(B) * c
        for j, other in enumerate(ys):
            if j != i:
                product = product * (y - other)
        if not product.is_zero():
            witnesses.append(f"{i}: {product}")

    transported = True
    for k in range(horizon + 1):
        powers = SymElement(B)
        for y, c in zip(ys, cs):
            powers = powers + (y ** k) * c
        if k == 0:
            image = SymElement.one(B) * sum((B.counit(g) * c for g, c in zip(gs, cs)), B.ring.zero())
        else:
            tensors = iterated_delta(gs[0], k - 1).scale(cs[0])
            for g, c in zip(gs[1:], cs[1:]):
                tensors = tensors + iterated_delta(g, k - 1).scale(c)
            image = sym_project(tensors)
        if powers != image or not powers.is_zero():
            transported = False
            break

    conclusion = not witnesses
    verdict = CONCLUSION_HOLDS if conclusion and transported else COUNTEREXAMPLE
    return VerifierReport(
        True,
        CERTIFIED,
        conclusion,
        verdict,
        witnesses,
        details={"transported_power_sums": {"holds": transported, "horizon": horizon}},
    )


def _coefficient_columns(elements: Sequence[Element]):
    support = sorted({index for e in elements for index in e.terms}, key=lambda index: index.sort_key)
    return [[e.coefficient(index) for e in elements] for index in support]


def grouplike_rank(B: Bialgebra, gs: Sequence[Element]) -> int:
    """
    Rank over the coefficient field of the span of gs.

    Raises:
    NotAField: unless the coefficients are QQ or ZZ/p.
    """
    field_domain(B.ring)
    for g in gs:
        if g.bialgebra != B:
            raise DescriptorMismatch(f"{g.bialgebra} vs {B}")
    return rank(_coefficient_columns(gs), len(gs), B.ring)


def linear_relations(elements: Sequence[Element], limit: Optional[int] = None) -> List[List[Scalar]]:
    """
    Coefficient vectors c != 0 with sum_i c_i e_i = 0: a kernel basis over
    QQ, ZZ and prime fields, every kernel vector (up to limit) over ZZ/n.
    """
    if not elements:
        return []
    ring = elements[0].bialgebra.ring
    rows = _coefficient_columns(elements)
    if ring.kind in (RATIONALS, INTEGERS) or (ring.kind == MODULAR and isprime(ring.modulus)):
        found = nullspace(rows, len(elements), ring)
        return found if limit is None else found[:limit]
    if ring.kind == MODULAR:
        return kernel_mod_n(rows, len(elements), ring, limit)
    raise BadParameter(f"relations over {ring} are not supported")
