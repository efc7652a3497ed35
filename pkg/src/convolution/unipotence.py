"""
id-unipotence: the sequence (eta eps - id)^(*n)(b), degree-upper bounds with
their certificates, and the identities tying it to Delta_+ and to the
convolution powers of id.
"""
from dataclasses import dataclass
from typing import List, Optional

from bialgebra import Bialgebra, Element
from global_variables import CERTIFIED, DEFAULT_HORIZON, HORIZON_ONLY, BadParameter, report

from .rules import LinearMapRule, delta_plus, mu_iterated, target_one, target_zero
from .sequences import binom


def _window(b: Element) -> int:
    return max(b.degree, 0)


def eta_eps_minus_id(B: Bialgebra, window: Optional[int] = None) -> LinearMapRule:
    return LinearMapRule.eta_eps(B, B, window) - LinearMapRule.identity(B, window)


def spanned_indices(b: Element) -> List:
    """Basis indices met by the legs of the iterated coproducts of b."""
    B = b.bialgebra
    seen = set(b.terms)
    queue = list(b.terms)
    while queue:
        index = queue.pop()
        for key in B.delta_basis(index).terms:
            for leg in key:
                if leg not in seen:
                    seen.add(leg)
                    queue.append(leg)
    return list(seen)


def conv_power_sequence(rule: LinearMapRule, b: Element, horizon: int) -> List[Element]:
    """
    rule^(*n)(b) for n = 0..horizon. Powers are only tabulated on the
    indices spanned by b, which are closed under Delta.
    """
    B = rule.source
    indices = spanned_indices(b)
    one = target_one(rule.target)
    power = {i: one * B.counit_basis(i) for i in indices}

    def evaluate(table):
        total = target_zero(rule.target)
        for index, coeff in b.terms.items():
            total = total + table[index] * coeff
        return total

    values = [evaluate(power)]
    for _ in range(horizon):
        step = {}
        for index in indices:
            total = target_zero(rule.target)
            for (left, right), coeff in B.delta_basis(index).terms.items():
                value = rule.image(left)
                if value.is_zero() or power[right].is_zero():
                    continue
                total = total + value * power[right] * coeff
            step[index] = total
        power = step
        values.append(evaluate(power))
    return values


def eta_eps_minus_id_sequence(b: Element, horizon: int) -> List[Element]:
    """(eta eps - id)^(*n)(b) for n = 0..horizon; legs of Delta never exceed deg(b)."""
    return conv_power_sequence(eta_eps_minus_id(b.bialgebra, _window(b)), b, horizon)


def eta_eps_minus_id_power(b: Element, n: int) -> Element:
    if n < 0:
        raise BadParameter("convolution powers are taken for n >= 0")
    return eta_eps_minus_id_sequence(b, n)[n]


def id_power_sequence(b: Element, horizon: int) -> List[Element]:
    """id^(*k)(b) for k = 0..horizon."""
    return conv_power_sequence(LinearMapRule.identity(b.bialgebra, _window(b)), b, horizon)


@dataclass
class DegreeBound:
    """
    Least m <= horizon with (eta eps - id)^(*n)(b) = 0 for m < n <= horizon,
    None when the last computed power is still nonzero.
    """

    bound: Optional[int]
    mode: str
    horizon: int
    structural: Optional[int] = None

    @property
    def unipotent(self) -> bool:
        return self.bound is not None

    def to_dict(self):
        return {"bound": self.bound, "mode": self.mode, "horizon": self.horizon, "structural_bound": self.structural}


def bound_from_sequence(values: List[Element]) -> Optional[int]:
    horizon = len(values) - 1
    if not values[horizon].is_zero():
        return None
    nonzero = [n for n, value in enumerate(values) if not value.is_zero()]
    return nonzero[-1] if nonzero else -1


def degree_upper_bound(b: Element, horizon: int = DEFAULT_HORIZON) -> DegreeBound:
    """
    The bound is Certified when the family proves vanishing beyond some
    s <= horizon (graded degree, nilpotency order of q, quotient exponent);
    the computed window then decides every n.
    """
    B = b.bialgebra
    values = eta_eps_minus_id_sequence(b, horizon)
    bound = bound_from_sequence(values)
    structural = B.structural_bound(b)
    mode = HORIZON_ONLY
    if structural is not None and structural <= horizon:
        if bound is not None and bound <= structural:
            mode = CERTIFIED
        else:
            report(f"computed bound {bound} of {b} contradicts the structural bound {structural} of {B}")
    return DegreeBound(bound, mode, horizon, structural)


def delta_plus_identity_holds(b: Element, n: int) -> bool:
    """(eta eps - id)^(*n)(b) = (-1)^n mu^(n-1)(Delta_+^(n-1)(b)) for n >= 1."""
    if n < 1:
        raise BadParameter("the reduced coproduct identity starts at n = 1")
    return eta_eps_minus_id_power(b, n) == mu_iterated(delta_plus(b, n - 1)) * (-1) ** n


def delta_plus_order(b: Element, horizon: int) -> Optional[int]:
    """Least k <= horizon with Delta_+^(k)(b) = 0, None if there is none."""
    for k in range(horizon + 1):
        if delta_plus(b, k).is_zero():
            return k
    return None


def geometric_identity_holds(b: Element, m: int, horizon: int = DEFAULT_HORIZON) -> bool:
    """
    With m a degree-upper bound of b, the series (1 - t)^(m+1) sum_k id^(*k)(b) t^k
    equals sum_{k <= m} (-1)^k (eta eps - id)^(*k)(b) t^k (1 - t)^(m-k); both
    sides are compared on every coefficient of t^n, n <= horizon - m.
    """
    B = b.bialgebra
    ids = id_power_sequence(b, horizon)
    reduced = eta_eps_minus_id_sequence(b, max(m, 0))
    for n in range(horizon - m + 1):
        left = B.zero()
        for i in range(min(n, m + 1) + 1):
            left = left + ids[n - i] * ((-1) ** i * binom(m + 1, i))
        right = B.zero()
        for k in range(min(n, m) + 1):
            right = right + reduced[k] * ((-1) ** k * (-1) ** (n - k) * binom(m - k, n - k))
        if left != right:
            return False
    return True
