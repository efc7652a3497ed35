"""
Linear forms on a graded family, their filtration degree and the shift
actions of the algebra on them.
"""
from typing import Optional

from bialgebra import Bialgebra, Element
from convolution import LinearMapRule, convolve
from global_variables import (
    DescriptorMismatch,
    NotGradedFamily,
    NotInAugmentationIdeal,
    RingMismatch,
    TruncationExceeded,
)


class DualFunctional(LinearMapRule):
    """
    A linear form f on B known on the basis up to its window D. B must be a
    family where B_+^N is the span of the basis indices of degree >= N, so
    that f kills B_+^(d+1) exactly when its support has degree <= d.
    """

    def __init__(self, source: Bialgebra, target=None, images=None, window: Optional[int] = None):
        if not source.degree_filtered:
            raise NotGradedFamily(f"{source} is not filtered by degree")
        target = source.ring if target is None else target
        if target != source.ring:
            raise RingMismatch(f"functionals on {source} take values in {source.ring}, not {target}")
        super().__init__(source, target, images, window)

    @classmethod
    def eta_eps(cls, source: Bialgebra, target=None, window: Optional[int] = None) -> "DualFunctional":
        return super().eta_eps(source, source.ring, window)

    @classmethod
    def counit(cls, source: Bialgebra, window: Optional[int] = None) -> "DualFunctional":
        return cls.eta_eps(source, window=window)


def filtration_degree(f: DualFunctional) -> int:
    """Largest degree in the support of f, -1 for the zero form."""
    if not isinstance(f, DualFunctional):
        # also rejects forms on families without the degree filtration
        f = DualFunctional(f.source, f.target, f.images, f.window)
    return max((f.source.degree(index) for index in f.images), default=-1)


def _shift_window(u: Element, f: DualFunctional, window: Optional[int]) -> Optional[int]:
    if u.bialgebra != f.source:
        raise DescriptorMismatch(f"{u.bialgebra} vs {f.source}")
    if f.window is None:
        return window
    reach = max(u.degree, 0)
    if window is None:
        window = f.window - reach
    if window < 0 or window + reach > f.window:
        raise TruncationExceeded(f"shifting by an element of degree {reach} leaves the window {f.window}")
    return window


def shift(u: Element, f: DualFunctional, window: Optional[int] = None) -> DualFunctional:
    """<u |> f | v> = <f | v u>, known up to D - deg(u) unless a smaller window is asked for."""
    window = _shift_window(u, f, window)
    B = f.source
    return type(f)(B, B.ring, {v: f(B.basis_element(v) * u) for v in B.basis(window)}, window)


def right_shift(u: Element, f: DualFunctional, window: Optional[int] = None) -> DualFunctional:
    """<f <| u | v> = <f | u v>."""
    window = _shift_window(u, f, window)
    B = f.source
    return type(f)(B, B.ring, {v: f(u * B.basis_element(v)) for v in B.basis(window)}, window)


def leibniz_shift_check(u: Element, f1: DualFunctional, f2: DualFunctional) -> bool:
    """
    u |> (f1 * f2) = (u |> f1) * f2 + f1 * (u |> f2) + sum (u' |> f1) * (u'' |> f2)
    with sum u' (x) u'' = Delta(u) - u (x) 1 - 1 (x) u, compared on the basis
    up to D - deg(u).

    Raises:
    NotInAugmentationIdeal: when eps(u) != 0.
    """
    B = u.bialgebra
    if not B.counit(u).is_zero():
        raise NotInAugmentationIdeal(f"eps({u}) = {B.counit(u)}")
    product = convolve(f1, f2)
    window = _shift_window(u, product, None)
    one = B.one()

    left = shift(u, product, window)
    right = convolve(shift(u, f1, window), shift(one, f2, window))
    right = right + convolve(shift(one, f1, window), shift(u, f2, window))
    correction = B.delta(u) - u.tensor(one) - one.tensor(u)
    for (a, c), coeff in correction.terms.items():
        term = convolve(shift(B.basis_element(a), f1, window), shift(B.basis_element(c), f2, window))
        right = right + term.scale(coeff)
    return left == right


def verify_filtration_product(f: DualFunctional, g: DualFunctional) -> bool:
    """deg(f * g) <= deg(f) + deg(g) for the filtration degree."""
    return filtration_degree(convolve(f, g)) <= filtration_degree(f) + filtration_degree(g)
