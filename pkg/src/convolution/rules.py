"""
Linear maps out of a bialgebra given by their values on basis indices, and
the convolution product f * g = mu o (f (x) g) o Delta on them.

A rule's target is either another bialgebra (values are Elements) or a
coefficient ring (values are Scalars, i.e. linear forms).
"""
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Union

from bialgebra import Bialgebra, Element, TensorK, iterated_delta
from global_variables import (
    BadParameter,
    DescriptorMismatch,
    NotAnAlgebra,
    RingMismatch,
    SourceMismatch,
    TruncationExceeded,
)
from scalars import RingSpec, Scalar

Target = Union[Bialgebra, RingSpec]
Value = Union[Element, Scalar]


def _is_ring(target) -> bool:
    return isinstance(target, RingSpec)


def target_zero(target: Target) -> Value:
    return target.zero()


def target_one(target: Target) -> Value:
    if not _is_ring(target) and not target.is_algebra:
        raise NotAnAlgebra(f"{target} has no unit")
    return target.one()


def _lift(target: Target, value) -> Value:
    if isinstance(value, Element):
        if _is_ring(target) or value.bialgebra != target:
            raise DescriptorMismatch(f"value {value} does not live in {target}")
        return value
    if isinstance(value, Scalar):
        ring = target if _is_ring(target) else target.ring
        if value.ring == ring:
            return value if _is_ring(target) else target.one() * value
        if value.ring == ring.ground:
            value = ring.from_ground(value)
            return value if _is_ring(target) else target.one() * value
        raise RingMismatch(f"{value} lives in {value.ring}, not {ring}")
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        if _is_ring(target):
            return target.from_fraction(value)
        return target.one() * value
    raise TypeError(f"cannot use {value!r} as a value in {target}")


def _is_zero(value) -> bool:
    return value.is_zero()


class LinearMapRule:
    """
    k-linear map source -> target known on every source basis index of degree
    <= window. Images that are zero are not stored.
    """

    __slots__ = ("source", "target", "images", "window")

    def __init__(self, source: Bialgebra, target: Target, images: Optional[Mapping] = None, window: Optional[int] = None):
        self.source = source
        self.target = target
        self.window = source.truncation if window is None else window
        clean: Dict[object, Value] = {}
        for index, value in (images or {}).items():
            if isinstance(index, str):
                index = source.parse_basis(index)
            value = _lift(target, value)
            if not _is_zero(value):
                clean[index] = value
        self.images = clean

    # constructors

    @classmethod
    def identity(cls, source: Bialgebra, window: Optional[int] = None) -> "LinearMapRule":
        rule = cls(source, source, {}, window)
        rule.images = {i: source.basis_element(i) for i in rule.basis()}
        return rule

    @classmethod
    def eta_eps(cls, source: Bialgebra, target: Optional[Target] = None, window: Optional[int] = None) -> "LinearMapRule":
        """The neutral element eta o eps of the convolution algebra."""
        target = source if target is None else target
        one = target_one(target)
        rule = cls(source, target, {}, window)
        for index in rule.basis():
            value = source.counit_basis(index)
            if not value.is_zero():
                rule.images[index] = one * value
        return rule

    @classmethod
    def dual_basis(cls, source: Bialgebra, index, window: Optional[int] = None) -> "LinearMapRule":
        """The coordinate form index^v with values in the coefficient ring."""
        if isinstance(index, str):
            index = source.parse_basis(index)
        return cls(source, source.ring, {index: source.ring.one()}, window)

    @classmethod
    def from_function(cls, source: Bialgebra, target: Target, fn: Callable, window: Optional[int] = None) -> "LinearMapRule":
        rule = cls(source, target, {}, window)
        return cls(source, target, {i: fn(i) for i in rule.basis()}, rule.window)

    @classmethod
    def from_algebra_map(
        cls, source: Bialgebra, target: Target, generator_images: Mapping[str, object], window: Optional[int] = None
    ) -> "LinearMapRule":
        """
        The algebra map fixed by the images of the generators; every basis
        index is sent to the ordered product of its generator factors.
        """
        values = {name: _lift(target, value) for name, value in generator_images.items()}
        missing = set(source.generators()) - set(values)
        if missing:
            raise BadParameter(f"no image given for generators {sorted(missing)}")

        def image(index):
            result = target_one(target)
            for name in source.factor(index):
                result = result * values[name]
            return result

        return cls.from_function(source, target, image, window)

    # evaluation

    def basis(self):
        return self.source.basis(self.window)

    def image(self, index) -> Value:
        if self.window is not None and self.source.degree(index) > self.window:
            raise TruncationExceeded(
                f"{self.source.format_basis(index)} lies beyond the window {self.window} of the rule"
            )
        return self.images.get(index, target_zero(self.target))

    def __call__(self, e: Element) -> Value:
        if e.bialgebra != self.source:
            raise DescriptorMismatch(f"{e.bialgebra} vs {self.source}")
        total = target_zero(self.target)
        for index, coeff in e.terms.items():
            total = total + self.image(index) * coeff
        return total

    # linear structure

    def _combine(self, other: "LinearMapRule", sign: int) -> "LinearMapRule":
        _check_compatible(self, other)
        window = _common_window(self, other)
        images = dict(self.images)
        for index, value in other.images.items():
            value = value if sign > 0 else -value
            images[index] = images[index] + value if index in images else value
        return type(self)(self.source, self.target, images, window)

    def __add__(self, other: "LinearMapRule") -> "LinearMapRule":
        return self._combine(other, 1)

    def __sub__(self, other: "LinearMapRule") -> "LinearMapRule":
        return self._combine(other, -1)

    def __neg__(self) -> "LinearMapRule":
        return self.scale(-1)

    def scale(self, factor) -> "LinearMapRule":
        return type(self)(self.source, self.target, {i: v * factor for i, v in self.images.items()}, self.window)

    def __eq__(self, other):
        if not isinstance(other, LinearMapRule):
            return NotImplemented
        return (self.source, self.target, self.window, self.images) == (
            other.source,
            other.target,
            other.window,
            other.images,
        )

    def to_json(self):
        return {"on": {self.source.format_basis(i): str(self.image(i)) for i in self.basis()}}

    def __str__(self):
        shown = ", ".join(f"{self.source.format_basis(i)} -> {self.image(i)}" for i in self.basis()[:6])
        return f"{type(self).__name__}({shown}{', ...' if len(self.basis()) > 6 else ''})"


def _check_compatible(f: LinearMapRule, g: LinearMapRule):
    if f.source != g.source:
        raise SourceMismatch(f"sources {f.source} and {g.source} differ")
    if f.target != g.target:
        raise SourceMismatch(f"targets {f.target} and {g.target} differ")


def _common_window(f: LinearMapRule, g: LinearMapRule) -> Optional[int]:
    if f.window is None:
        return g.window
    if g.window is None:
        return f.window
    return min(f.window, g.window)


def convolve(f: LinearMapRule, g: LinearMapRule) -> LinearMapRule:
    """
    (f * g)(c) = sum f(c_1) g(c_2) over Delta(c) on every basis index of the
    common window.

    Raises:
    SourceMismatch: when the rules do not share source and target.
    TruncationExceeded: when a product leaves the target's truncation.
    """
    _check_compatible(f, g)
    if not _is_ring(f.target) and not f.target.is_algebra:
        raise NotAnAlgebra(f"convolution needs an algebra as target, got {f.target}")
    window = _common_window(f, g)
    source = f.source
    images = {}
    for index in source.basis(window):
        total = target_zero(f.target)
        for (a, b), coeff in source.delta_basis(index).terms.items():
            left = f.image(a)
            if _is_zero(left):
                continue
            right = g.image(b)
            if _is_zero(right):
                continue
            total = total + left * right * coeff
        images[index] = total
    return type(f)(source, f.target, images, window)


def conv_power(f: LinearMapRule, n: int) -> LinearMapRule:
    """f^(*0) = eta eps and f^(*(n+1)) = f * f^(*n)."""
    if n < 0:
        raise BadParameter("convolution powers are taken for n >= 0")
    result = type(f).eta_eps(f.source, f.target, f.window)
    for _ in range(n):
        result = convolve(f, result)
    return result


def mu_iterated(t: TensorK) -> Element:
    """Multiply the legs of every tensor term from left to right."""
    B = t.bialgebra
    total = B.zero()
    for key, coeff in t.terms.items():
        product = B.basis_element(key[0])
        for index in key[1:]:
            product = product * B.basis_element(index)
            if product.is_zero():
                break
        total = total + product * coeff
    return total


def augmentation_projection(B: Bialgebra, index) -> Element:
    """(id - eta eps) on one basis index."""
    counit = B.counit_basis(index)
    return B.basis_element(index) - B.one() * counit


def delta_plus(e: Element, k: int) -> TensorK:
    """The reduced iterated coproduct: (id - eta eps) applied to every leg of Delta^(k)(e)."""
    if k < 0:
        raise BadParameter("reduced coproducts are taken for k >= 0")
    B = e.bialgebra
    return iterated_delta(e, k).map_legs(lambda index: augmentation_projection(B, index))
