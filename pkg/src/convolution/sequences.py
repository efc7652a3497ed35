from dataclasses import dataclass, field
from math import comb
from typing import List, Optional, Sequence

from global_variables import BadParameter

# A sequence window is any finite sequence (a_0, ..., a_H) of integers,
# Fractions, Scalars or Elements sharing one carrier.
SequenceWindow = Sequence


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _zero_like(value):
    return value * 0


def _is_zero(value) -> bool:
    return value == 0


def binomial_transform(a: SequenceWindow) -> List:
    """b_n = sum_{i <= n} (-1)^i C(n, i) a_i; applying it twice gives a back."""
    a = list(a)
    out = []
    for n in range(len(a)):
        total = _zero_like(a[0])
        for i in range(n + 1):
            total = total + a[i] * ((-1) ** i * comb(n, i))
        out.append(total)
    return out


@dataclass
class MPolynomialCheck:
    holds: bool
    horizon: int
    fails_at: Optional[int] = None
    witness: List = field(default_factory=list)

    def to_dict(self):
        return {
            "holds": self.holds,
            "horizon": self.horizon,
            "fails_at": self.fails_at,
            "witness": [str(c) for c in self.witness],
        }


def is_m_polynomial(a: SequenceWindow, m: int) -> MPolynomialCheck:
    """
    Check that the alternating binomial sums of a vanish for m < n <= H.
    When they do, c_i = (-1)^i b_i (i <= m) satisfy a_n = sum_i C(n, i) c_i
    for every n in the window.
    """
    a = list(a)
    horizon = len(a) - 1
    if m < -1:
        raise BadParameter("m-polynomial sequences need m >= -1")
    if horizon < m + 1:
        raise BadParameter(f"a window of horizon {horizon} cannot test {m}-polynomiality")
    b = binomial_transform(a)
    for n in range(m + 1, horizon + 1):
        if not _is_zero(b[n]):
            return MPolynomialCheck(False, horizon, fails_at=n)
    witness = [b[i] * (-1) ** i for i in range(m + 1)]
    for n, value in enumerate(a):
        rebuilt = _zero_like(value)
        for i, c in enumerate(witness):
            rebuilt = rebuilt + c * comb(n, i)
        if rebuilt != value:
            return MPolynomialCheck(False, horizon, fails_at=n)
    return MPolynomialCheck(True, horizon, witness=witness)


def binomial_product_identity(a: int, b: int, m: int) -> bool:
    """C(m, a) C(m, b) = sum_i C(i, a) C(a, a + b - i) C(m, i)."""
    right = sum(binom(i, a) * binom(a, a + b - i) * binom(m, i) for i in range(m + 1))
    return binom(m, a) * binom(m, b) == right


def polynomial_sequence(coefficients: Sequence, horizon: int) -> List:
    """a_n = sum_i C(n, i) c_i for n <= horizon, an m-polynomial sequence for m = len(c) - 1."""
    return [sum(c * comb(n, i) for i, c in enumerate(coefficients)) for n in range(horizon + 1)]
