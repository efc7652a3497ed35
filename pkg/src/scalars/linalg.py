"""
Exact linear algebra over the coefficient rings.

Fields (QQ and prime ZZ/p) go through sympy's DomainMatrix; kernels over the
integers are scaled rational kernels; kernels over ZZ/n for composite n are
found by enumeration, which is fine at the sizes the verifiers use.
"""
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import List, Optional, Sequence

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from global_variables import NotAField, BadParameter

from .rings import INTEGERS, MODULAR, RATIONALS, RingSpec, Scalar

Row = Sequence[Scalar]


def field_domain(ring: RingSpec):
    """
    Return the sympy domain matching a field-like RingSpec.

    Raises:
    NotAField: for anything but QQ and ZZ/p with p prime.
    """
    if ring.kind == RATIONALS:
        return QQ
    if ring.kind == MODULAR and isprime(ring.modulus):
        return GF(ring.modulus)
    raise NotAField(f"{ring} is not a field")


def _to_domain(value: Scalar, domain):
    if domain == QQ:
        fraction = Fraction(value.value)
        return QQ(fraction.numerator, fraction.denominator)
    return domain(int(value.value))


def _from_domain(element, domain, ring: RingSpec) -> Scalar:
    number = domain.to_sympy(element)
    if ring.kind == RATIONALS:
        return ring.from_fraction(Fraction(int(number.p), int(number.q)))
    return ring.from_int(int(number))


def _domain_matrix(rows: List[Row], ncols: int, ring: RingSpec, domain) -> DomainMatrix:
    entries = [[_to_domain(ring.zero() if entry is None else entry, domain) for entry in row] for row in rows]
    return DomainMatrix(entries, (len(rows), ncols), domain)


def _check_shape(rows: List[Row], ncols: int):
    for row in rows:
        if len(row) != ncols:
            raise BadParameter(f"row of length {len(row)} in a matrix with {ncols} columns")


def rank(rows: List[Row], ncols: int, ring: RingSpec) -> int:
    """Rank of the matrix over the field `ring` (QQ or GF(p))."""
    rows = [list(row) for row in rows]
    _check_shape(rows, ncols)
    domain = field_domain(ring)
    if not rows or ncols == 0:
        return 0
    _, pivots = _domain_matrix(rows, ncols, ring, domain).rref()
    return len(pivots)


def _field_nullspace(rows: List[Row], ncols: int, ring: RingSpec) -> List[List[Scalar]]:
    domain = field_domain(ring)
    if not rows:
        return [[ring.one() if i == j else ring.zero() for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = _domain_matrix(rows, ncols, ring, domain).rref()
    table = reduced.to_list()
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vector = [ring.zero()] * ncols
        vector[f] = ring.one()
        for r, p in enumerate(pivots):
            vector[p] = -_from_domain(table[r][f], domain, ring)
        basis.append(vector)
    return basis


def nullspace(rows: List[Row], ncols: int, ring: RingSpec) -> List[List[Scalar]]:
    """
    Basis of the right kernel {v : rows . v = 0}.

    Over ZZ the rational kernel is scaled to primitive integer vectors, which
    spans the same rational kernel (enough to decide triviality and to
    produce witness relations).
    """
    rows = [list(row) for row in rows]
    _check_shape(rows, ncols)
    if ring.kind != INTEGERS:
        return _field_nullspace(rows, ncols, ring)
    rational = RingSpec(RATIONALS)
    lifted = [[rational.from_int(entry.value) for entry in row] for row in rows]
    basis = []
    for vector in _field_nullspace(lifted, ncols, rational):
        fractions = [entry.value for entry in vector]
        scale = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fractions), 1)
        integral = [int(f * scale) for f in fractions]
        common = reduce(gcd, integral, 0) or 1
        basis.append([ring.from_int(n // common) for n in integral])
    return basis


def kernel_mod_n(rows: List[Row], ncols: int, ring: RingSpec, limit: Optional[int] = None) -> List[List[Scalar]]:
    """
    All nonzero kernel vectors over ZZ/n, by enumeration (n ** ncols candidates).

    Parameters:
    limit (int): stop after this many vectors have been found
    """
    if ring.kind != MODULAR:
        raise BadParameter(f"kernel enumeration needs a modular ring, got {ring}")
    rows = [[entry.value for entry in row] for row in rows]
    _check_shape(rows, ncols)
    n = ring.modulus
    found = []
    for candidate in product(range(n), repeat=ncols):
        if not any(candidate):
            continue
        if all(sum(a * c for a, c in zip(row, candidate)) % n == 0 for row in rows):
            found.append([ring.from_int(c) for c in candidate])
            if limit is not None and len(found) >= limit:
                break
    return found
