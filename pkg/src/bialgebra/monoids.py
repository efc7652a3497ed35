"""
Monoids whose monoid algebras k[M] become bialgebras with w -> w (x) w.

Every monoid exposes the same small protocol: unit, multiply, elements,
degree, parse, format and a few flags. Elements are basis indices.
"""
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from global_variables import BadParameter, NotAssociative, NotUnital, ParseError, TruncationExceeded
from monoid_series import TraceMonoid

from .basis import Monomial, Word

UNIT_NAME = "1"


class FiniteMonoid:
    """
    Finite monoid given by its multiplication table on named elements.
    The unit is named "1" and sits at Word(()); others are one-letter words.
    """

    is_finite = True

    def __init__(self, name: str, names: Sequence[str], table: Dict[Tuple[str, str], str]):
        names = list(names)
        if UNIT_NAME not in names:
            raise NotUnital(f"monoid {name} has no element named {UNIT_NAME}")
        self.name = name
        self.names = tuple([UNIT_NAME] + sorted(n for n in names if n != UNIT_NAME))
        self.table = {}
        for a, b in product(self.names, repeat=2):
            if a == UNIT_NAME:
                value = b
            elif b == UNIT_NAME:
                value = a
            elif (a, b) in table:
                value = table[(a, b)]
            else:
                raise BadParameter(f"missing product {a}*{b} in {name}")
            if value not in self.names:
                raise BadParameter(f"{a}*{b} = {value} is not an element of {name}")
            if (a == UNIT_NAME or b == UNIT_NAME) and (a, b) in table and table[(a, b)] != value:
                raise NotUnital(f"{a}*{b} = {table[(a, b)]} contradicts the unit in {name}")
            self.table[(a, b)] = value
        for a, b, c in product(self.names, repeat=3):
            if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c}) in {name}")

    def __eq__(self, other):
        return isinstance(other, FiniteMonoid) and (self.names, self.table) == (other.names, other.table)

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.table.items()))))

    def __str__(self):
        return self.name

    @property
    def is_commutative(self) -> bool:
        return all(self.table[(a, b)] == self.table[(b, a)] for a, b in product(self.names, repeat=2))

    content_regular = False

    def _index(self, name: str) -> Word:
        return Word(()) if name == UNIT_NAME else Word((name,))

    def _name(self, index: Word) -> str:
        return UNIT_NAME if not index.letters else index.letters[0]

    def unit(self) -> Word:
        return Word(())

    def multiply(self, a: Word, b: Word) -> Word:
        return self._index(self.table[(self._name(a), self._name(b))])

    def elements(self, max_degree: Optional[int] = None) -> List[Word]:
        return [self._index(n) for n in self.names]

    def degree(self, index: Word) -> int:
        return 0

    def parse(self, text: str) -> Word:
        text = text.strip()
        if text not in self.names:
            raise ParseError(f"{text!r} is not an element of {self.name}")
        return self._index(text)

    def format(self, index: Word) -> str:
        return self._name(index)

    def generators(self) -> Dict[str, Word]:
        return {n: self._index(n) for n in self.names if n != UNIT_NAME}

    def factor(self, index: Word) -> List[str]:
        return [] if not index.letters else [index.letters[0]]


def cyclic_group(n: int, name: str = "g") -> FiniteMonoid:
    if n < 1:
        raise BadParameter("cyclic groups need n >= 1")
    labels = [UNIT_NAME] + [name if i == 1 else f"{name}^{i}" for i in range(1, n)]
    table = {(labels[i], labels[j]): labels[(i + j) % n] for i in range(n) for j in range(n)}
    return FiniteMonoid(f"C{n}", labels, table)


def semilattice() -> FiniteMonoid:
    """{1, e} with e*e = e."""
    return FiniteMonoid("S2", [UNIT_NAME, "e"], {("e", "e"): "e"})


def klein_four() -> FiniteMonoid:
    labels = [UNIT_NAME, "a", "b", "c"]
    vectors = {UNIT_NAME: (0, 0), "a": (1, 0), "b": (0, 1), "c": (1, 1)}
    back = {v: k for k, v in vectors.items()}
    table = {
        (x, y): back[((vectors[x][0] + vectors[y][0]) % 2, (vectors[x][1] + vectors[y][1]) % 2)]
        for x in labels
        for y in labels
    }
    return FiniteMonoid("V4", labels, table)


def _product_so_far(table: Dict[Tuple[int, int], int]):
    def multiply(a: int, b: int) -> Optional[int]:
        if a == 0:
            return b
        if b == 0:
            return a
        return table.get((a, b))

    return multiply


def _associative_so_far(table: Dict[Tuple[int, int], int], size: int) -> bool:
    multiply = _product_so_far(table)
    # triples involving the unit hold automatically
    for a, b, c in product(range(1, size), repeat=3):
        ab, bc = multiply(a, b), multiply(b, c)
        if ab is None or bc is None:
            continue
        left, right = multiply(ab, c), multiply(a, bc)
        if left is not None and right is not None and left != right:
            return False
    return True


def _canonical_table(table: Dict[Tuple[int, int], int], size: int) -> Tuple[int, ...]:
    best = None
    for perm in permutations(range(1, size)):
        relabel = (0,) + perm
        image = {(relabel[a], relabel[b]): relabel[v] for (a, b), v in table.items()}
        key = tuple(image[cell] for cell in sorted(image))
        if best is None or key < best:
            best = key
    return best


def enumerate_monoids(size: int) -> List[FiniteMonoid]:
    """
    One monoid per isomorphism class on {1, m1, ..., m(size-1)}, found by
    backtracking over the multiplication table. Sizes 1 to 4 give 1, 2, 7
    and 35 classes.
    """
    if size < 1:
        raise BadParameter("monoids have at least one element")
    cells = list(product(range(1, size), repeat=2))
    classes = set()
    table = {}

    def fill(position: int):
        if position == len(cells):
            classes.add(_canonical_table(table, size))
            return
        for value in range(size):
            table[cells[position]] = value
            if _associative_so_far(table, size):
                fill(position + 1)
            del table[cells[position]]

    fill(0)
    labels = [UNIT_NAME] + [f"m{i}" for i in range(1, size)]
    monoids = []
    for k, key in enumerate(sorted(classes)):
        named = {(labels[a], labels[b]): labels[v] for (a, b), v in zip(cells, key)}
        monoids.append(FiniteMonoid(f"T{size}.{k}", labels, named))
    return monoids


def small_monoid_zoo(max_size: int = 4) -> List[FiniteMonoid]:
    """Every monoid with at most max_size elements, up to isomorphism."""
    return [monoid for size in range(1, max_size + 1) for monoid in enumerate_monoids(size)]



class FreeAbelianGroup:
    """Z^n written multiplicatively; basis are Laurent monomials."""

    is_finite = False
    is_commutative = True
    content_regular = True

    def __init__(self, variables: Sequence[str]):
        self.variables = tuple(variables)
        if not self.variables:
            raise BadParameter("a free abelian group needs at least one generator")

    def __eq__(self, other):
        return isinstance(other, FreeAbelianGroup) and self.variables == other.variables

    def __hash__(self):
        return hash(("Z^n", self.variables))

    def __str__(self):
        return f"Z^{len(self.variables)}<{','.join(self.variables)}>"

    def unit(self) -> Monomial:
        return Monomial((0,) * len(self.variables))

    def multiply(self, a: Monomial, b: Monomial) -> Monomial:
        return Monomial(tuple(x + y for x, y in zip(a.exps, b.exps)))

    def elements(self, max_degree: int) -> List[Monomial]:
        n = len(self.variables)
        found = [
            Monomial(exps)
            for exps in product(range(-max_degree, max_degree + 1), repeat=n)
            if sum(abs(e) for e in exps) <= max_degree
        ]
        return sorted(found, key=lambda m: m.sort_key)

    def degree(self, index: Monomial) -> int:
        return index.degree

    def parse(self, text: str) -> Monomial:
        exps = [0] * len(self.variables)
        text = text.strip()
        if text == "1":
            return self.unit()
        for factor in text.split("*"):
            name, _, power = factor.strip().partition("^")
            if name not in self.variables:
                raise ParseError(f"{name!r} is not a generator of {self}")
            try:
                exps[self.variables.index(name)] += int(power) if power else 1
            except ValueError as error:
                raise ParseError(f"cannot read power in {factor!r}") from error
        return Monomial(tuple(exps))

    def format(self, index: Monomial) -> str:
        return index.format(self.variables)

    def generators(self) -> Dict[str, Monomial]:
        return {v: Monomial(tuple(1 if w == v else 0 for w in self.variables)) for v in self.variables}

    def factor(self, index: Monomial) -> List[str]:
        if any(e < 0 for e in index.exps):
            raise BadParameter(f"{self.format(index)} is not a product of generators")
        return [v for v, e in zip(self.variables, index.exps) for _ in range(e)]


class TraceMonoidBasis:
    """Adapter exposing a TraceMonoid (free, partially commutative or free commutative) as a monoid of words."""

    is_finite = False

    def __init__(self, trace: TraceMonoid):
        self.trace = trace

    def __eq__(self, other):
        return isinstance(other, TraceMonoidBasis) and self.trace == other.trace

    def __hash__(self):
        return hash(self.trace)

    def __str__(self):
        return str(self.trace)

    @property
    def is_commutative(self) -> bool:
        return self.trace.is_commutative

    @property
    def content_regular(self) -> bool:
        # free commutative monoids give polynomial rings
        return self.trace.is_commutative

    def unit(self) -> Word:
        return Word(())

    def multiply(self, a: Word, b: Word) -> Word:
        return Word(self.trace.multiply(a.letters, b.letters))

    def elements(self, max_degree: int) -> List[Word]:
        return [Word(t) for t in self.trace.traces(max_degree)]

    def degree(self, index: Word) -> int:
        return len(index.letters)

    def parse(self, text: str) -> Word:
        return Word(self.trace.parse_trace(text))

    def format(self, index: Word) -> str:
        return index.format()

    def generators(self) -> Dict[str, Word]:
        return {a: Word((a,)) for a in self.trace.alphabet}

    def factor(self, index: Word) -> List[str]:
        return list(index.letters)


def check_truncation(degree: int, truncation: Optional[int], what: str = "product"):
    if truncation is not None and degree > truncation:
        raise TruncationExceeded(f"{what} of degree {degree} exceeds truncation {truncation}")
