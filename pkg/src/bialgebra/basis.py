from dataclasses import dataclass
from typing import Tuple, Union


@dataclass(frozen=True)
class Monomial:
    """x1^e1 * ... * xn^en over a fixed variable list (exponents may be negative in group algebras)."""

    exps: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(abs(e) for e in self.exps)

    @property
    def sort_key(self):
        return (self.degree, self.exps)

    def format(self, variables) -> str:
        pieces = [v if e == 1 else f"{v}^{e}" for v, e in zip(variables, self.exps) if e]
        return "*".join(pieces) or "1"


@dataclass(frozen=True)
class Word:
    """Finite sequence of letters; the empty word is the unit."""

    letters: Tuple[str, ...]

    @property
    def degree(self) -> int:
        return len(self.letters)

    @property
    def sort_key(self):
        return (len(self.letters), self.letters)

    def format(self) -> str:
        if not self.letters:
            return "1"
        if all(len(letter) == 1 for letter in self.letters):
            return "".join(self.letters)
        return "*".join(self.letters)


@dataclass(frozen=True)
class Pair:
    left: "BasisIndex"
    right: "BasisIndex"

    @property
    def degree(self) -> int:
        return self.left.degree + self.right.degree

    @property
    def sort_key(self):
        return (self.degree, self.left.sort_key, self.right.sort_key)


BasisIndex = Union[Monomial, Word, Pair]


def sort_key(index):
    return index.sort_key


def tuple_sort_key(key):
    return tuple(index.sort_key for index in key)
