from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, List, Tuple

from global_variables import BadParameter, ParseError, UnknownLetter

Trace = Tuple[str, ...]


def parse_edges(text: str) -> List[Tuple[str, str]]:
    """Read the "x-y,y-z" commutation graph grammar."""
    edges = []
    for chunk in filter(None, (c.strip() for c in str(text or "").split(","))):
        parts = chunk.split("-")
        if len(parts) != 2 or not all(parts):
            raise ParseError(f"cannot read edge {chunk!r}")
        edges.append((parts[0].strip(), parts[1].strip()))
    return edges


def parse_alphabet(text: str) -> List[str]:
    letters = [c.strip() for c in str(text or "").split(",") if c.strip()]
    if not letters:
        raise ParseError("empty alphabet")
    return letters


@dataclass(frozen=True)
class TraceMonoid:
    """
    Partially commutative monoid M(X, theta) on an alphabet with a set of
    commutation edges. No edges gives the free monoid, the complete graph
    the free commutative monoid.

    Traces are stored as their lexicographically least representative word.
    """

    alphabet: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[str]] = field(default_factory=frozenset)

    def __init__(self, alphabet: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        letters = tuple(sorted(set(alphabet)))
        if not letters:
            raise BadParameter("a trace monoid needs a nonempty alphabet")
        pairs = set()
        for edge in edges:
            edge = frozenset(edge)
            unknown = edge - set(letters)
            if unknown:
                raise UnknownLetter(f"edge mentions letters {sorted(unknown)} outside {letters}")
            if len(edge) != 2:
                raise BadParameter("commutation edges join two distinct letters")
            pairs.add(edge)
        object.__setattr__(self, "alphabet", letters)
        object.__setattr__(self, "edges", frozenset(pairs))

    @classmethod
    def free(cls, alphabet: Iterable[str]) -> "TraceMonoid":
        return cls(alphabet)

    @classmethod
    def free_commutative(cls, alphabet: Iterable[str]) -> "TraceMonoid":
        letters = sorted(set(alphabet))
        return cls(letters, combinations(letters, 2))

    @classmethod
    def from_text(cls, alphabet: str, edges: str = "") -> "TraceMonoid":
        return cls(parse_alphabet(alphabet), parse_edges(edges))

    def commute(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edges

    @property
    def is_commutative(self) -> bool:
        return len(self.edges) == len(self.alphabet) * (len(self.alphabet) - 1) // 2

    def check_letters(self, word: Iterable[str]):
        for letter in word:
            if letter not in self.alphabet:
                raise UnknownLetter(f"{letter!r} is not in the alphabet {self.alphabet}")

    def normal_form(self, word: Iterable[str]) -> Trace:
        """
        Lexicographically least word in the commutation class of `word`.

        Every letter is stacked on its own pile and leaves a blocker on the
        piles of the letters it does not commute with; unpiling always takes
        the smallest letter whose pile starts with a real letter.
        """
        word = tuple(word)
        self.check_letters(word)
        blocked = {a: [b for b in self.alphabet if b != a and not self.commute(a, b)] for a in self.alphabet}
        piles = {a: deque() for a in self.alphabet}
        for letter in word:
            piles[letter].append(True)
            for other in blocked[letter]:
                piles[other].append(False)
        result = []
        while len(result) < len(word):
            letter = next(a for a in self.alphabet if piles[a] and piles[a][0])
            result.append(letter)
            piles[letter].popleft()
            for other in blocked[letter]:
                piles[other].popleft()
        return tuple(result)

    def multiply(self, u: Trace, v: Trace) -> Trace:
        return self.normal_form(tuple(u) + tuple(v))

    def traces(self, max_length: int) -> List[Trace]:
        """All traces of length <= max_length, sorted by (length, lex)."""
        layer = {()}
        found = [()]
        for _ in range(max_length):
            layer = {self.normal_form(t + (a,)) for t in layer for a in self.alphabet}
            found.extend(sorted(layer))
        return found

    def cliques(self) -> List[Trace]:
        """Sorted letter sets that pairwise commute, the empty clique included."""
        found = [()]
        for size in range(1, len(self.alphabet) + 1):
            for subset in combinations(self.alphabet, size):
                if all(self.commute(a, b) for a, b in combinations(subset, 2)):
                    found.append(subset)
        return found

    def format_trace(self, trace: Trace) -> str:
        """Series grammar: "1", "x", "x^2*y"."""
        if not trace:
            return "1"
        pieces = []
        run_letter, run = trace[0], 0
        for letter in trace + (None,):
            if letter == run_letter:
                run += 1
                continue
            pieces.append(run_letter if run == 1 else f"{run_letter}^{run}")
            run_letter, run = letter, 1
        return "*".join(pieces)

    def parse_trace(self, text: str) -> Trace:
        """Inverse of format_trace; also accepts concatenated one-character letters."""
        text = text.strip()
        if text in ("", "1"):
            return ()
        word = []
        for factor in text.split("*"):
            letter, _, power = factor.strip().partition("^")
            if letter not in self.alphabet and all(c in self.alphabet for c in letter) and not power:
                word.extend(letter)
                continue
            if not power.strip().isdigit() and power:
                raise ParseError(f"cannot read power in {factor!r}")
            word.extend([letter] * (int(power) if power else 1))
        return self.normal_form(word)

    def __str__(self):
        edges = ",".join(sorted("-".join(sorted(e)) for e in self.edges))
        return f"M({','.join(self.alphabet)}; {edges})"
