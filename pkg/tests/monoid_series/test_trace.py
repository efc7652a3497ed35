import unittest
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from global_variables import BadParameter, ParseError, UnknownLetter
from monoid_series import TraceMonoid, parse_edges

ALPHABET = ("x", "y", "z")
GRAPHS = [
    TraceMonoid(ALPHABET, chosen)
    for size in range(4)
    for chosen in combinations(combinations(ALPHABET, 2), size)
]


class TestNormalForm(unittest.TestCase):
    def test_free_monoid_keeps_words(self):
        M = TraceMonoid.free(["x", "y"])
        self.assertEqual(M.normal_form("yx"), ("y", "x"))

    def test_single_swap(self):
        M = TraceMonoid.from_text("x,y", "x-y")
        self.assertEqual(M.normal_form("yx"), ("x", "y"))

    def test_complete_graph_sorts(self):
        M = TraceMonoid.free_commutative(ALPHABET)
        self.assertEqual(M.normal_form("zyx"), ("x", "y", "z"))

    def test_partial_commutation(self):
        # x-y and y-z commute, x and z do not
        M = TraceMonoid.from_text("x,y,z", "x-y,y-z")
        self.assertEqual(M.normal_form("zyx"), ("y", "z", "x"))
        self.assertEqual(M.normal_form("zxy"), ("y", "z", "x"))

    def test_unknown_letter(self):
        with self.assertRaises(UnknownLetter):
            TraceMonoid.free(["x"]).normal_form("xw")
        with self.assertRaises(UnknownLetter):
            TraceMonoid.from_text("x,y", "x-w")

    def test_bad_edges(self):
        with self.assertRaises(BadParameter):
            TraceMonoid(["x"], [("x", "x")])
        with self.assertRaises(ParseError):
            parse_edges("x-y-z")

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_idempotent_and_swap_invariant(self, data):
        M = data.draw(st.sampled_from(GRAPHS))
        word = data.draw(st.lists(st.sampled_from(ALPHABET), max_size=10))
        nf = M.normal_form(word)
        self.assertEqual(M.normal_form(nf), nf)
        self.assertEqual(len(nf), len(word))
        for i in range(len(word) - 1):
            if M.commute(word[i], word[i + 1]):
                swapped = word[:i] + [word[i + 1], word[i]] + word[i + 2:]
                self.assertEqual(M.normal_form(swapped), nf)


class TestTraces(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(len(TraceMonoid.free(["x", "y"]).traces(3)), 1 + 2 + 4 + 8)
        self.assertEqual(len(TraceMonoid.free_commutative(["x", "y"]).traces(3)), 1 + 2 + 3 + 4)

    def test_cliques(self):
        M = TraceMonoid.from_text("x,y,z", "x-y,y-z")
        self.assertEqual(M.cliques(), [(), ("x",), ("y",), ("z",), ("x", "y"), ("y", "z")])

    def test_format_and_parse(self):
        M = TraceMonoid.from_text("x,y", "")
        trace = M.parse_trace("x^2*y")
        self.assertEqual(trace, ("x", "x", "y"))
        self.assertEqual(M.format_trace(trace), "x^2*y")
        self.assertEqual(M.parse_trace("xxy"), trace)
        self.assertEqual(M.format_trace(()), "1")


if __name__ == "__main__":
    unittest.main()
