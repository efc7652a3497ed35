import unittest
from fractions import Fraction

import numpy as np

from bialgebra import InfiltrationQ, TensorConc, polynomial_primitive
from convolution import conv_power, convolve
from dual_filtration import (
    character,
    character_independence_system,
    dump_matrix,
    infiltration_character_product,
    is_invertible_character,
    monomial_collision,
    monomial_map_injectivity,
    star_character,
)
from global_variables import BadParameter, NotIntegralDomain
from scalars import integers, modular, rationals

QQ = rationals()


def fraction(rng):
    return Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 5)))


class TestCharacterProducts(unittest.TestCase):
    def test_random_triples(self):
        rng = np.random.default_rng(42)
        for trial in range(10):
            q = Fraction(0) if trial == 0 else fraction(rng)
            alpha, beta = fraction(rng), fraction(rng)
            with self.subTest(alpha=alpha, beta=beta, q=q):
                _, matches = infiltration_character_product(alpha, beta, q, 10)
                self.assertTrue(matches)

    def test_ones(self):
        product, matches = infiltration_character_product(1, 1, 1, 8)
        self.assertTrue(matches)
        self.assertEqual(product, star_character(InfiltrationQ(QQ, QQ.one(), 8), 3))

    def test_zero_is_neutral(self):
        B = InfiltrationQ(QQ, QQ.from_int(2), 8)
        product, _ = infiltration_character_product(Fraction(5, 3), 0, 2, 8)
        self.assertEqual(product, star_character(B, Fraction(5, 3)))

    def test_shuffle_powers(self):
        B = polynomial_primitive(QQ, 8)
        alpha = QQ.from_fraction(Fraction(-2, 3))
        g = star_character(B, alpha)
        for n in range(6):
            self.assertEqual(conv_power(g, n), star_character(B, QQ.from_int(n) * alpha))

    def test_word_characters_add(self):
        B = TensorConc(QQ, ("a", "b"), 6)
        first = character(B, {"a": 1, "b": Fraction(1, 2)})
        second = character(B, {"a": -3, "b": 2})
        self.assertEqual(convolve(first, second), character(B, {"a": -2, "b": Fraction(5, 2)}))

    def test_multiplicative(self):
        B = InfiltrationQ(QQ, QQ.from_int(-1), 8)
        g = star_character(B, Fraction(7, 2))
        x = B.gen("x")
        for i in range(1, 4):
            for j in range(1, 5):
                self.assertEqual(g(x**i * x**j), g(x**i) * g(x**j))


class TestAbsorbingCharacter(unittest.TestCase):
    def test_absorbs_every_character(self):
        B = InfiltrationQ(QQ, QQ.from_int(2), 8)
        absorbing = star_character(B, Fraction(-1, 2))
        for beta in (Fraction(0), Fraction(1), Fraction(-7, 3)):
            self.assertEqual(convolve(star_character(B, beta), absorbing), absorbing)

    def test_invertibility(self):
        self.assertFalse(is_invertible_character(QQ.from_fraction(Fraction(-1, 2)), QQ.from_int(2)))
        self.assertTrue(is_invertible_character(QQ.one(), QQ.from_int(2)))
        self.assertTrue(is_invertible_character(QQ.from_int(5), QQ.zero()))
        ZZ = integers()
        self.assertFalse(is_invertible_character(ZZ.one(), ZZ.one()))
        self.assertTrue(is_invertible_character(ZZ.from_int(-2), ZZ.one()))


class TestIndependenceSystem(unittest.TestCase):
    def test_two_shuffle_characters(self):
        B = polynomial_primitive(QQ, 8)
        system = character_independence_system(B, [{"x": 1}, {"x": 2}], 2)
        self.assertTrue(system.trivial_only)
        self.assertIsNone(system.witness())
        self.assertEqual(len(system.unknowns), 6)
        self.assertEqual(len(system.rows), 9)

    def test_three_shuffle_characters(self):
        B = polynomial_primitive(QQ, 12)
        system = character_independence_system(B, [{"x": 1}, {"x": 2}, {"x": 5}], 3)
        self.assertTrue(system.trivial_only)

    def test_counit_alone(self):
        B = InfiltrationQ(QQ, QQ.one(), 6)
        self.assertTrue(character_independence_system(B, [{"x": 0}], 3).trivial_only)

    def test_absorbing_character_has_a_relation(self):
        B = InfiltrationQ(QQ, QQ.one(), 12)
        system = character_independence_system(B, [{"x": -1}], 1)
        self.assertFalse(system.trivial_only)
        [p] = system.witness()
        self.assertEqual(set(p.images), set(B.gen("x").terms))
        self.assertTrue(system.witness_vanishes())
        payload = system.to_dict()
        self.assertEqual(payload["invertible"], [False])
        self.assertEqual(payload["witness"][0]["degree"], 1)
        self.assertTrue(payload["witness_vanishes"])

    def test_needs_integral_domain(self):
        B = polynomial_primitive(modular(4), 6)
        with self.assertRaises(NotIntegralDomain):
            character_independence_system(B, [{"x": 1}], 1)

    def test_bad_parameters(self):
        B = polynomial_primitive(QQ, 6)
        with self.assertRaises(BadParameter):
            character_independence_system(B, [{"x": 1}, {"x": 1}], 1)
        with self.assertRaises(BadParameter):
            character_independence_system(B, [{"x": 1}], 7)

    def test_dump_matrix(self):
        B = InfiltrationQ(QQ, QQ.one(), 12)
        text = dump_matrix(character_independence_system(B, [{"x": -1}], 1))
        lines = text.splitlines()
        self.assertEqual(lines[0], "13 2")
        self.assertEqual(len(lines), 14)
        self.assertEqual(lines[1].split(), ["1", "0"])


class TestMonomialMap(unittest.TestCase):
    def test_injectivity(self):
        self.assertTrue(monomial_map_injectivity((1,), 3))
        self.assertFalse(monomial_map_injectivity((1, 2), 3))
        self.assertTrue(monomial_map_injectivity((1, 10), 3))

    def test_collision(self):
        self.assertEqual(monomial_collision((1, 2), 3), ((0, 1), (2, 0)))
        self.assertIsNone(monomial_collision((1, 10), 3))


if __name__ == "__main__":
    unittest.main()
