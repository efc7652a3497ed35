import unittest
from fractions import Fraction

import numpy as np

from bialgebra import GxQuotient, InfiltrationQ, TensorConc, parse_element, polynomial_primitive
from convolution import LinearMapRule, convolve
from dual_filtration import (
    DualFunctional,
    filtration_degree,
    leibniz_shift_check,
    right_shift,
    shift,
    star_character,
    verify_filtration_product,
)
from global_variables import NotGradedFamily, NotInAugmentationIdeal, TruncationExceeded
from scalars import rationals

QQ = rationals()


def random_value(rng):
    numerator = int(rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]))
    return QQ.from_fraction(Fraction(numerator, int(rng.integers(1, 4))))


def random_functional(B, rng, max_degree, window=None):
    images = {index: random_value(rng) for index in B.basis(max_degree)}
    return DualFunctional(B, B.ring, images, window)


def random_augmentation_element(B, rng, max_degree):
    basis = [index for index in B.basis(max_degree) if B.degree(index) > 0]
    return B.element({index: random_value(rng) for index in basis})


class TestFiltrationDegree(unittest.TestCase):
    def test_examples(self):
        B = polynomial_primitive(QQ, 6)
        self.assertEqual(filtration_degree(DualFunctional.counit(B)), 0)
        self.assertEqual(filtration_degree(DualFunctional.dual_basis(B, "x")), 1)
        self.assertEqual(filtration_degree(DualFunctional(B)), -1)

    def test_plain_rules_are_accepted(self):
        B = polynomial_primitive(QQ, 6)
        self.assertEqual(filtration_degree(LinearMapRule.dual_basis(B, "x^3")), 3)

    def test_needs_graded_family(self):
        with self.assertRaises(NotGradedFamily):
            DualFunctional(GxQuotient(QQ, 4))


class TestShift(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

    def test_lowers_dual_basis(self):
        B = polynomial_primitive(QQ, 6)
        x = B.gen("x")
        shifted = shift(x, DualFunctional.dual_basis(B, "x^2"))
        self.assertEqual(shifted.window, 5)
        self.assertEqual(shifted, DualFunctional.dual_basis(B, "x", 5))

    def test_counit_is_killed(self):
        B = polynomial_primitive(QQ, 6)
        self.assertEqual(filtration_degree(shift(B.gen("x"), DualFunctional.counit(B))), -1)

    def test_character_is_an_eigenvector(self):
        alpha = QQ.from_fraction(Fraction(3, 2))
        B = InfiltrationQ(QQ, QQ.from_int(2), 8)
        g = star_character(B, alpha)
        self.assertEqual(shift(B.gen("x"), g), star_character(B, alpha, 7).scale(alpha))

    def test_truncation(self):
        B = polynomial_primitive(QQ, 4)
        with self.assertRaises(TruncationExceeded):
            shift(B.gen("x") ** 2, DualFunctional.counit(B), 3)

    def test_degree_drops(self):
        for B in (polynomial_primitive(QQ, 12), InfiltrationQ(QQ, QQ.one(), 12)):
            for _ in range(10):
                f = random_functional(B, self.rng, int(self.rng.integers(0, 6)))
                u = random_augmentation_element(B, self.rng, 3)
                k = filtration_degree(f)
                self.assertLessEqual(filtration_degree(shift(u, f)), k - 1)

    def test_left_action(self):
        B = TensorConc(QQ, ("a", "b"), 6)
        for _ in range(5):
            f = random_functional(B, self.rng, 6)
            u = random_augmentation_element(B, self.rng, 1)
            v = random_augmentation_element(B, self.rng, 2)
            self.assertEqual(shift(u * v, f), shift(u, shift(v, f)))

    def test_right_shift_mirrors_left_on_commutative_family(self):
        B = InfiltrationQ(QQ, QQ.one(), 8)
        f = random_functional(B, self.rng, 8)
        u = parse_element(B, "x^2 - 3*x")
        self.assertEqual(right_shift(u, f), shift(u, f))

    def test_right_shift_on_words(self):
        B = TensorConc(QQ, ("a", "b"), 4)
        f = DualFunctional.dual_basis(B, "ab")
        self.assertEqual(right_shift(B.gen("a"), f), DualFunctional.dual_basis(B, "b", 3))
        self.assertEqual(shift(B.gen("b"), f), DualFunctional.dual_basis(B, "a", 3))


class TestLeibniz(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

    def test_primitive_and_infiltration(self):
        families = [polynomial_primitive(QQ, 10), InfiltrationQ(QQ, QQ.from_fraction(Fraction(-1, 2)), 10)]
        for B in families:
            x = B.gen("x")
            for _ in range(5):
                f1 = random_functional(B, self.rng, 10)
                f2 = random_functional(B, self.rng, 10)
                with self.subTest(family=str(B)):
                    self.assertTrue(leibniz_shift_check(x, f1, f2))

    def test_random_augmentation_elements(self):
        B = InfiltrationQ(QQ, QQ.one(), 8)
        for _ in range(5):
            u = random_augmentation_element(B, self.rng, 2)
            self.assertTrue(
                leibniz_shift_check(u, random_functional(B, self.rng, 8), random_functional(B, self.rng, 8))
            )

    def test_words(self):
        B = TensorConc(QQ, ("a", "b"), 5)
        u = parse_element(B, "ab - b")
        self.assertTrue(leibniz_shift_check(u, random_functional(B, self.rng, 5), random_functional(B, self.rng, 5)))

    def test_counit_factor(self):
        B = polynomial_primitive(QQ, 8)
        x = B.gen("x")
        f = random_functional(B, self.rng, 8)
        self.assertEqual(shift(x, convolve(f, DualFunctional.counit(B))), shift(x, f))
        self.assertTrue(leibniz_shift_check(x, f, DualFunctional.counit(B)))

    def test_needs_augmentation_ideal(self):
        B = polynomial_primitive(QQ, 4)
        f = DualFunctional.counit(B)
        with self.assertRaises(NotInAugmentationIdeal):
            leibniz_shift_check(B.one() + B.gen("x"), f, f)


class TestFiltrationProduct(unittest.TestCase):
    def test_dual_basis_square(self):
        B = polynomial_primitive(QQ, 6)
        x_dual = DualFunctional.dual_basis(B, "x")
        self.assertEqual(filtration_degree(convolve(x_dual, x_dual)), 2)
        self.assertTrue(verify_filtration_product(x_dual, x_dual))

    def test_counit_preserves_degree(self):
        B = polynomial_primitive(QQ, 6)
        f = DualFunctional.dual_basis(B, "x^4")
        self.assertEqual(convolve(DualFunctional.counit(B), f), f)

    def test_random_pairs(self):
        rng = np.random.default_rng(42)
        for B in (polynomial_primitive(QQ, 12), InfiltrationQ(QQ, QQ.from_int(3), 12)):
            for _ in range(20):
                f = random_functional(B, rng, int(rng.integers(0, 6)))
                g = random_functional(B, rng, int(rng.integers(0, 6)))
                self.assertTrue(verify_filtration_product(f, g))


if __name__ == "__main__":
    unittest.main()
