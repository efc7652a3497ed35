import unittest
from fractions import Fraction

import numpy as np

from bialgebra import (
    FrobeniusQuotient,
    GxQuotient,
    InfiltrationQ,
    MonoidDiag,
    TensorConc,
    cyclic_group,
    parse_element,
    polynomial_primitive,
)
from convolution import (
    LinearMapRule,
    conv_power,
    convolve,
    degree_upper_bound,
    delta_plus_identity_holds,
    delta_plus_order,
    eta_eps_minus_id_power,
    eta_eps_minus_id_sequence,
    geometric_identity_holds,
    id_power_sequence,
    is_m_polynomial,
)
from global_variables import CERTIFIED, HORIZON_ONLY
from scalars import modular, poly, rationals

QQ = rationals()
QQq = poly(QQ, ["q"])
F2 = modular(2)
F3 = modular(3)
Z4 = modular(4)
Z8 = modular(8)


def random_polynomial(B, rng, degree):
    x = B.gen("x")
    ring = B.ring
    return sum((x ** d * ring.from_int(int(rng.integers(1, 8))) for d in range(degree + 1)), B.zero())


class TestEtaEpsMinusId(unittest.TestCase):
    def test_closed_form_over_generic_q(self):
        B = InfiltrationQ(QQq, QQq.gen("q"), 8)
        q = QQq.gen("q")
        x = B.gen("x")
        values = eta_eps_minus_id_sequence(x, 8)
        self.assertTrue(values[0].is_zero())
        for n in range(1, 9):
            with self.subTest(n=n):
                self.assertEqual(values[n], -(x ** n) * (-q) ** (n - 1))

    def test_frobenius_vanishes_from_three(self):
        B = FrobeniusQuotient(F3, 3, F3.one())
        xbar = B.gen("x")
        self.assertFalse(eta_eps_minus_id_power(xbar, 2).is_zero())
        for n in range(3, 8):
            self.assertTrue(eta_eps_minus_id_power(xbar, n).is_zero())

    def test_unit(self):
        B = polynomial_primitive(QQ, 4)
        self.assertEqual(eta_eps_minus_id_power(B.one(), 0), B.one())
        self.assertTrue(eta_eps_minus_id_power(B.one(), 1).is_zero())

    def test_grouplike_in_characteristic_two(self):
        B = MonoidDiag(F2, cyclic_group(2))
        g = B.gen("g")
        self.assertEqual(eta_eps_minus_id_power(g, 1), B.one() - g)
        self.assertTrue(eta_eps_minus_id_power(g, 2).is_zero())


class TestDegreeBound(unittest.TestCase):
    def test_nilpotent_q(self):
        B = InfiltrationQ(Z4, Z4.from_int(2), 12)
        result = degree_upper_bound(B.gen("x"), 10)
        self.assertEqual((result.bound, result.mode), (2, CERTIFIED))
        self.assertTrue(result.unipotent)

    def test_frobenius(self):
        B = FrobeniusQuotient(F3, 3, F3.one())
        result = degree_upper_bound(B.gen("x"))
        self.assertEqual((result.bound, result.mode), (2, CERTIFIED))

    def test_unit_and_zero(self):
        B = polynomial_primitive(QQ, 6)
        self.assertEqual(degree_upper_bound(B.one(), 4).bound, 0)
        self.assertEqual(degree_upper_bound(B.zero(), 4).bound, -1)

    def test_polynomial_is_certified_by_degree(self):
        B = polynomial_primitive(QQ, 12)
        b = parse_element(B, "x^3 - 2*x + 5")
        result = degree_upper_bound(b, 6)
        self.assertEqual((result.bound, result.mode), (3, CERTIFIED))

    def test_generic_q_is_not_unipotent(self):
        B = InfiltrationQ(QQq, QQq.gen("q"), 6)
        result = degree_upper_bound(B.gen("x"), 6)
        self.assertIsNone(result.bound)
        self.assertFalse(result.unipotent)
        self.assertEqual(result.mode, HORIZON_ONLY)

    def test_horizon_only_grouplike(self):
        B = MonoidDiag(F2, cyclic_group(2))
        result = degree_upper_bound(B.gen("g"), 5)
        self.assertEqual(result.bound, 1)
        self.assertEqual(result.mode, HORIZON_ONLY)
        self.assertIsNone(degree_upper_bound(MonoidDiag(QQ, cyclic_group(2)).gen("g"), 5).bound)

    def test_products_and_sums_stay_bounded(self):
        rng = np.random.default_rng(42)
        B = InfiltrationQ(Z8, Z8.from_int(2), 12)
        for _ in range(6):
            b = random_polynomial(B, rng, 2)
            c = random_polynomial(B, rng, 2)
            p = degree_upper_bound(b, 10)
            q = degree_upper_bound(c, 10)
            self.assertEqual((p.mode, q.mode), (CERTIFIED, CERTIFIED))
            product = degree_upper_bound(b * c, 10)
            self.assertLessEqual(product.bound, p.bound + q.bound)
            total = degree_upper_bound(b + c, 10)
            self.assertLessEqual(total.bound, max(p.bound, q.bound))
            self.assertEqual((product.mode, total.mode), (CERTIFIED, CERTIFIED))

    def test_gx_mixed_element(self):
        B = GxQuotient(QQ, 12)
        result = degree_upper_bound(parse_element(B, "x^2 + g"), 5)
        self.assertIsNone(result.bound)
        self.assertIsNone(result.structural)


class TestIdentities(unittest.TestCase):
    def test_reduced_coproduct_identity(self):
        rng = np.random.default_rng(42)
        B = InfiltrationQ(QQq, QQq.gen("q"), 10)
        for _ in range(3):
            b = random_polynomial(B, rng, 2)
            for n in range(1, 6):
                with self.subTest(b=str(b), n=n):
                    self.assertTrue(delta_plus_identity_holds(b, n))

    def test_reduced_coproduct_identity_on_words(self):
        B = TensorConc(QQ, ("a", "b"), 6)
        b = parse_element(B, "ab - 2*ba + a")
        for n in range(1, 5):
            self.assertTrue(delta_plus_identity_holds(b, n))

    def test_reduced_coproduct_order(self):
        B = polynomial_primitive(QQ, 8)
        self.assertEqual(delta_plus_order(B.gen("x") ** 3, 6), 3)
        frobenius = FrobeniusQuotient(F3, 3, F3.one())
        self.assertIsNone(delta_plus_order(frobenius.gen("x"), 6))

    def test_geometric_identity(self):
        B = InfiltrationQ(Z4, Z4.from_int(2), 12)
        x = B.gen("x")
        self.assertTrue(geometric_identity_holds(x, 2, 10))
        self.assertFalse(geometric_identity_holds(x, 0, 10))
        frobenius = FrobeniusQuotient(F3, 3, F3.one())
        self.assertTrue(geometric_identity_holds(frobenius.gen("x"), 2, 10))

    def test_id_powers_are_polynomial(self):
        B = InfiltrationQ(Z4, Z4.from_int(2), 12)
        ids = id_power_sequence(B.gen("x"), 10)
        self.assertTrue(is_m_polynomial(ids, 2).holds)
        self.assertFalse(is_m_polynomial(ids, 1).holds)


class TestAlgebraMaps(unittest.TestCase):
    def test_product_of_characters(self):
        B = polynomial_primitive(QQ, 6)
        p = LinearMapRule.from_algebra_map(B, QQ, {"x": 2})
        q = LinearMapRule.from_algebra_map(B, QQ, {"x": Fraction(-1, 3)})
        self.assertEqual(convolve(p, q), LinearMapRule.from_algebra_map(B, QQ, {"x": Fraction(5, 3)}))

    def test_product_of_algebra_maps(self):
        source = InfiltrationQ(QQ, QQ.one(), 4)
        target = polynomial_primitive(QQ, 12)
        y = target.gen("x")
        p = LinearMapRule.from_algebra_map(source, target, {"x": y * 2})
        q = LinearMapRule.from_algebra_map(source, target, {"x": y + y * y})
        pq = convolve(p, q)
        x = source.gen("x")
        for a in range(5):
            for b in range(5 - a):
                self.assertEqual(pq(x ** a * x ** b), pq(x ** a) * pq(x ** b))

    def test_id_powers_are_multiplicative(self):
        B = InfiltrationQ(QQ, QQ.one(), 15)
        x = B.gen("x")
        identity = LinearMapRule.identity(B, 3)
        for k in range(6):
            power = conv_power(identity, k)
            for a in range(4):
                for b in range(4 - a):
                    with self.subTest(k=k, a=a, b=b):
                        self.assertEqual(power(x ** a * x ** b), power(x ** a) * power(x ** b))

    def test_id_powers_on_finite_family(self):
        B = FrobeniusQuotient(F3, 3, F3.one())
        identity = LinearMapRule.identity(B)
        basis = [B.basis_element(i) for i in B.basis()]
        for k in range(6):
            power = conv_power(identity, k)
            for u in basis:
                for v in basis:
                    self.assertEqual(power(u * v), power(u) * power(v))

    def test_noncommutative_square_is_not_multiplicative(self):
        B = TensorConc(QQ, ("a", "b"), 4)
        square = conv_power(LinearMapRule.identity(B), 2)
        a, b = B.gen("a"), B.gen("b")
        self.assertEqual(square(a * b), parse_element(B, "3*ab + ba"))
        self.assertNotEqual(square(a * b), square(a) * square(b))


if __name__ == "__main__":
    unittest.main()
