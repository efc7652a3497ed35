import unittest
from fractions import Fraction

import numpy as np

from bialgebra import (
    FreeAbelianGroup,
    FrobeniusQuotient,
    GxQuotient,
    InfiltrationQ,
    Monomial,
    MonoidDiag,
    TensorConc,
    TensorK,
    TraceMonoidBasis,
    Word,
    coassociative_on,
    counital_on,
    cyclic_group,
    enumerate_monoids,
    frobenius_freshman_dream,
    frobenius_grouplikes,
    infiltration_coproduct_closed_form,
    is_grouplike,
    make_bialgebra,
    multiplicative_on,
    polynomial_primitive,
    small_monoid_zoo,
    tensor_product_bialgebra,
    unital,
)
from global_variables import BadParameter, DescriptorMismatch, RingMismatch, TruncationExceeded
from monoid_series import TraceMonoid
from scalars import integers, modular, poly, rationals

QQ = rationals()
Z4 = modular(4)
QQq = poly(QQ, ["q"])


def random_element(B, rng, max_degree=None, terms=3):
    basis = B.basis(max_degree)
    picks = rng.choice(len(basis), size=min(terms, len(basis)), replace=False)
    return B.element({basis[i]: int(rng.integers(-3, 4)) for i in picks})


def family_zoo():
    laurent = MonoidDiag(QQ, FreeAbelianGroup(["g"]), 4)
    return {
        "infiltration": InfiltrationQ(QQq, QQq.gen("q"), 6),
        "primitive_z4": polynomial_primitive(Z4, 6),
        "frobenius": FrobeniusQuotient(modular(3), 3, modular(3).one()),
        "gx": GxQuotient(QQ, 4),
        "cyclic": MonoidDiag(modular(6), cyclic_group(3), None),
        "trace": MonoidDiag(integers(), TraceMonoidBasis(TraceMonoid.from_text("x,y,z", "x-y")), 4),
        "tensor_conc": TensorConc(QQ, ("a", "b"), 4),
        "laurent_x_poly": tensor_product_bialgebra(laurent, polynomial_primitive(QQ, 4)),
    }


class TestInfiltration(unittest.TestCase):
    def setUp(self):
        self.B = make_bialgebra("InfiltrationQ", Z4, {"q": "2"}, 6)
        self.x = self.B.gen("x")
        self.one = self.B.one()

    def test_coproduct_of_x(self):
        expected = self.x.tensor(self.one) + self.one.tensor(self.x) + self.x.tensor(self.x).scale(2)
        self.assertEqual(self.B.delta(self.x), expected)

    def test_one_plus_qx_is_grouplike(self):
        g = self.one + self.x * 2
        self.assertEqual(self.B.delta(g), g.tensor(g))
        self.assertTrue(self.B.counit(g).is_one())
        self.assertTrue(is_grouplike(g))

    def test_coproduct_of_x_squared_over_q(self):
        B = InfiltrationQ(QQq, QQq.gen("q"), 6)
        q = QQq.gen("q")
        x, one = B.gen("x"), B.one()
        x2 = x * x
        expected = (
            x2.tensor(one)
            + x.tensor(x).scale(2)
            + one.tensor(x2)
            + x2.tensor(x).scale(q * 2)
            + x.tensor(x2).scale(q * 2)
            + x2.tensor(x2).scale(q * q)
        )
        self.assertEqual(B.delta(x2), expected)

    def test_multiplicative_coproduct_matches_multinomial_form(self):
        B = InfiltrationQ(QQq, QQq.gen("q"), 8)
        x = B.gen("x")
        for m in range(9):
            with self.subTest(m=m):
                self.assertEqual(B.delta(x ** m), infiltration_coproduct_closed_form(B, m))

    def test_truncation_is_loud(self):
        B = InfiltrationQ(QQq, QQq.gen("q"), 3)
        with self.assertRaises(TruncationExceeded):
            B.gen("x") ** 4

    def test_counit(self):
        self.assertTrue(self.B.counit(self.one + self.x * 2).is_one())
        self.assertTrue(self.B.counit(self.B.zero()).is_zero())


class TestSmallFamilies(unittest.TestCase):
    def test_primitive_product(self):
        B = polynomial_primitive(QQ, 4)
        x = B.gen("x")
        self.assertEqual((B.one() + x) * (B.one() - x), B.one() - x * x)

    def test_primitive_grouplikes(self):
        B = polynomial_primitive(Z4, 4)
        self.assertTrue(is_grouplike(B.one() + B.gen("x") * 2))
        self.assertFalse(is_grouplike(polynomial_primitive(QQ, 4).gen("x")))

    def test_gx_quotient(self):
        B = make_bialgebra("GxQuotient", QQ, {}, 4)
        g, x = B.gen("g"), B.gen("x")
        self.assertTrue((g * x).is_zero())
        self.assertTrue(B.counit(g).is_one())
        self.assertTrue(is_grouplike(g))
        with self.assertRaises(BadParameter):
            B.parse_basis("g*x")

    def test_frobenius_quotient(self):
        F3 = modular(3)
        B = make_bialgebra("FrobeniusQuotient", F3, {"p": 3, "q": "1"})
        x = B.gen("x")
        self.assertTrue((x * x * x).is_zero())
        self.assertTrue(frobenius_freshman_dream(B))
        one, g, g_inverse = frobenius_grouplikes(B)
        for element in (one, g, g_inverse):
            self.assertTrue(is_grouplike(element))
        self.assertEqual(g * g_inverse, one)

    def test_frobenius_needs_matching_characteristic(self):
        with self.assertRaises(BadParameter):
            make_bialgebra("FrobeniusQuotient", modular(5), {"p": 3, "q": "1"})
        with self.assertRaises(BadParameter):
            make_bialgebra("FrobeniusQuotient", modular(4), {"p": 4, "q": "1"})

    def test_free_monoid_is_diagonal(self):
        B = make_bialgebra("MonoidDiag", QQ, {"monoid": {"kind": "free", "alphabet": "x"}}, 5)
        w = B.basis_element(Word(("x", "x", "x")))
        self.assertEqual(B.delta(w), w.tensor(w))
        self.assertTrue(B.counit(w).is_one())

    def test_tensor_conc_unshuffles(self):
        B = TensorConc(QQ, ("a", "b"), 4)
        ab = B.gen("a") * B.gen("b")
        a, b, one = B.gen("a"), B.gen("b"), B.one()
        expected = ab.tensor(one) + a.tensor(b) + b.tensor(a) + one.tensor(ab)
        self.assertEqual(B.delta(ab), expected)

    def test_unknown_family(self):
        with self.assertRaises(BadParameter):
            make_bialgebra("Sweedler", QQ)

    def test_descriptor_mismatch(self):
        with self.assertRaises(DescriptorMismatch):
            polynomial_primitive(QQ, 4).gen("x") * polynomial_primitive(QQ, 5).gen("x")


class TestMonoidZoo(unittest.TestCase):
    def test_class_counts(self):
        self.assertEqual([len(enumerate_monoids(n)) for n in range(1, 5)], [1, 2, 7, 35])
        self.assertEqual(len(small_monoid_zoo(4)), 45)

    def test_groups_of_order_four(self):
        # C4 and V4
        monoids = enumerate_monoids(4)
        groups = [m for m in monoids if all(any(m.table[(a, b)] == "1" for b in m.names) for a in m.names)]
        self.assertEqual(len(groups), 2)
        self.assertTrue(all(m.is_commutative for m in groups))

    def test_zoo_gives_bialgebras(self):
        for monoid in enumerate_monoids(3):
            B = MonoidDiag(QQ, monoid)
            self.assertTrue(unital(B))
            for a in B.basis():
                self.assertTrue(coassociative_on(B, a))
                self.assertTrue(counital_on(B, a))
                for b in B.basis():
                    self.assertTrue(multiplicative_on(B.basis_element(a), B.basis_element(b)))


class TestTensorProduct(unittest.TestCase):
    def setUp(self):
        self.laurent = MonoidDiag(QQ, FreeAbelianGroup(["g"]), 3)
        self.B = tensor_product_bialgebra(self.laurent, polynomial_primitive(QQ, 3))

    def test_middle_swap(self):
        g, x = self.B.gen("g"), self.B.gen("x")
        gx = g * x
        self.assertEqual(self.B.delta(gx), gx.tensor(g) + g.tensor(gx))

    def test_grouplike_pairs(self):
        g = self.B.gen("g")
        self.assertTrue(is_grouplike(g))
        self.assertTrue(self.B.counit(g).is_one())

    def test_ring_mismatch(self):
        with self.assertRaises(RingMismatch):
            tensor_product_bialgebra(self.laurent, polynomial_primitive(Z4, 3))


class TestStructureLaws(unittest.TestCase):
    def test_coassociative_and_counital_on_basis(self):
        for name, B in family_zoo().items():
            for index in B.basis():
                with self.subTest(family=name, index=B.format_basis(index)):
                    self.assertTrue(coassociative_on(B, index))
                    self.assertTrue(counital_on(B, index))

    def test_multiplicative_and_unital(self):
        rng = np.random.default_rng(42)
        for name, B in family_zoo().items():
            half = None if B.truncation is None and B.finite_basis else 2
            self.assertTrue(unital(B))
            for _ in range(5):
                a = random_element(B, rng, half)
                b = random_element(B, rng, half)
                with self.subTest(family=name, a=str(a), b=str(b)):
                    self.assertTrue(multiplicative_on(a, b))

    def test_closed_form_indices(self):
        B = InfiltrationQ(QQ, QQ.from_fraction(Fraction(1, 2)), 4)
        closed = infiltration_coproduct_closed_form(B, 1)
        self.assertEqual(set(closed.terms), {(Monomial((1,)), Monomial((0,))), (Monomial((0,)), Monomial((1,))), (Monomial((1,)), Monomial((1,)))})
        self.assertIsInstance(closed, TensorK)


if __name__ == "__main__":
    unittest.main()
