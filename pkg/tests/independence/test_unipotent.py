import unittest

from bialgebra import (
    GxQuotient,
    MonoidDiag,
    TensorConc,
    make_monoid,
    polynomial_primitive,
    tensor_product_bialgebra,
)
from global_variables import NotCommutativeFamily
from independence import (
    ASSUMPTIONS_NOT_MET,
    INDEPENDENCE_CONFIRMED,
    NO_RELATION,
    check_unipotent_independence,
    regularity_assumptions,
)
from scalars import REGULAR, ZERO_DIVISOR, rationals

QQ = rationals()


def laurent_times_polynomial(truncation=3):
    group = MonoidDiag(QQ, make_monoid({"kind": "free_abelian_group", "variables": "g"}), truncation)
    return tensor_product_bialgebra(group, polynomial_primitive(QQ, truncation))


class TestUnipotentIndependence(unittest.TestCase):
    def test_gx_quotient_is_not_applicable(self):
        B = GxQuotient(QQ, 4)
        g, x = B.gen("g"), B.gen("x")
        self.assertTrue((x * g).is_zero())
        result = check_unipotent_independence(B, [g], [x], 6)
        self.assertEqual(result.verdict, ASSUMPTIONS_NOT_MET)
        self.assertTrue(result.hypothesis_holds)
        self.assertFalse(result.conclusion_holds)
        [assumption] = result.assumptions
        self.assertEqual(assumption["status"], ZERO_DIVISOR)
        self.assertEqual(assumption["witness"], "x")
        self.assertTrue(result.passed)

    def test_no_relation(self):
        B = laurent_times_polynomial()
        gs = [B.one(), B.gen("g")]
        x = B.gen("x")
        result = check_unipotent_independence(B, gs, [x, x], 6)
        self.assertEqual(result.verdict, NO_RELATION)
        self.assertIsNone(result.conclusion_holds)

    def test_trivial_relation(self):
        B = laurent_times_polynomial()
        gs = [B.one(), B.gen("g")]
        result = check_unipotent_independence(B, gs, [B.zero(), B.zero()], 6)
        self.assertEqual(result.verdict, INDEPENDENCE_CONFIRMED)
        self.assertTrue(all(entry["status"] == REGULAR for entry in result.assumptions))
        self.assertEqual(result.to_dict()["sum"], "0")

    def test_equal_grouplikes_break_the_difference_assumption(self):
        B = polynomial_primitive(QQ, 4)
        x = B.gen("x")
        result = check_unipotent_independence(B, [B.one(), B.one()], [x, -x], 6)
        self.assertEqual(result.verdict, ASSUMPTIONS_NOT_MET)
        statuses = {entry["kind"]: entry["status"] for entry in regularity_assumptions(B, [B.one(), B.one()])}
        self.assertEqual(statuses, {"difference": ZERO_DIVISOR, "grouplike": REGULAR})

    def test_needs_commutative_family(self):
        B = TensorConc(QQ, ("a", "b"), 3)
        with self.assertRaises(NotCommutativeFamily):
            check_unipotent_independence(B, [B.one()], [B.zero()])


if __name__ == "__main__":
    unittest.main()
