import unittest

from bialgebra import InfiltrationQ, MonoidDiag, TensorK, cyclic_group, polynomial_primitive
from independence import SymElement, sym_project
from scalars import rationals

QQ = rationals()


class TestSymProject(unittest.TestCase):
    def test_tensor_of_basis_elements(self):
        B = polynomial_primitive(QQ, 4)
        x, one = B.gen("x"), B.one()
        projected = sym_project(TensorK.from_elements([x, one]))
        self.assertEqual(projected, SymElement.embed(x) * SymElement.embed(one))
        self.assertEqual(projected, sym_project(TensorK.from_elements([one, x])))

    def test_grouplike_power(self):
        B = MonoidDiag(QQ, cyclic_group(3))
        g = B.gen("g")
        self.assertEqual(sym_project(TensorK.power(g, 3)), SymElement.embed(g) ** 3)
        self.assertEqual(str(SymElement.embed(g) ** 3), "Y[g]^3")

    def test_zero(self):
        B = polynomial_primitive(QQ, 4)
        self.assertTrue(sym_project(TensorK(B, 2)).is_zero())
        self.assertEqual(str(sym_project(TensorK(B, 2))), "0")

    def test_multiplicative_across_concatenation(self):
        B = InfiltrationQ(QQ, QQ.one(), 6)
        x = B.gen("x")
        s = B.delta(x * x)
        t = B.delta(x + x * x * x)
        self.assertEqual(sym_project(s.tensor(t)), sym_project(s) * sym_project(t))

    def test_linear(self):
        B = polynomial_primitive(QQ, 4)
        x = B.gen("x")
        s, t = B.delta(x), B.delta(x * x)
        self.assertEqual(sym_project(s + t.scale(3)), sym_project(s) + sym_project(t) * 3)


if __name__ == "__main__":
    unittest.main()
