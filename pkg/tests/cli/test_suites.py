import unittest
from dataclasses import replace
from unittest import mock

from cli import SUITES, SuiteResult, instance_from_dict, load_instance, run_suites, suite_names, summary_table
from convolution import degree_upper_bound
from global_variables import HORIZON_ONLY, BadParameter, ParseError

CASES = {
    "grouplike_relations": 10,
    "filtration_pairs": 6,
    "leibniz_triples": 3,
    "binomial_windows": 5,
    "bound_pairs": 3,
    "character_pairs": 2,
    "character_triples": 3,
    "mobius_length": 4,
}


class TestSuiteSelection(unittest.TestCase):
    def test_names(self):
        self.assertEqual(suite_names("all"), sorted(SUITES))
        self.assertEqual(suite_names("mobius, appendix"), ["appendix", "mobius"])
        self.assertEqual(len(SUITES), 13)

    def test_unknown(self):
        with self.assertRaises(BadParameter):
            suite_names("appendix,nope")
        with self.assertRaises(BadParameter):
            suite_names(",")


class TestSuitesPass(unittest.TestCase):
    def run_one(self, name):
        [result] = run_suites(name, 42, CASES)
        self.assertGreater(result.cases, 0)
        self.assertTrue(result.passed, result.failures)

    def test_exact_formulas(self):
        for name in ("infiltration_coproduct", "unipotence_closed_form", "degree_bounds"):
            with self.subTest(suite=name):
                self.run_one(name)

    def test_grouplike_suites(self):
        for name in ("grouplike_relations", "grouplike_rank", "characters_vs_grouplikes"):
            with self.subTest(suite=name):
                self.run_one(name)

    def test_series_suites(self):
        for name in ("mobius", "character_series"):
            with self.subTest(suite=name):
                self.run_one(name)

    def test_dual_suites(self):
        for name in ("character_products", "filtration_degree", "character_independence"):
            with self.subTest(suite=name):
                self.run_one(name)

    def test_appendix_and_negative_control(self):
        for name in ("appendix", "negative_control"):
            with self.subTest(suite=name):
                self.run_one(name)

    def test_appendix_requires_certified_bounds(self):
        def horizon_only(b, horizon):
            return replace(degree_upper_bound(b, horizon), mode=HORIZON_ONLY)

        with mock.patch("cli.suites.degree_upper_bound", horizon_only):
            [result] = run_suites("appendix", 42, CASES)
        self.assertFalse(result.passed)
        self.assertEqual(len(result.failures), CASES["bound_pairs"])
        self.assertTrue(all("b" in failure for failure in result.failures))

    def test_rank_suite_sweeps_every_small_monoid(self):
        [result] = run_suites("grouplike_rank", 42, CASES)
        self.assertTrue(result.passed, result.failures)
        # two rings, 45 monoids, two checks each plus the subsets of their elements
        self.assertGreater(result.cases, 2 * 45 * 2)

    def test_case_counts_follow_config(self):
        [result] = run_suites("grouplike_relations", 42, {"grouplike_relations": 4})
        # the named instance, four random draws and the draw count
        self.assertEqual(result.cases, 6)


class TestReporting(unittest.TestCase):
    def test_failures_are_stringified(self):
        result = SuiteResult("demo")
        result.check(True, n=1)
        result.check(False, n=2, values=[1, 2])
        self.assertFalse(result.passed)
        self.assertEqual(result.to_dict(), {"cases": 2, "failures": [{"n": "2", "values": "[1, 2]"}], "passed": False})

    def test_summary_table(self):
        passing, failing = SuiteResult("a", 3), SuiteResult("b", 1, [{"n": "1"}])
        table = summary_table([passing, failing])
        self.assertEqual(list(table.columns), ["suite", "cases", "failures", "passed"])
        self.assertEqual(table["failures"].tolist(), [0, 1])
        self.assertEqual(table["passed"].tolist(), [True, False])


class TestInstances(unittest.TestCase):
    def test_shipped_instances_load(self):
        frob = load_instance("frob.json")
        self.assertEqual(str(frob.bialgebra.ring), str(frob.ring))
        g, inverse = frob.element("g"), frob.element("g_inverse")
        self.assertEqual(g * inverse, frob.bialgebra.one())
        words = load_instance("words.json")
        self.assertEqual(words.element("commutator"), words.element("ab") - words.element("ba"))
        z4 = load_instance("z4_infiltration.json")
        self.assertEqual([str(c) for c in z4.scalar_list("coefficients")], ["2 mod 4", "2 mod 4"])

    def test_schema_errors(self):
        with self.assertRaises(ParseError):
            instance_from_dict({"ring": "QQ"})
        with self.assertRaises(ParseError):
            instance_from_dict({"ring": "QQ", "bialgebra": {"params": {}}})
        with self.assertRaises(ParseError):
            load_instance("shuffle.json").element_list("grouplikes")
        with self.assertRaises(ParseError):
            instance_from_dict({"ring": "QQ", "bialgebra": {"family": "PolynomialPrimitive"}, "elements": ["x"]})
        with self.assertRaises(ParseError):
            instance_from_dict({"ring": "QQ", "bialgebra": {"family": "FiniteDualOfAlgebra", "params": {}}})


if __name__ == "__main__":
    unittest.main()
