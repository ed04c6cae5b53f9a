import unittest
from fractions import Fraction
from unittest.mock import patch

import configuration
import principal
import verify
from errors import StructureError, UsageError
from lie_core import build_algebra
from support import parse_hbar_list


def failures(assertions):
    return {a.name: a.details for a in assertions if a.status == verify.FAILED}


def skipped(assertions):
    return [a.name for a in assertions if a.status == verify.SKIPPED]


class A1SuiteTestCase(unittest.TestCase):
    def setUp(self):
        self.g = build_algebra("A1")
        self.hbars = parse_hbar_list(configuration.defaultHbars)

    def test_main1(self):
        assertions = verify.run_suite(self.g, "main1", self.hbars)
        self.assertEqual(failures(assertions), {})
        self.assertEqual([a.name for a in assertions], sorted(c.name for c in verify.MAIN1))

    def test_main2(self):
        assertions = verify.run_suite(self.g, "main2", self.hbars)
        self.assertEqual(failures(assertions), {})

    def test_lemmas(self):
        assertions = verify.run_suite(self.g, "lemmas", self.hbars)
        self.assertEqual(failures(assertions), {})
        oracle = next(a for a in assertions if a.name == "kernel_oracle")
        self.assertEqual(oracle.details["dimensions"], {"0": 1, "3": 1})

    def test_details_carry_the_computed_values(self):
        assertions = {a.name: a for a in verify.run_suite(self.g, "lemmas", [Fraction(1)])}
        self.assertEqual(assertions["koszul_nonsingular"].details, {"J": "-2/1", "Jplus": "-2/1"})
        self.assertEqual(assertions["invariant_generators"].details["degrees"], [2])

    def test_unknown_suite(self):
        with self.assertRaises(UsageError):
            verify.run_suite(self.g, "main3", self.hbars)

    @patch('configuration.exteriorMaxDim', 2)
    def test_exterior_checks_are_skipped_above_the_limit(self):
        assertions = verify.run_suite(self.g, "main1", self.hbars)
        for a in assertions:
            self.assertEqual(a.status, verify.SKIPPED)
            self.assertIsNone(a.passed)
            self.assertIn("skipped", a.details)
            self.assertEqual(a.to_json()["status"], "skipped")
            self.assertFalse(a.to_json()["passed"])
        report = verify.build_report(self.g, "main1", self.hbars, assertions)
        self.assertEqual(report["counts"], {"passed": 0, "failed": 0, "skipped": len(assertions)})
        assert report["passed"]

    @patch('verify.phi', side_effect=StructureError("Φ failed"))
    def test_errors_become_failed_assertions(self, mock_phi):
        assertions = {a.name: a for a in verify.run_suite(self.g, "main1", [Fraction(1)])}
        broken = assertions["phi_injective_on_invariants"]
        self.assertFalse(broken.passed)
        self.assertEqual(broken.details, {"error": "Φ failed"})
        assert assertions["phi0_of_invariants_is_scalar"].passed
        mock_phi.assert_called()

    @patch('verify.phi', side_effect=RuntimeError("boom"))
    def test_unexpected_exceptions_become_failed_assertions(self, mock_phi):
        assertions = {a.name: a for a in verify.run_suite(self.g, "main1", [Fraction(1)])}
        broken = assertions["phi_injective_on_invariants"]
        self.assertEqual(broken.status, verify.FAILED)
        self.assertEqual(broken.details, {"error": "RuntimeError: boom"})

    def test_sweeps_cover_every_case(self):
        assertions = {a.name: a for a in verify.run_suite(self.g, "lemmas", [Fraction(1)])}
        self.assertEqual(assertions["taylor_structure"].details["pairs"], 64)
        self.assertEqual(assertions["contraction_superderivation"].details["cases"], 3 * 8 * 8)
        self.assertEqual(assertions["composition_law"].details["monomials"], 35)

    def test_report(self):
        hbars = [Fraction(1), Fraction(1, 2)]
        assertions = [verify.Assertion("b", "second", True), verify.Assertion("a", "first", False, {"x": 1})]
        report = verify.build_report(self.g, "main1", hbars, assertions)
        self.assertEqual(report["schema"], verify.SCHEMA)
        self.assertEqual(report["algebra"], "A1")
        self.assertEqual(report["form"], "trace")
        self.assertEqual(report["hbars"], ["1/1", "1/2"])
        self.assertEqual([a["name"] for a in report["assertions"]], ["a", "b"])
        self.assertFalse(report["passed"])
        self.assertEqual(report["counts"], {"passed": 1, "failed": 1, "skipped": 0})


class ContextTestCase(unittest.TestCase):
    def setUp(self):
        self.ctx = verify.Context(build_algebra("A1"), [1])

    def test_sample_is_seeded(self):
        items = list(range(50))
        first = self.ctx.sample(items, 7)
        self.assertEqual(first, self.ctx.sample(items, 7))
        self.assertEqual(len(first), 7)
        self.assertEqual(first, sorted(first))
        self.assertEqual(self.ctx.sample(items[:5], 7), items[:5])

    def test_blades(self):
        self.assertEqual(len(self.ctx.blades(3)), 8)
        self.assertEqual(len(self.ctx.blades(3, weight_zero=True)), 4)

    def test_random_multivectors(self):
        self.assertEqual(self.ctx.random_multivectors(5), self.ctx.random_multivectors(5))


class A2SuiteTestCase(unittest.TestCase):
    def test_main1(self):
        g = build_algebra("A2")
        assertions = verify.run_suite(g, "main1", [Fraction(1), Fraction(2)])
        self.assertEqual(failures(assertions), {})
        self.assertEqual(skipped(assertions), [])


class RankTwoAndThreeSuiteTestCase(unittest.TestCase):
    def test_b2_main2(self):
        g = build_algebra("B2")
        assertions = {a.name: a for a in verify.run_suite(g, "main2", [Fraction(1)])}
        self.assertEqual(failures(assertions.values()), {})
        self.assertEqual(skipped(assertions.values()), [])
        details = assertions["grading_is_dual_not_own"].details
        self.assertFalse(details["rhoParallelToRhoCheck"])
        self.assertEqual(details["degreesDifferingFromOwnGrading"], [3, 7])
        self.assertEqual(assertions["kernel_criterion"].details["fischerOrthogonalStatus"], principal.NOT_MET)

    def test_a3_main1_runs_the_exterior_side(self):
        g = build_algebra("A3")
        assertions = verify.run_suite(g, "main1", [Fraction(1)])
        self.assertEqual(failures(assertions), {})
        self.assertEqual(skipped(assertions), [])


if __name__ == '__main__':
    unittest.main()
