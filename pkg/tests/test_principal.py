import json
import os
import unittest
from fractions import Fraction
from unittest.mock import patch

import linalg
import principal
from lie_core import build_algebra, dual_to_cartan, langlands_dual, rho_and_rho_check
from symmetric import dynkin_space, invariant_generators, principal_generators

SLOW = os.environ.get("CLIFFHC_SLOW")

here = os.path.dirname(os.path.abspath(__file__))


class A1PrincipalTestCase(unittest.TestCase):
    def setUp(self):
        self.g = build_algebra("A1")
        with open(os.path.join(here, "data", "a1_expected.json"), encoding="utf-8") as f:
            self.expected = json.load(f)

    def test_triple(self):
        tds = principal.principal_tds(self.g)
        self.assertEqual(list(tds.coefficients), [1])
        self.assertEqual(list(tds.e0), [0, 0, 1])
        self.assertEqual(list(tds.f0), [1, 0, 0])
        self.assertEqual(list(tds.h0), [0, 1, 0])
        assert all(principal.tds_properties(tds).values())

    def test_grading(self):
        report = principal.verify_main2(self.g)
        assert report.passed
        self.assertFalse(report.phiSkipped)
        (piece,) = report.pieces
        self.assertEqual((piece.exponent, piece.degree, piece.multiplicity), (1, 3, 1))
        data = piece.to_json()
        self.assertEqual(data["phi"], self.expected["phi"])
        self.assertEqual(data["formula"], self.expected["formula"])
        self.assertEqual(data["constants"], self.expected["constants"])
        self.assertTrue(data["matches"])

    def test_report_json(self):
        data = principal.verify_main2(self.g).to_json()
        self.assertEqual(data["algebra"], "A1")
        self.assertEqual(data["form"], "trace")
        assert all(data["checks"].values())

    def test_kernel_criterion(self):
        report = principal.lemma_last_check(self.g, dynkin_space(self.g))
        self.assertEqual(report.status, "verified")
        self.assertEqual(report.killed, [True])

    def test_dual_cartan_round_trip(self):
        v = [Fraction(3, 2)]
        self.assertEqual(dual_to_cartan(self.g, principal.to_dual_cartan(self.g, v)), v)


class RankTwoPrincipalTestCase(unittest.TestCase):
    def test_b2(self):
        g = build_algebra("B2")
        report = principal.verify_main2(g)
        assert report.passed, report.checks
        self.assertEqual([p.exponent for p in report.pieces], [1, 3])
        assert report.checks["rho_in_lowest_phi_span"]
        for piece in report.pieces:
            assert all(c not in (None, 0) for c in piece.constants), piece.to_json()
        self.assertEqual(principal.lemma_last_check(g, principal_generators(g)).status, "verified")
        self.assertEqual(principal.lemma_last_check(g, dynkin_space(g)).status, principal.NOT_MET)

    def test_c2(self):
        report = principal.verify_main2(build_algebra("C2"))
        assert report.passed, report.checks
        self.assertEqual([p.exponent for p in report.pieces], [1, 3])
        assert "dynkinMatches" in report.pieces[1].to_json()

    def test_b2_grading_is_not_its_own_principal_grading(self):
        g = build_algebra("B2")
        rho, rho_check = rho_and_rho_check(g)
        self.assertIsNone(linalg.proportionality(rho, rho_check))
        dual = principal.verify_main2(g)
        own = principal.principal_grading(g, principal.principal_tds(g))
        assert not linalg.same_span(dual.pieces[0].basis, own.pieces[0].basis)
        assert linalg.in_span(dual.pieces[0].basis, rho)
        assert linalg.in_span(own.pieces[0].basis, rho_check)

    def test_dual_triple_of_b2_lives_in_c2(self):
        gd = langlands_dual(build_algebra("B2"))
        self.assertEqual(str(gd.cartanType), "C2")
        assert all(principal.tds_properties(principal.principal_tds(gd)).values())

    def test_a1xa1_has_one_piece_of_multiplicity_two(self):
        g = build_algebra("A1xA1")
        report = principal.verify_main2(g)
        assert report.passed, report.checks
        (piece,) = report.pieces
        self.assertEqual(piece.multiplicity, 2)
        self.assertEqual(len(piece.basis), 2)

    @patch('configuration.exteriorMaxDim', 4)
    def test_phi_side_skipped_for_large_algebras(self):
        g = build_algebra("A2")
        report = principal.verify_main2(g)
        assert report.phiSkipped
        assert report.passed
        self.assertEqual([p.phiVectors for p in report.pieces], [[], []])
        self.assertNotIn("rho_in_lowest_phi_span", report.checks)

    def test_hypothesis_not_met_is_reported(self):
        g = build_algebra("A1xA1")
        f = invariant_generators(g)[0]
        report = principal.lemma_last_check(g, [f, f])
        self.assertEqual(report.status, principal.NOT_MET)
        self.assertEqual(report.killed, [])

    @unittest.skipUnless(SLOW, "set CLIFFHC_SLOW to run G2")
    def test_g2(self):
        report = principal.verify_main2(build_algebra("G2"))
        assert report.passed, report.checks
        self.assertEqual([p.exponent for p in report.pieces], [1, 5])

    @unittest.skipUnless(SLOW, "set CLIFFHC_SLOW to run D4")
    @patch('configuration.enableD4', True)
    def test_d4_reports_the_doubled_piece(self):
        report = principal.verify_main2(build_algebra("D4"))
        assert report.phiSkipped
        self.assertEqual([(p.exponent, p.multiplicity) for p in report.pieces], [(1, 1), (3, 2), (5, 1)])


if __name__ == '__main__':
    unittest.main()
