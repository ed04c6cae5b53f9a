import os
import unittest
from fractions import Fraction
from unittest.mock import patch

import lie_core
from errors import StructureError, UnsupportedAlgebraError

SLOW = os.environ.get("CLIFFHC_SLOW")


class ParseTestCase(unittest.TestCase):
    def test_direct_sums(self):
        for text in ("A1xA1", "a1+A1", "A1 ⊕ A1"):
            t = lie_core.parse_cartan_type(text)
            self.assertEqual(t.factors, (("A", 1), ("A", 1)))
            self.assertEqual(str(t), "A1xA1")

    def test_unsupported(self):
        for text in ("Z9", "E6", "F4", "A5", "B1", "G3", ""):
            with self.assertRaises(UnsupportedAlgebraError):
                lie_core.parse_cartan_type(text)

    def test_form_choice(self):
        self.assertEqual(lie_core.normalize_form_choice("MinimalTrace"), "trace")
        self.assertEqual(lie_core.normalize_form_choice("Killing"), "killing")
        with self.assertRaises(UnsupportedAlgebraError):
            lie_core.normalize_form_choice("euclid")

    @patch('configuration.enableD4', False)
    def test_d4_is_gated(self):
        with self.assertRaises(UnsupportedAlgebraError):
            lie_core.build_algebra("D4")

    def test_dual_type(self):
        self.assertEqual(str(lie_core.parse_cartan_type("B3xG2").dual()), "C3xG2")


class A1TestCase(unittest.TestCase):
    def setUp(self):
        self.g = lie_core.build_algebra("A1", "trace")

    def test_basis(self):
        g = self.g
        self.assertEqual(g.labels, ("y1", "h1", "x1"))
        self.assertEqual((g.y(0), g.h(0), g.x(0)), (0, 1, 2))
        self.assertEqual(g.role(2), ("x", 0))
        self.assertEqual(g.exponents, (1,))

    def test_brackets(self):
        g = self.g
        self.assertEqual(dict(g.bracket(g.x(0), g.y(0))), {g.h(0): 1})
        self.assertEqual(dict(g.bracket(g.h(0), g.x(0))), {g.x(0): 2})
        self.assertEqual(dict(g.bracket(g.h(0), g.y(0))), {g.y(0): -2})

    def test_trace_form(self):
        g = self.g
        self.assertEqual(g.form[g.x(0)][g.y(0)], 1)
        self.assertEqual(g.form_h, [[2]])
        self.assertEqual(g.root_vector(0), [1])
        self.assertEqual(g.simple_root_lengths, (2,))

    def test_killing_form_keeps_dual_pairs(self):
        g = lie_core.build_algebra("A1", "killing")
        self.assertEqual(g.form[g.x(0)][g.y(0)], 1)
        self.assertEqual(g.form_h, [[8]])
        self.assertEqual(g.root_vector(0), [Fraction(1, 4)])

    def test_rho(self):
        rho, rho_check = lie_core.rho_and_rho_check(self.g)
        self.assertEqual(rho, [Fraction(1, 2)])
        self.assertEqual(rho_check, [Fraction(1, 2)])

    def test_rho_differs_from_rho_check_off_the_simply_laced_case(self):
        rho, rho_check = lie_core.rho_and_rho_check(lie_core.build_algebra("B2"))
        self.assertNotEqual(rho, rho_check)

    def test_dual_bases(self):
        basis, dual = lie_core.dual_bases(self.g)
        self.assertEqual(dual[self.g.h(0)], [0, Fraction(1, 2), 0])
        self.assertEqual(dual[self.g.x(0)], [1, 0, 0])

    def test_weights(self):
        self.assertEqual(lie_core.weight_of_mask(self.g, 0b101), (0,))
        self.assertEqual(lie_core.weight_of_mask(self.g, 0b110), (1,))
        self.assertEqual(lie_core.weight_of_mask(self.g, 0b001), (-1,))


class StructureTestCase(unittest.TestCase):
    def test_dimensions_and_exponents(self):
        cases = {"A2": (8, (1, 2)), "B2": (10, (1, 3)), "C2": (10, (1, 3)), "A3": (15, (1, 2, 3)),
                 "A1xA1": (6, (1, 1)), "B3": (21, (1, 3, 5))}
        for name, (dim, exponents) in cases.items():
            g = lie_core.build_algebra(name)
            self.assertEqual(g.dim, dim, name)
            self.assertEqual(g.exponents, exponents, name)

    def test_identities(self):
        for name in ("A2", "B2", "C2", "A1xA1"):
            for form in ("trace", "killing"):
                g = lie_core.build_algebra(name, form)
                self.assertEqual(lie_core.jacobi_violations(g), [], name)
                self.assertEqual(lie_core.antisymmetry_violations(g), [], name)
                self.assertEqual(lie_core.invariance_violations(g), [], name)

    def test_long_roots_have_length_two(self):
        g = lie_core.build_algebra("B2", "trace")
        self.assertEqual(sorted(g.simple_root_lengths), [1, 2])
        self.assertEqual(sorted(lie_core.build_algebra("C2", "trace").simple_root_lengths), [1, 2])
        self.assertEqual(list(lie_core.build_algebra("A1xA1", "trace").simple_root_lengths), [2, 2])

    def test_cartan_matrix_convention(self):
        g = lie_core.build_algebra("B2")
        self.assertEqual([list(r) for r in g.cartan], [[2, -1], [-2, 2]])

    def test_exponents_from_heights(self):
        roots = [(1, 0), (0, 1), (1, 1), (1, 2)]
        self.assertEqual(lie_core.exponents_from_heights(roots), (1, 3))

    def test_langlands_dual(self):
        g = lie_core.build_algebra("B2")
        gd = lie_core.langlands_dual(g)
        self.assertEqual(str(gd.cartanType), "C2")
        self.assertEqual([list(r) for r in gd.cartan], [list(c) for c in zip(*g.cartan)])

    def test_weyl_group_orders(self):
        for name, order in (("A1", 2), ("A2", 6), ("B2", 8), ("A1xA1", 4)):
            self.assertEqual(len(lie_core.weyl_group(lie_core.build_algebra(name)).elements()), order, name)

    @unittest.skipUnless(SLOW, "set CLIFFHC_SLOW to run G2")
    def test_g2(self):
        g = lie_core.build_algebra("G2")
        self.assertEqual(g.dim, 14)
        self.assertEqual(g.exponents, (1, 5))
        self.assertEqual(lie_core.jacobi_violations(g), [])
        self.assertEqual(len(lie_core.weyl_group(g).elements()), 12)


class JsonTestCase(unittest.TestCase):
    def test_document_is_stable(self):
        g = lie_core.build_algebra("B2", "killing")
        text = lie_core.to_json(g)
        again = lie_core.from_json(text)
        self.assertEqual(lie_core.to_json(again), text)
        self.assertEqual(again.exponents, g.exponents)
        self.assertEqual(again.form, g.form)

    def test_corrupt_document(self):
        with self.assertRaises(StructureError):
            lie_core.from_json("{}")
        with self.assertRaises(StructureError):
            lie_core.from_json("not json")


if __name__ == '__main__':
    unittest.main()
