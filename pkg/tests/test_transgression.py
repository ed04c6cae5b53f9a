import json
import os
import unittest
from fractions import Fraction

import transgression
from errors import DegreeError
from exterior import Multivector
from lie_core import build_algebra
from support import format_fraction
from symmetric import invariant_generators, symmetric_ring

F, H, E = 0, 1, 2

here = os.path.dirname(os.path.abspath(__file__))


def expected(name):
    with open(os.path.join(here, "data", "a1_expected.json"), encoding="utf-8") as f:
        return json.load(f)[name]


class A1TransgressionTestCase(unittest.TestCase):
    def setUp(self):
        self.g = build_algebra("A1")
        self.P = transgression.primitive_basis(self.g)
        self.p = Multivector.blade(3, [E, F, H])

    def test_primitive_element(self):
        self.assertEqual(self.P.rank, 1)
        self.assertEqual(self.P.elements[0], self.p)
        self.assertEqual(list(self.P.exponents), expected("exponents"))

    def test_transgression_of_the_generator(self):
        f = invariant_generators(self.g)[0]
        self.assertEqual(transgression.transgress(self.g, f), self.p)
        assert transgression.contraction_identity(self.g, f, H)
        assert transgression.contraction_identity(self.g, f, E)
        with self.assertRaises(DegreeError):
            transgression.transgress(self.g, f, 2)

    def test_s_map(self):
        y, h, x = symmetric_ring(self.g).gens
        self.assertEqual(transgression.s_map(self.g, h), Multivector.blade(3, [E, F], 2))
        self.assertFalse(transgression.s_map(self.g, h * h))
        self.assertEqual(transgression.s_map(self.g, x), Multivector.blade(3, [H, E]))

    def test_alpha(self):
        self.assertEqual(transgression.alpha(self.p), -self.p)
        self.assertEqual(transgression.alpha(Multivector.basis(3, E)), Multivector.basis(3, E))
        self.assertEqual(transgression.alpha(Multivector.blade(3, [E, F])), -Multivector.blade(3, [E, F]))

    def test_koszul_determinant(self):
        self.assertEqual(format_fraction(transgression.koszul_determinant(self.P)), expected("koszul"))

    def test_square(self):
        for hbar in (1, 2, Fraction(1, 2)):
            checks = transgression.clifford_square_check(self.P, hbar)
            assert all(check.passed for check in checks)
            self.assertEqual(checks[0].expected, 2 * Fraction(hbar) ** 3)
        self.assertEqual(format_fraction(transgression.clifford_square_check(self.P)[0].expected), expected("square"))
        self.assertEqual(transgression.square_scaling(self.P, 0, 2), 3)

    def test_wedge_respected(self):
        self.assertEqual(transgression.wedge_respected(self.P), [])

    def test_kernel_invariants(self):
        dims = {str(k): len(v) for k, v in transgression.kernel_invariants(self.g).items()}
        self.assertEqual(dims, expected("kernelDimensions"))

    def test_json(self):
        data = self.P.to_json()
        self.assertEqual(data["algebra"], "A1")
        self.assertEqual(data["exponents"], [1])
        self.assertEqual(data["gram"], [["2/1"]])


class A2TransgressionTestCase(unittest.TestCase):
    def setUp(self):
        self.g = build_algebra("A2")
        self.P = transgression.primitive_basis(self.g)

    def test_degrees(self):
        self.assertEqual([p.degree() for p in self.P.elements], [3, 5])

    def test_primitive_elements_anticommute(self):
        self.assertEqual(transgression.anticommute(self.P), [])
        self.assertEqual(transgression.anticommute(self.P, 3), [])

    def test_symmetrized_products(self):
        self.assertEqual(transgression.beta_matches_products(self.P), [])

    def test_invariant_algebra(self):
        products = transgression.invariant_algebra(self.P)
        self.assertEqual([I for I, _ in products], [(), (0,), (1,), (0, 1)])
        self.assertEqual(products[-1][1].degree(), 8)
        self.assertTrue(transgression.koszul_determinant(self.P))

    def test_square(self):
        assert all(check.passed for check in transgression.clifford_square_check(self.P, 1))


if __name__ == '__main__':
    unittest.main()
