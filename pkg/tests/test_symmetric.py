import unittest
from fractions import Fraction

from sympy.polys.domains import QQ

import linalg
import symmetric
from errors import DegreeError, GeneratorError
from lie_core import build_algebra, rho_and_rho_check


class A1SymmetricTestCase(unittest.TestCase):
    def setUp(self):
        self.g = build_algebra("A1")
        self.ring = symmetric.symmetric_ring(self.g)
        self.y, self.h, self.x = self.ring.gens

    def test_quadratic_generator(self):
        gens = symmetric.invariant_generators(self.g)
        self.assertEqual(len(gens), 1)
        self.assertEqual(gens[0], 2 * self.x * self.y + self.h ** 2 * QQ(1, 2))

    def test_invariance(self):
        f = symmetric.invariant_generators(self.g)[0]
        assert symmetric.is_invariant(self.g, f)
        assert not symmetric.is_invariant(self.g, self.x * self.y)

    def test_contraction(self):
        f = symmetric.invariant_generators(self.g)[0]
        self.assertEqual(symmetric.iota_s(self.g, self.g.h(0), f), 2 * self.h)
        self.assertEqual(symmetric.iota_s(self.g, self.g.x(0), f), 2 * self.x)
        self.assertEqual(symmetric.iota_s_power(self.g, self.g.h(0), f, 2), self.ring.one * 4)

    def test_degree(self):
        self.assertEqual(symmetric.degree_of(self.x * self.y * self.h), 3)
        with self.assertRaises(DegreeError):
            symmetric.degree_of(self.x * self.y + self.h)

    def test_chevalley_projection(self):
        f = symmetric.invariant_generators(self.g)[0]
        cartan = symmetric.cartan_ring(self.g)
        (h,) = cartan.gens
        projected = symmetric.chevalley_projection(self.g, f)
        self.assertEqual(projected, h ** 2 * QQ(1, 2))
        assert symmetric.weyl_invariant(self.g, projected)
        assert not symmetric.weyl_invariant(self.g, h)
        assert symmetric.jacobian_full_rank(self.g, [projected])

    def test_evaluate_at_rho(self):
        rho, _ = rho_and_rho_check(self.g)
        (h,) = symmetric.cartan_ring(self.g).gens
        self.assertEqual(symmetric.evaluate_at(self.g, h ** 2 * QQ(1, 2), rho), Fraction(1, 2))

    def test_vectors(self):
        v = symmetric.linear(self.g, [1, 0, 2])
        self.assertEqual(symmetric.to_vector(self.g, v), [1, 0, 2])
        self.assertEqual(symmetric.to_cartan_vector(self.g, symmetric.linear(self.g, [0, 3, 0])), [3])
        with self.assertRaises(DegreeError):
            symmetric.to_vector(self.g, self.h ** 2)

    def test_json(self):
        f = symmetric.invariant_generators(self.g)[0]
        data = symmetric.poly_to_json(f)
        self.assertEqual(symmetric.poly_from_json(self.ring, data), f)


class GeneratorDegreesTestCase(unittest.TestCase):
    def test_degrees(self):
        for name, degrees in (("A2", [2, 3]), ("B2", [2, 4]), ("C2", [2, 4]), ("A1xA1", [2, 2])):
            g = build_algebra(name)
            gens = symmetric.invariant_generators(g)
            self.assertEqual([symmetric.degree_of(f) for f in gens], degrees, name)
            for f in gens:
                assert symmetric.is_invariant(g, f), name

    def test_chevalley_images_are_independent(self):
        g = build_algebra("A2")
        images = [symmetric.chevalley_projection(g, f) for f in symmetric.invariant_generators(g)]
        for p in images:
            assert symmetric.weyl_invariant(g, p)
        assert symmetric.jacobian_full_rank(g, images)

    def test_repeated_polynomials_are_dependent(self):
        g = build_algebra("A1xA1")
        p = symmetric.chevalley_projection(g, symmetric.invariant_generators(g)[0])
        assert not symmetric.jacobian_full_rank(g, [p, p])

    def test_dynkin_generator_is_orthogonal_to_products(self):
        g = build_algebra("B2")
        quadratic, quartic = symmetric.dynkin_space(g)
        self.assertEqual(symmetric.polarization_pairing(g, quartic, quadratic ** 2), 0)
        assert symmetric.is_invariant(g, quartic)


class PrincipalGeneratorsTestCase(unittest.TestCase):
    def test_rho_vector(self):
        g = build_algebra("A1")
        (f,) = symmetric.principal_generators(g)
        self.assertEqual(f, symmetric.invariant_generators(g)[0])
        self.assertEqual(symmetric.rho_vector(g, f), [2])

    def test_b2_vectors_are_orthogonal(self):
        g = build_algebra("B2")
        quadratic, quartic = symmetric.principal_generators(g)
        seed = symmetric.invariant_generators(g)
        self.assertEqual(quadratic, seed[0])
        self.assertEqual((quartic - seed[1]) % quadratic ** 2, 0)
        assert symmetric.is_invariant(g, quartic)
        u, v = symmetric.rho_vector(g, quadratic), symmetric.rho_vector(g, quartic)
        assert any(u) and any(v)
        self.assertEqual(linalg.bilinear(g.form_h, u, v), 0)

    def test_fischer_orthogonal_quartic_is_not_rho_orthogonal(self):
        g = build_algebra("B2")
        quadratic, quartic = symmetric.dynkin_space(g)
        u, v = symmetric.rho_vector(g, quadratic), symmetric.rho_vector(g, quartic)
        self.assertNotEqual(linalg.bilinear(g.form_h, u, v), 0)
        self.assertNotEqual(quartic, symmetric.principal_generators(g)[1])

    def test_explicit_generators_keep_their_degrees(self):
        g = build_algebra("A1xA1")
        gens = symmetric.principal_generators(g, symmetric.invariant_generators(g))
        self.assertEqual([symmetric.degree_of(f) for f in gens], [2, 2])
        u, v = (symmetric.rho_vector(g, f) for f in gens)
        self.assertEqual(linalg.bilinear(g.form_h, u, v), 0)


class SeedGeneratorsTestCase(unittest.TestCase):
    def setUp(self):
        self.g = build_algebra("A1")
        self.ring = symmetric.symmetric_ring(self.g)

    def test_wrong_degree(self):
        y, h, x = self.ring.gens
        with self.assertRaises(GeneratorError):
            symmetric.seed_generators(self.g, [x * y * h])

    def test_not_invariant(self):
        y, h, x = self.ring.gens
        with self.assertRaises(GeneratorError):
            symmetric.seed_generators(self.g, [x * y])

    def test_accepts_the_computed_generators(self):
        gens = symmetric.invariant_generators(self.g)
        self.addCleanup(symmetric.seed_generators, self.g, gens)
        symmetric.seed_generators(self.g, [f * 3 for f in gens])
        self.assertEqual(symmetric.invariant_generators(self.g), [f * 3 for f in gens])


if __name__ == '__main__':
    unittest.main()
