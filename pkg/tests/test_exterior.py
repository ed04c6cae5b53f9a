import unittest
from fractions import Fraction

from errors import AmbientMismatchError, DegreeError
from exterior import Exterior, Multivector, weight_zero_masks
from lie_core import build_algebra


class MultivectorTestCase(unittest.TestCase):
    def test_wedge_signs(self):
        e0, e1 = Multivector.basis(3, 0), Multivector.basis(3, 1)
        self.assertEqual(e1.wedge(e0), -e0.wedge(e1))
        self.assertFalse(e0.wedge(e0))
        self.assertEqual(Multivector.blade(3, [2, 0, 1]), Multivector.blade(3, [0, 1, 2]))
        self.assertEqual(Multivector.blade(3, [1, 0, 2]), -Multivector.blade(3, [0, 1, 2]))

    def test_degrees(self):
        u = Multivector.blade(4, [0, 1]) + Multivector.scalar(4, 3)
        self.assertEqual(u.degrees(), [0, 2])
        self.assertEqual(u.grade(2), Multivector.blade(4, [0, 1]))
        self.assertFalse(u.is_homogeneous())
        self.assertEqual(u.parity(), 0)
        with self.assertRaises(DegreeError):
            u.degree()

    def test_ambient_mismatch(self):
        with self.assertRaises(AmbientMismatchError):
            Multivector.basis(3, 0) + Multivector.basis(4, 0)

    def test_json(self):
        u = Multivector.blade(3, [0, 2], Fraction(-1, 2))
        self.assertEqual(u.to_json(), {"dim": 3, "terms": [["0x5", "-1/2"]]})
        self.assertEqual(Multivector.from_json(u.to_json()), u)

    def test_to_vector(self):
        self.assertEqual(Multivector.vector([1, 0, 2]).to_vector(), [1, 0, 2])
        with self.assertRaises(DegreeError):
            Multivector.blade(3, [0, 1]).to_vector()


class A1ExteriorTestCase(unittest.TestCase):
    def setUp(self):
        self.g = build_algebra("A1")
        self.ext = Exterior.of_algebra(self.g)
        self.f, self.h, self.e = 0, 1, 2

    def blade(self, *indices):
        return Multivector.blade(3, indices)

    def test_vector_must_fill_the_ambient(self):
        self.assertEqual(self.ext.vector([1, 0, 2]), Multivector.vector([1, 0, 2]))
        self.assertEqual(self.ext.vector([0, 0, 0]), Multivector(3))
        with self.assertRaises(AmbientMismatchError):
            self.ext.vector([1, 2])
        with self.assertRaises(AmbientMismatchError):
            self.ext.vector([0, 0, 0, 1])

    def test_contraction(self):
        # ι(e) pairs with f, ι(h) with 2h
        self.assertEqual(self.ext.contract(self.e, self.blade(self.f)), Multivector.scalar(3))
        self.assertEqual(self.ext.contract(self.h, self.blade(self.h, self.e)), self.blade(self.e) * 2)
        self.assertEqual(self.ext.contract(self.e, self.blade(self.h, self.f)), -self.blade(self.h))

    def test_coboundary(self):
        self.assertEqual(self.ext.coboundary(self.h), self.blade(self.e, self.f) * 2)
        self.assertEqual(self.ext.coboundary(self.e), self.blade(self.h, self.e))
        self.assertEqual(self.ext.coboundary(self.f), self.blade(self.f, self.h))

    def test_coboundary_squares_to_zero(self):
        for blade in self.ext.all_blades():
            self.assertFalse(self.ext.coboundary_all(self.ext.coboundary_all(blade)))

    def test_extended_form(self):
        p = self.blade(self.e, self.f, self.h)
        self.assertEqual(self.ext.extended_form(p, p), -2)
        self.assertEqual(self.ext.extended_form(self.blade(self.e), self.blade(self.f)), 1)
        self.assertEqual(self.ext.extended_form(self.blade(self.e), self.blade(self.e, self.f)), 0)

    def test_top_degree_is_invariant(self):
        top = self.blade(self.f, self.h, self.e)
        for a in range(3):
            self.assertFalse(self.ext.theta(a, top))
        self.assertTrue(self.ext.theta(self.h, self.blade(self.e)))

    def test_kernel_of_cartan(self):
        self.assertTrue(self.ext.kernel_of_cartan(self.blade(self.e, self.f)))
        self.assertFalse(self.ext.kernel_of_cartan(self.blade(self.e)))

    def test_weight_zero_masks(self):
        self.assertEqual(weight_zero_masks(self.g, 2), [0b101])
        self.assertEqual(sorted(weight_zero_masks(self.g)), [0, 0b010, 0b101, 0b111])


class A2ExteriorTestCase(unittest.TestCase):
    def test_theta_is_a_derivation_of_the_wedge(self):
        g = build_algebra("A2")
        ext = Exterior.of_algebra(g)
        u = Multivector.blade(g.dim, [0, 3])
        v = Multivector.blade(g.dim, [5, 7])
        for a in (g.x(0), g.y(1), g.h(0)):
            left = ext.theta(a, u.wedge(v))
            right = ext.theta(a, u).wedge(v) + u.wedge(ext.theta(a, v))
            self.assertEqual(left, right)


if __name__ == '__main__':
    unittest.main()
