import unittest
from fractions import Fraction

import linalg
from errors import StructureError


class LinalgTestCase(unittest.TestCase):
    def setUp(self):
        self.m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]

    def test_det_and_inverse(self):
        self.assertEqual(linalg.det(self.m), 1)
        self.assertEqual(linalg.inverse(self.m), [[1, -1], [-1, 2]])

    def test_singular_inverse(self):
        with self.assertRaises(StructureError):
            linalg.inverse([[1, 2], [2, 4]])

    def test_nullspace(self):
        kernel = linalg.nullspace([[1, 1, 0], [0, 0, 1]], 3)
        self.assertEqual(kernel, [[-1, 1, 0]])
        self.assertEqual(len(linalg.nullspace([], 2)), 2)

    def test_solve(self):
        self.assertEqual(linalg.solve(self.m, [3, 2]), [1, 1])
        with self.assertRaises(StructureError):
            linalg.solve([[1, 1], [1, 1]], [1, 2])

    def test_spans(self):
        a = [[1, 0, 1], [0, 1, 0]]
        b = [[1, 1, 1], [1, -1, 1]]
        assert linalg.same_span(a, b)
        assert linalg.in_span(a, [2, 3, 2])
        assert not linalg.in_span(a, [0, 0, 1])
        assert linalg.rank(a + b) == 2

    def test_proportionality(self):
        self.assertEqual(linalg.proportionality([2, 4], [1, 2]), 2)
        self.assertIsNone(linalg.proportionality([2, 3], [1, 2]))

    def test_bilinear(self):
        self.assertEqual(linalg.bilinear(self.m, [1, 0], [0, 1]), 1)
        self.assertEqual(linalg.bilinear(self.m, [1, 1], [1, 1]), 5)


if __name__ == '__main__':
    unittest.main()
