import unittest
from fractions import Fraction

import support
from errors import UsageError


class SupportTestCase(unittest.TestCase):
    def test_parse_fraction(self):
        self.assertEqual(support.parse_fraction("3/6"), Fraction(1, 2))
        self.assertEqual(support.parse_fraction(" -4 "), Fraction(-4))
        self.assertEqual(support.parse_fraction(7), Fraction(7))

    def test_parse_fraction_rejects_floats_and_zero_denominators(self):
        for bad in ("0.5", "1/0", "abc", ""):
            with self.assertRaises(UsageError):
                support.parse_fraction(bad)

    def test_format_fraction_always_has_a_denominator(self):
        assert support.format_fraction(2) == "2/1"
        assert support.format_fraction(Fraction(-3, 6)) == "-1/2"

    def test_parse_hbar_list(self):
        hbars = support.parse_hbar_list(["0,1", "2", "1/2", "1"])
        self.assertEqual(hbars, [Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2)])

    def test_empty_hbar_list(self):
        with self.assertRaises(UsageError):
            support.parse_hbar_list([" , "])

    def test_masks(self):
        self.assertEqual(support.mask_to_list(0b10110), [1, 2, 4])
        self.assertEqual(support.list_to_mask([4, 1, 2]), 0b10110)
        self.assertEqual(support.below(3), 0b111)

    def test_reorder_sign(self):
        # e1 ∧ e0 = -e0 ∧ e1
        self.assertEqual(support.reorder_sign(0b10, 0b01), -1)
        self.assertEqual(support.reorder_sign(0b01, 0b10), 1)
        # e1 e2 ∧ e0: two transpositions
        self.assertEqual(support.reorder_sign(0b110, 0b001), 1)


if __name__ == '__main__':
    unittest.main()
