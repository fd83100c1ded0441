import unittest
from fractions import Fraction

import numpy as np

from rankloci.core.util import binomial
from rankloci.core.util import product
from rankloci.core.util import fraction_to_int
from rankloci.core.util import object_array
from rankloci.core.util import immutable_filter
from rankloci.core.util import is_int

from rankloci.test.test_case import TestCase


class TestUnit(TestCase):

    def test_binomial_a(self) -> None:
        self.assertEqual(binomial(5, 2), 10)
        self.assertEqual(binomial(0, 0), 1)
        self.assertEqual(binomial(3, 4), 0)
        self.assertEqual(binomial(3, -1), 0)
        self.assertEqual(binomial(-1, -1), 0)

    def test_product_a(self) -> None:
        self.assertEqual(product((2, 3, 4)), 24)
        self.assertEqual(product(()), 1)
        self.assertEqual(product((Fraction(1, 2), 4)), 2)

    def test_fraction_to_int_a(self) -> None:
        self.assertEqual(fraction_to_int(Fraction(12, 4)), 3)
        with self.assertRaises(ArithmeticError):
            fraction_to_int(Fraction(1, 3))

    def test_object_array_a(self) -> None:
        a = object_array([2 ** 80, 1])
        self.assertEqual(a.dtype, np.dtype(object))
        self.assertFalse(a.flags.writeable)
        self.assertIsInstance(a[0], int)
        self.assertEqual(a[0], 2 ** 80)
        self.assertEqual(len(object_array(())), 0)

    def test_immutable_filter_a(self) -> None:
        a1 = np.arange(3)
        a2 = immutable_filter(a1)
        self.assertFalse(a2.flags.writeable)
        self.assertTrue(a1.flags.writeable)
        self.assertIs(immutable_filter(a2), a2)

    def test_is_int_a(self) -> None:
        self.assertTrue(is_int(3))
        self.assertTrue(is_int(np.int64(3)))
        self.assertFalse(is_int(True))
        self.assertFalse(is_int(3.0))


if __name__ == '__main__':
    unittest.main()
