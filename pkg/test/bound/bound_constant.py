import unittest
from almostprime.bound.constant import hl_constant_C, _euler_product, HL_MIN_PLIMIT
from almostprime.util.errors import DomainError


class TestHardyLittlewoodConstant(unittest.TestCase):
    def test_value(self):
        C, half = hl_constant_C()
        self.assertAlmostEqual(C, 2.8582486, delta=5e-4)
        self.assertLess(half, 1e-6)

    def test_first_factor(self):
        # 9/2 * (1 - 14/64)
        self.assertAlmostEqual(_euler_product(5), 3.515625, places=12)

    def test_enclosures_nest(self):
        c1, h1 = hl_constant_C(10 ** 5)
        c2, h2 = hl_constant_C(2 * 10 ** 5)
        self.assertLess(h2, h1)
        self.assertLessEqual(abs(c1 - c2), h1 + h2)

    def test_truncated_product_decreases(self):
        self.assertGreater(_euler_product(10 ** 3), _euler_product(10 ** 4))

    def test_limit(self):
        with self.assertRaises(DomainError):
            hl_constant_C(HL_MIN_PLIMIT - 1)


if __name__ == "__main__":
    unittest.main()
