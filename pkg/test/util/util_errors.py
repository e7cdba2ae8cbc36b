import unittest
from almostprime.util.errors import (
    BracketingError,
    CacheError,
    DomainError,
    InfeasibleError,
    SegmentBudgetError,
)


class TestErrors(unittest.TestCase):
    def test_hierarchy(self):
        for cls in [InfeasibleError, BracketingError, SegmentBudgetError]:
            with self.subTest(cls=cls):
                self.assertTrue(issubclass(cls, DomainError))
        self.assertTrue(issubclass(DomainError, ValueError))
        self.assertFalse(issubclass(CacheError, DomainError))

    def test_bracketing_value(self):
        err = BracketingError(30, "upper coefficient negative")
        self.assertEqual(err.value, 30)
        self.assertTrue(str(err).endswith("(at n=30)"))


if __name__ == "__main__":
    unittest.main()
