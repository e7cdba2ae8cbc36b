import unittest
import numpy as np
import sympy
from almostprime.empirical.counting import (
    count_chen_triples,
    chen_primes,
    density_report,
    density_csv,
)
from almostprime.util.errors import DomainError


class TestCountChenTriples(unittest.TestCase):
    def test_small(self):
        tc = count_chen_triples(20, 3)
        self.assertEqual(tc.count_chen, 8)

    def test_exact_triples(self):
        # p = 5, 11, 17, 41
        self.assertEqual(count_chen_triples(100, 1).count_exact, 4)

    def test_monotone(self):
        counts = [count_chen_triples(10 ** 4, r).count_chen for r in (1, 2, 5, 76)]
        self.assertEqual(counts, sorted(counts))
        self.assertLess(
            count_chen_triples(10 ** 3, 2).count_chen, count_chen_triples(10 ** 4, 2).count_chen
        )

    def test_against_sympy(self):
        primes = chen_primes(50000, 4)
        rng = np.random.default_rng(0)
        for p in rng.choice(primes, size=min(1000, primes.size), replace=False):
            p = int(p)
            self.assertTrue(sympy.isprime(p))
            self.assertLessEqual(sympy.primeomega(p + 2), 2)
            self.assertLessEqual(sympy.primeomega(p + 6), 4)

    def test_segmented_stream(self):
        from almostprime.empirical.counting import _counted_primes

        a = _counted_primes(30000, 3)
        b = _counted_primes(30000, 3, segment=4096)
        for x, y in zip(a, b):
            self.assertTrue(np.array_equal(x, y))

    def test_domain(self):
        with self.assertRaises(DomainError):
            count_chen_triples(5, 2)
        with self.assertRaises(DomainError):
            count_chen_triples(100, 0)


class TestDensityReport(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.df = density_report([10 ** 5, 10 ** 6, 10 ** 7], 76)

    def test_large_limit(self):
        row = self.df.iloc[-1]
        self.assertGreater(row["exact"], 0)
        self.assertGreater(row["chen"], row["exact"])
        self.assertGreaterEqual(row["ratio_li"], 0.8)
        self.assertLessEqual(row["ratio_li"], 1.2)
        self.assertGreater(row["ratio"], 1.0)

    def test_consistent_with_count(self):
        tc = count_chen_triples(10 ** 5, 76)
        self.assertEqual(self.df.iloc[0]["chen"], tc.count_chen)
        self.assertEqual(self.df.iloc[0]["exact"], tc.count_exact)

    def test_chen_count_grows_with_r(self):
        narrow = count_chen_triples(10 ** 7, 2).count_chen
        self.assertGreater(narrow, 0)
        self.assertLess(narrow, self.df.iloc[-1]["chen"])

    def test_middle_row(self):
        row = self.df.iloc[1]
        self.assertEqual(row["x"], 10 ** 6)
        self.assertGreater(row["ratio"], 0.0)
        self.assertLess(row["ratio"], 2.0)

    def test_csv(self):
        header = density_csv(self.df).splitlines()[0]
        self.assertEqual(header, "x,exact,chen,prediction,ratio")

    def test_unreliable(self):
        with self.assertLogs("almostprime.empirical.counting", level="WARNING"):
            df = density_report([50, 1000], 2)
        self.assertEqual(df["reliable"].tolist(), [False, True])

    def test_not_increasing(self):
        with self.assertRaises(DomainError):
            density_report([1000, 1000], 2)


if __name__ == "__main__":
    unittest.main()
