import math
import unittest
import numpy as np
import scipy.integrate
from almostprime.table.dickman import (
    build_rho_table,
    rho,
    rho_integral,
    rho_moment_checks,
    rho_factorial_bound_check,
    RHO_TOLERANCE,
)
from almostprime.util.errors import DomainError

EXP_GAMMA = math.exp(np.euler_gamma)


class TestBuildRhoTable(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = build_rho_table()

    def test_error_bound(self):
        self.assertLessEqual(self.table.err_bound, RHO_TOLERANCE)

    def test_read_only(self):
        with self.assertRaises(ValueError):
            self.table.values[10] = 0.5

    def test_positive(self):
        upto = 100 * self.table.n
        self.assertTrue((self.table.values[: upto + 1] > 0).all())

    def test_non_increasing(self):
        tail = self.table.values[self.table.n :]
        self.assertTrue((np.diff(tail) <= 0).all())

    def test_unit_interval(self):
        head = self.table.values[: self.table.n + 1]
        self.assertTrue((head == 1.0).all())

    def test_delay_equation_residual(self):
        # rho(s) = rho(k) - int_k^s rho(t - 1)/t dt on [k, k + 1]
        t = self.table
        for k in [2, 5, 8]:
            with self.subTest(k=k):
                s = k + 0.5
                u = np.linspace(k, s, 2001)
                integrand = rho(t, u - 1) / u
                integral = scipy.integrate.trapezoid(integrand, u)
                self.assertAlmostEqual(rho(t, s), rho(t, float(k)) - integral, places=7)

    def test_halving_step(self):
        coarse = build_rho_table(s_max=20, step=1.0 / 128)
        fine = build_rho_table(s_max=20, step=1.0 / 256)
        diff = np.abs(coarse.values - fine.values[::2]).max()
        self.assertLess(diff, coarse.err_bound)

    def test_bad_step(self):
        for step in [0.0, -0.01, 1.0 / 32]:
            with self.subTest(step=step):
                with self.assertRaises(DomainError):
                    build_rho_table(s_max=10, step=step)

    def test_bad_s_max(self):
        with self.assertRaises(DomainError):
            build_rho_table(s_max=3.5)


class TestRho(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = build_rho_table()

    def test_trivial_values(self):
        for s, expect in [(-1.0, 0.0), (0.0, 0.0), (0.5, 1.0), (1.0, 1.0)]:
            with self.subTest(s=s):
                self.assertEqual(rho(self.table, s), expect)

    def test_closed_form_on_second_panel(self):
        self.assertAlmostEqual(rho(self.table, 2.0), 1 - math.log(2), delta=1e-10)
        for s in [1.25, 1.5, 1.9]:
            with self.subTest(s=s):
                self.assertAlmostEqual(rho(self.table, s), 1 - math.log(s), delta=1e-10)

    def test_known_values(self):
        self.assertAlmostEqual(rho(self.table, 2.5), 0.1303195618, delta=1e-9)
        self.assertAlmostEqual(rho(self.table, 3.0), 0.0486083883, delta=1e-9)

    def test_beyond_table(self):
        self.assertEqual(rho(self.table, 300.0), 0.0)

    def test_array_input(self):
        s = np.array([-1.0, 0.5, 2.0])
        out = rho(self.table, s)
        self.assertEqual(out.shape, s.shape)
        self.assertEqual(out[0], 0.0)
        self.assertEqual(out[1], 1.0)

    def test_continuity_at_integers(self):
        for k in range(2, 30):
            with self.subTest(k=k):
                left = rho(self.table, k - 1e-14)
                right = rho(self.table, float(k))
                self.assertLess(abs(left - right), self.table.err_bound)

    def test_factorial_bound(self):
        self.assertEqual(rho_factorial_bound_check(self.table, n_max=20), [])

    def test_factorial_bound_clamped(self):
        short = build_rho_table(s_max=20, step=1.0 / 128)
        self.assertEqual(rho_factorial_bound_check(short, n_max=100), [])


class TestRhoIntegrals(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.table = build_rho_table()

    def test_moments(self):
        m0, m1 = rho_moment_checks(self.table)
        self.assertAlmostEqual(m0, EXP_GAMMA, delta=1e-8)
        self.assertAlmostEqual(m1, EXP_GAMMA, delta=1e-8)

    def test_truncation(self):
        m40 = rho_moment_checks(self.table, upto=40)
        m60 = rho_moment_checks(self.table, upto=60)
        for a, b in zip(m40, m60):
            self.assertLess(abs(a - b), 1e-12)

    def test_moments_need_long_table(self):
        with self.assertRaises(DomainError):
            rho_moment_checks(build_rho_table(s_max=20, step=1.0 / 64))

    def test_antiderivative(self):
        self.assertEqual(rho_integral(self.table, 0.5), 0.5)
        # int_1^2 (1 - log t) dt = 2 - 2 log 2
        self.assertAlmostEqual(rho_integral(self.table, 2.0), 3 - 2 * math.log(2), delta=1e-10)
        self.assertAlmostEqual(rho_integral(self.table, 250.0), EXP_GAMMA, delta=1e-8)
        self.assertEqual(rho_integral(self.table, -1.0), 0.0)


if __name__ == "__main__":
    unittest.main()
