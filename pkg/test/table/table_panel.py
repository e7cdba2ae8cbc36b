import unittest
import numpy as np
from almostprime.table.panel import (
    steps_per_unit,
    subinterval_weights,
    integrate_panels,
    panel_interpolant,
)
from almostprime.util.errors import DomainError


class TestStepsPerUnit(unittest.TestCase):
    def test_divisor_steps(self):
        for n in [1, 4, 64, 256]:
            with self.subTest(n=n):
                self.assertEqual(steps_per_unit(1.0 / n), n)

    def test_non_divisor(self):
        with self.assertRaises(DomainError):
            steps_per_unit(0.3)

    def test_non_positive(self):
        for step in [0.0, -1.0 / 64]:
            with self.subTest(step=step):
                with self.assertRaises(DomainError):
                    steps_per_unit(step)


class TestSubintervalWeights(unittest.TestCase):
    def setUp(self):
        self.n = 16
        self.step = 1.0 / self.n
        self.x = np.arange(self.n + 1) * self.step

    def test_shape(self):
        W = subinterval_weights(self.n, self.step)
        self.assertEqual(W.shape, (self.n, self.n + 1))

    def test_polynomials_exact(self):
        W = subinterval_weights(self.n, self.step)
        for degree in range(6):
            with self.subTest(degree=degree):
                pieces = W @ self.x ** degree
                exact = np.diff(self.x ** (degree + 1)) / (degree + 1)
                self.assertTrue(np.allclose(pieces, exact, atol=1e-14))

    def test_weights_sum_to_step(self):
        W = subinterval_weights(self.n, self.step)
        self.assertTrue(np.allclose(W.sum(axis=1), self.step))


class TestIntegratePanels(unittest.TestCase):
    def test_exponential(self):
        step = 1.0 / 64
        x = np.arange(3 * 64 + 1) * step
        self.assertAlmostEqual(integrate_panels(np.exp(-x), step), 1 - np.exp(-3.0), places=12)

    def test_kink_at_integer(self):
        step = 1.0 / 32
        x = np.arange(2 * 32 + 1) * step
        self.assertAlmostEqual(integrate_panels(np.abs(x - 1.0), step), 1.0, places=13)


class TestPanelInterpolant(unittest.TestCase):
    def test_reproduces_cubic(self):
        n = 8
        grid = np.arange(3 * n + 1) / n
        values = grid ** 3 - 2 * grid
        interp = panel_interpolant(grid, values, n)
        t = np.linspace(0, 3, 97)
        self.assertTrue(np.allclose(interp(t), t ** 3 - 2 * t, atol=1e-12))

    def test_no_extrapolation(self):
        n = 4
        grid = np.arange(n + 1) / n
        interp = panel_interpolant(grid, grid, n)
        self.assertTrue(np.isnan(interp(1.5)))


if __name__ == "__main__":
    unittest.main()
