import unittest
from almostprime.bound.engine import BoundTables, evaluate_H
from almostprime.bound.params import REFERENCE_PARAMS, SieveParams
from almostprime.golden import R_CERTIFIED
from almostprime.bound.search import parameter_search, SEARCH_DIMS
from almostprime.util.errors import DomainError, InfeasibleError


def _box(width=0.0, **overrides):
    centre = dict(zip(SEARCH_DIMS, map(float, REFERENCE_PARAMS[:3])))
    bounds = {k: (v * (1 - width), v * (1 + width)) for k, v in centre.items()}
    bounds.update(overrides)
    return bounds


class TestParameterSearch(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tables = BoundTables.build()

    def test_fixed_point(self):
        params, report, points = parameter_search(_box(), 1, self.tables)
        self.assertEqual(report.r, R_CERTIFIED)
        self.assertEqual(len(points), 1)
        self.assertLess(params.lam, report.lambda_star)
        self.assertAlmostEqual(params.theta2, float(REFERENCE_PARAMS[1]), places=15)

    def test_unit_budget_evaluates_centre(self):
        params, report, points = parameter_search(_box(0.2), 1, self.tables)
        self.assertEqual(len(points), 1)
        self.assertAlmostEqual(params.theta1, float(REFERENCE_PARAMS[0]), places=12)
        self.assertEqual(report.r, R_CERTIFIED)

    def test_widened_theta2(self):
        t2 = float(REFERENCE_PARAMS[1])
        bounds = _box(theta2=(0.8 * t2, 1.2 * t2))
        params, report, points = parameter_search(bounds, 3, self.tables)
        self.assertEqual(len(points), 3)
        centre = evaluate_H(SieveParams.reference(lam=False), self.tables)
        self.assertLessEqual(report.r, centre.r)
        self.assertEqual(list(points.columns), ["theta1", "theta2", "theta", "feasible", "r", "lambda_star"])

    def test_budget(self):
        with self.assertRaises(DomainError):
            parameter_search(_box(), 0, self.tables)

    def test_empty_range(self):
        with self.assertRaises(DomainError):
            parameter_search(_box(theta=(0.04, 0.03)), 1, self.tables)

    def test_infeasible_box(self):
        with self.assertRaises(InfeasibleError):
            parameter_search(
                {"theta1": (0.011, 0.011), "theta2": (0.01, 0.01), "theta": (0.1, 0.1)},
                1,
                self.tables,
            )


if __name__ == "__main__":
    unittest.main()
