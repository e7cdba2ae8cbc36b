import argparse
import contextlib
import io
import json
import math
import shutil
import tempfile
import unittest
import numpy as np
from almostprime.cli import main, fraction, build_parser
from almostprime.golden import R_CERTIFIED, R_VALUE


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestFraction(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(fraction("1/410"), 1 / 410)
        self.assertEqual(fraction("0.0145"), 0.0145)
        self.assertEqual(fraction("3"), 3.0)

    def test_reject(self):
        for text in ["abc", "1/0"]:
            with self.subTest(text=text):
                with self.assertRaises(argparse.ArgumentTypeError):
                    fraction(text)

    def test_defaults(self):
        args = build_parser().parse_args(["bound"])
        self.assertEqual(args.theta2, 1 / 410)
        self.assertEqual(args.r, 76)


class TestCommands(unittest.TestCase):
    def test_rho(self):
        code, out, _ = _run("rho", "--s", "1")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {"s": 1.0, "rho": 1.0})

    def test_bigB(self):
        code, out, _ = _run("bigB", "--s1", "1", "--s2", "1")
        self.assertEqual(code, 0)
        B = json.loads(out)["B"]
        self.assertAlmostEqual(B, 2 * math.exp(2 * np.euler_gamma), delta=1e-8)

    def test_hlconst(self):
        code, out, _ = _run("hlconst", "--plimit", "100000")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(json.loads(out)["C"], 2.8582486, delta=1e-3)

    def test_count(self):
        code, out, _ = _run("count", "--x", "100", "--r", "2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["exact"], 4)

    def test_density_csv(self):
        code, out, _ = _run("density", "--x", "1000", "10000", "--r", "2", "--output", "csv")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "x,exact,chen,prediction,ratio")
        self.assertEqual(len(lines), 3)

    def test_vscheck(self):
        code, out, _ = _run("vscheck", "--z", "10", "--trials", "1000")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertTrue(doc["passed"])
        self.assertEqual(doc["seed"], 42)

    def test_bound_deterministic(self):
        cache = tempfile.mkdtemp()
        try:
            first = _run("bound", "--cache-dir", cache)
            second = _run("bound", "--cache-dir", cache)
        finally:
            shutil.rmtree(cache, ignore_errors=True)
        self.assertEqual(first[0], 0)
        self.assertEqual(first[1], second[1])
        doc = json.loads(first[1])
        self.assertEqual(doc["r"], R_CERTIFIED)
        self.assertEqual(doc["r_tabulated"], R_VALUE)

    def test_bound_narrow_theta2(self):
        code, out, _ = _run("bound", "--theta2", "1/800")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertIsNone(doc["r_tabulated"])
        self.assertEqual(doc["r_naive"], 800)

    def test_lambda(self):
        code, out, _ = _run("lambda")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["r"], R_CERTIFIED)
        self.assertGreater(doc["lambda_star"], 0.0)

    def test_search(self):
        code, out, _ = _run("search", "--budget", "1")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["r"], R_CERTIFIED)
        self.assertLess(doc["lambda"], doc["lambda_star"])

    def test_selftest(self):
        code, out, _ = _run("--selftest")
        self.assertEqual(code, 0)
        rows = json.loads(out)
        self.assertTrue(rows)
        self.assertTrue(all(row["passed"] for row in rows))

    def test_sievefn(self):
        code, out, _ = _run("sievefn", "--s", "2")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertAlmostEqual(doc["F"], math.exp(np.euler_gamma), places=8)
        self.assertAlmostEqual(doc["f"], 0.0, places=12)

    def test_plain_output(self):
        code, out, _ = _run("rho", "--s", "2", "--output", "plain")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("s: 2.0"))


class TestExitStatus(unittest.TestCase):
    def test_constraint_violation(self):
        code, out, err = _run("bound", "--theta1", "0.4")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("theta1 < 1/3", err)

    def test_missing_argument(self):
        code, _, err = _run("rho")
        self.assertEqual(code, 2)
        self.assertIn("--s", err)

    def test_unknown_flag(self):
        code, _, _ = _run("rho", "--frobnicate")
        self.assertEqual(code, 2)

    def test_no_command(self):
        code, _, _ = _run()
        self.assertEqual(code, 2)

    def test_count_single_limit(self):
        code, out, err = _run("count", "--x", "100", "1000")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("single --x", err)


if __name__ == "__main__":
    unittest.main()
