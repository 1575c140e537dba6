# Copyright 2026 The fockcheck Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import cmath
from fractions import Fraction
from math import factorial

import pytest

import fockcheck


def test_factorial_ratio_and_kernel_coeff():
    assert fockcheck.factorial_ratio(7, 3) == str(factorial(7) // factorial(3))
    for m in range(4):
        for k in range(8):
            expected = Fraction(factorial(m), factorial(k + m))
            assert Fraction(fockcheck.kernel_coeff(m, k)) == expected


def test_kernel_eval_matches_exponential_at_m0():
    for x in (0.5, -2 + 1j, 3j):
        assert abs(fockcheck.kernel_eval(0, x) - cmath.exp(x)) < 1e-12 * (1 + abs(cmath.exp(x)))


def test_kernel_eval_m1_closed_form():
    x = 1.5 - 0.5j
    assert abs(fockcheck.kernel_eval(1, x) - (cmath.exp(x) - 1) / x) < 1e-12


def test_theta_both_ways():
    for j in range(2, 6):
        for l in range(j, 7):
            for m in range(4):
                definitional, closed = fockcheck.theta(j, l, m)
                assert Fraction(definitional) == Fraction(closed) == Fraction(m * (j - 1) * (l - 1), m + 1)


def test_xi_coeffs_leading_term():
    coeffs = fockcheck.xi_coeffs(3, 4, 2)
    assert len(coeffs) == 4
    assert Fraction(coeffs[-1]) == 1


def test_q_coefficient_values():
    assert Fraction(fockcheck.q_coefficient(2, 2, 1, 1)) == Fraction(3, 2)
    assert Fraction(fockcheck.q_coefficient(2, 3, 1, 1)) == 4


def test_exp_obstruction():
    cert = fockcheck.exp_obstruction(2)
    assert Fraction(cert["x_required"]) == -3
    assert Fraction(cert["exp_required"]) == -2
    assert cert["system_satisfied"]
    assert abs(float(cert["gap"]) - (cmath.exp(-3).real + 2)) < 1e-12


def test_cli_kernel_report():
    code, report = fockcheck.run_json("kernel", "--m", "1", "--x", "1,0")
    assert code == 0
    assert report["command"]["name"] == "kernel"
    assert all(check["pass"] for check in report["checks"])


def test_cli_usage_error():
    code, _, err = fockcheck.run(["kernel", "--m", "-1", "--x", "1,0"])
    assert code == 1
    assert err


def test_invalid_precision_raises():
    with pytest.raises(ValueError):
        fockcheck.kernel_eval(0, 1.0, precision=0)
