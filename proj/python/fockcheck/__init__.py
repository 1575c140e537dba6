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

"""Toeplitz semi-commutators on Fock-Sobolev spaces."""

import json

from fockcheck._core import (
    TruncationGuardError,
    UsageError,
    exp_obstruction,
    factorial_ratio,
    kernel_coeff,
    kernel_eval,
    q_coefficient,
    run,
    theta,
    xi_coeffs,
)


def run_json(*args):
    """Runs a subcommand with JSON output; returns (exit code, report)."""
    code, out, err = run([*args, "--format", "json", "--no-timing"])
    return code, (json.loads(out) if out.strip() else {"error": err})


__all__ = [
    "TruncationGuardError",
    "UsageError",
    "exp_obstruction",
    "factorial_ratio",
    "kernel_coeff",
    "kernel_eval",
    "q_coefficient",
    "run",
    "run_json",
    "theta",
    "xi_coeffs",
]
