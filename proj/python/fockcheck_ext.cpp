/*
   Copyright 2026 The fockcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Python bindings: exact coefficients as "p/q" strings, floating results as
// Python complex numbers, and the command-line driver.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fockcheck/cli.hpp"
#include "fockcheck/fock_core.hpp"
#include "fockcheck/identities.hpp"

namespace py = pybind11;
using namespace fockcheck;

namespace {

NumericContext make_context(unsigned truncation, unsigned precision) {
    NumericContext ctx;
    ctx.truncation = truncation;
    ctx.precision = precision;
    ctx.validate();
    return ctx;
}

BigComplex from_python(std::complex<double> z) { return {BigFloat(z.real()), BigFloat(z.imag())}; }

std::complex<double> to_python(const BigComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

std::tuple<int, std::string, std::string> run(const std::vector<std::string>& argv) {
    std::ostringstream out;
    std::ostringstream err;
    int code = 0;
    {
        py::gil_scoped_release release;
        code = run_command(argv, out, err);
    }
    return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Toeplitz semi-commutators on Fock-Sobolev spaces";

    py::register_exception<UsageError>(mod, "UsageError", PyExc_ValueError);
    py::register_exception<TruncationGuardError>(mod, "TruncationGuardError", PyExc_ArithmeticError);

    mod.def(
        "factorial_ratio", [](unsigned a, unsigned b) { return format_rational(factorial_ratio(a, b)); },
        py::arg("a"), py::arg("b"));
    mod.def(
        "kernel_coeff", [](unsigned m, unsigned k) { return format_rational(kernel_coeff(m, k)); }, py::arg("m"),
        py::arg("k"));
    mod.def(
        "kernel_eval",
        [](unsigned m, std::complex<double> x, unsigned truncation, unsigned precision) {
            const NumericContext ctx = make_context(truncation, precision);
            PrecisionScope scope(ctx.bits());
            return to_python(kernel_eval(m, from_python(x), ctx));
        },
        py::arg("m"), py::arg("x"), py::arg("truncation") = 40, py::arg("precision") = 60);
    mod.def(
        "theta",
        [](unsigned j, unsigned l, unsigned m) {
            const ThetaValues t = theta(j, l, m);
            return std::make_tuple(format_rational(t.definitional), format_rational(t.closed));
        },
        py::arg("j"), py::arg("l"), py::arg("m"));
    mod.def(
        "xi_coeffs",
        [](unsigned j, unsigned l, unsigned m) {
            std::vector<std::string> out;
            for (const Rational& c : xi_coeffs(j, l, m).C) out.push_back(format_rational(c));
            return out;
        },
        py::arg("j"), py::arg("l"), py::arg("m"));
    mod.def(
        "q_coefficient",
        [](unsigned j, unsigned l, unsigned m, unsigned k) { return format_rational(q_coefficient(j, l, m, k)); },
        py::arg("j"), py::arg("l"), py::arg("m"), py::arg("k"));
    mod.def(
        "exp_obstruction",
        [](unsigned m, unsigned precision) {
            const NumericContext ctx = make_context(40, precision);
            PrecisionScope scope(ctx.bits());
            const ObstructionCertificate c = exp_obstruction(m, ctx);
            py::dict d;
            d["m"] = c.m;
            d["x_required"] = format_rational(c.x_required);
            d["exp_required"] = format_rational(c.exp_required);
            d["gap"] = c.gap.to_string(precision);
            d["eliminated"] = c.eliminated;
            d["system_satisfied"] = c.system_satisfied;
            return d;
        },
        py::arg("m"), py::arg("precision") = 60);
    mod.def("run", &run, py::arg("argv"),
            "Runs the command-line driver on argv (without the program name); returns (exit code, stdout, stderr).");
}
