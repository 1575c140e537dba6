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

// Factorials, the reproducing kernel of F^{2,m} and monomial inner products.

#ifndef FOCKCHECK_FOCK_CORE_HPP
#define FOCKCHECK_FOCK_CORE_HPP

#include "fockcheck/numeric.hpp"

namespace fockcheck {

/// n! from a shared, lazily grown cache. References stay valid for the
/// lifetime of the process.
const BigInt& factorial(unsigned n);

/// a!/b! exactly.
Rational factorial_ratio(unsigned a, unsigned b);

/// Taylor polynomial of exp of order m-1: sum_{k<m} x^k/k!, with q_0 = 0.
template <Scalar C>
C q_m_eval(unsigned m, const C& x) {
    C sum;
    C term = from_rational<C>(Rational(1));
    for (unsigned k = 0; k < m; ++k) {
        if (k > 0) term = term * x / from_rational<C>(Rational(k));
        sum += term;
    }
    return sum;
}

/// m!/(k+m)!, the k-th Taylor coefficient of the kernel in x = z conj(w).
Rational kernel_coeff(unsigned m, unsigned k);

/// K_m as a function of x = z conj(w). Uses the closed form
/// m!(e^x - q_m(x))/x^m for |x| >= 1/2 and the power series below that.
/// The result carries ctx.precision digits.
BigComplex kernel_eval(unsigned m, const BigComplex& x, const NumericContext& ctx);
BigComplex kernel_eval_series(unsigned m, const BigComplex& x, const NumericContext& ctx);
BigComplex kernel_eval_closed(unsigned m, const BigComplex& x, const NumericContext& ctx);

/// Upper bound on sum_{k>n} m! r^k/(k+m)!.
long double kernel_series_tail_bound(unsigned m, long double r, unsigned n);

/// ||z^k||_m^2 = (k+m)!/m!.
Rational monomial_norm_sq(unsigned m, unsigned k);

/// <z^a, z^b>_m evaluated from the radial moment recurrence, without the
/// factorial cache.
Rational weighted_monomial_integral(unsigned m, unsigned a, unsigned b);

}  // namespace fockcheck

#endif  // FOCKCHECK_FOCK_CORE_HPP
