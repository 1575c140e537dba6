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

#include "fockcheck/fock_core.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>

namespace fockcheck {

namespace {

std::shared_mutex factorial_mutex;
std::deque<BigInt> factorial_table{BigInt(1)};

long double log2_magnitude(const BigComplex& x) {
    const BigFloat a = abs(x);
    if (a.is_zero()) return -std::numeric_limits<long double>::infinity();
    long exponent = 0;
    const double mant = mpfr_get_d_2exp(&exponent, a.raw(), MPFR_RNDN);
    return std::log2(static_cast<long double>(mant)) + static_cast<long double>(exponent);
}

}  // namespace

const BigInt& factorial(unsigned n) {
    {
        const std::shared_lock lock(factorial_mutex);
        if (n < factorial_table.size()) return factorial_table[n];
    }
    const std::unique_lock lock(factorial_mutex);
    while (factorial_table.size() <= n) {
        const auto k = static_cast<unsigned>(factorial_table.size());
        factorial_table.push_back(factorial_table.back() * k);
    }
    return factorial_table[n];
}

Rational factorial_ratio(unsigned a, unsigned b) { return Rational(factorial(a), factorial(b)); }

Rational kernel_coeff(unsigned m, unsigned k) { return factorial_ratio(m, k + m); }

Rational monomial_norm_sq(unsigned m, unsigned k) { return factorial_ratio(k + m, m); }

Rational weighted_monomial_integral(unsigned m, unsigned a, unsigned b) {
    if (a != b) return Rational(0);
    // I(n) = int_0^inf r^(2n+1) e^(-r^2) dr satisfies I(0) = 1/2, I(n) = n I(n-1).
    Rational moment(1, 2);
    Rational base;
    for (unsigned n = 1; n <= a + m; ++n) {
        moment *= n;
        if (n == m) base = moment;
    }
    if (m == 0) base = Rational(1, 2);
    return moment / base;
}

long double kernel_series_tail_bound(unsigned m, long double r, unsigned n) {
    if (r <= 0.0L) return 0.0L;
    const long double log_r = std::log(r);
    const long double log_mf = log_factorial(m);
    return tail_sum_bound([&](unsigned k) { return log_mf + k * log_r - log_factorial(k + m); }, n + 1);
}

BigComplex kernel_eval_series(unsigned m, const BigComplex& x, const NumericContext& ctx) {
    const long double r = magnitude(x);
    // Largest term is at most e^r; carry enough bits to absorb it.
    const auto extra = static_cast<mpfr_prec_t>(r * 1.4427L) + 8;
    BigComplex sum;
    {
        const PrecisionScope scope(ctx.bits() + extra);
        const long double target = std::pow(10.0L, -static_cast<long double>(ctx.precision)) / 4.0L;
        BigComplex term(BigFloat(1));
        sum = term;
        for (unsigned k = 1;; ++k) {
            term = term * x / BigFloat(k + m);
            sum += term;
            if (k + m + 1 >= 2.0L * r && magnitude(term) * r < target * (k + m + 1)) break;
        }
    }
    return rounded(sum, ctx.bits());
}

BigComplex kernel_eval_closed(unsigned m, const BigComplex& x, const NumericContext& ctx) {
    if (x.is_zero()) return BigComplex(BigFloat(1));
    const long double log2_r = log2_magnitude(x);
    const long double r = std::exp2(log2_r);
    // e^x - q_m(x) ~ x^m/m! near the origin: cancellation costs about
    // log2(m! e^r / r^m) bits.
    const long double loss = log_factorial(m) / std::log(2.0L) + r * 1.4427L - m * log2_r;
    const auto extra = static_cast<mpfr_prec_t>(std::max(0.0L, loss)) + kGuardBits;
    BigComplex value;
    {
        const PrecisionScope scope(ctx.bits() + extra);
        const BigComplex xx = rounded(x, ctx.bits() + extra);
        BigComplex numer = exp(xx) - q_m_eval(m, xx);
        numer *= BigFloat(factorial(m));
        value = numer / pow(xx, m);
    }
    return rounded(value, ctx.bits());
}

BigComplex kernel_eval(unsigned m, const BigComplex& x, const NumericContext& ctx) {
    if (magnitude(x) >= 0.5L) {
        const PrecisionScope scope(ctx.bits());
        if (abs(x) >= BigFloat(0.5)) return kernel_eval_closed(m, x, ctx);
    }
    return kernel_eval_series(m, x, ctx);
}

}  // namespace fockcheck
